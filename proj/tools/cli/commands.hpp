#ifndef QUADZEROS_CLI_COMMANDS_HPP
#define QUADZEROS_CLI_COMMANDS_HPP

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cli/table.hpp"
#include "quadzeros/quadzeros.hpp"

namespace quadzeros::cli {

using AnyParams = std::variant<NormParams, GeneralParams>;

/// Raw parameter flags as typed on the command line.
struct ParamInput {
    std::optional<std::string> a, b;
    std::optional<std::string> c, b0, b1, a0, a1;

    bool general() const { return c || b0 || b1 || a0 || a1; }
};

inline AnyParams resolve(const ParamInput& in) {
    if (in.general()) {
        if (in.a || in.b) throw InvalidParams("give either --a/--b or --c/--b0/--b1/--a0/--a1, not both");
        if (!(in.c && in.b0 && in.b1 && in.a0 && in.a1)) {
            throw InvalidParams("general parameters need all of --c --b0 --b1 --a0 --a1");
        }
        GeneralParams g{parse_rational(*in.c), parse_rational(*in.b0), parse_rational(*in.b1), parse_rational(*in.a0),
                        parse_rational(*in.a1)};
        g.validate();
        return g;
    }
    if (!(in.a && in.b)) throw InvalidParams("--a and --b are required");
    NormParams p{parse_rational(*in.a), parse_rational(*in.b)};
    p.validate();
    return p;
}

inline NormParams resolve_norm(const ParamInput& in) {
    const AnyParams any = resolve(in);
    if (const auto* g = std::get_if<GeneralParams>(&any)) return normalize(*g);
    return std::get<NormParams>(any);
}

inline Json params_json(const AnyParams& any) {
    Json j = Json::object();
    if (const auto* p = std::get_if<NormParams>(&any)) {
        j["a"] = p->a.get_str();
        j["b"] = p->b.get_str();
    } else {
        const auto& g = std::get<GeneralParams>(any);
        j["c"] = g.c.get_str();
        j["b0"] = g.b0.get_str();
        j["b1"] = g.b1.get_str();
        j["a0"] = g.a0.get_str();
        j["a1"] = g.a1.get_str();
    }
    return j;
}

/// Empty table carrying the column and summary schema of a command.
inline Table schema_for(const std::string& command) {
    Table t;
    t.command = command;
    auto col = [&](std::string name, CellType type) { t.columns.push_back({std::move(name), type}); };
    auto sum = [&](std::string key, CellType type) { t.add_summary(std::move(key), std::monostate{}, type); };
    if (command == "gen") {
        col("m", CellType::Int);
        col("degree", CellType::Int);
        col("coeffs", CellType::RatList);
    } else if (command == "classify") {
        col("a", CellType::Rat);
        col("b", CellType::Rat);
        col("condition", CellType::Bool);
        col("nonreal_m", CellType::Int);
        col("verified_mmax", CellType::Int);
        col("status", CellType::Text);
    } else if (command == "interval") {
        col("a", CellType::Rat);
        col("b", CellType::Rat);
        col("zeta0", CellType::Real);
        col("endpoint", CellType::Real);
        col("degenerate", CellType::Bool);
        col("kind", CellType::Text);
        col("finite_endpoint", CellType::Real);
    } else if (command == "thetascan") {
        col("theta", CellType::Real);
        col("zeta", CellType::Real);
        col("tau", CellType::Real);
        col("z", CellType::Real);
        col("residual", CellType::Real);
        sum("m", CellType::Int);
        sum("grid", CellType::Int);
        sum("asymptote", CellType::Real);
        sum("min_forward_difference", CellType::Real);
        sum("monotone", CellType::Bool);
        sum("g_zero_count", CellType::Int);
        sum("floor_m_half", CellType::Int);
        sum("subinterval_counts", CellType::Text);
    } else if (command == "witness") {
        col("regime", CellType::Text);
        col("z_re", CellType::Real);
        col("z_im", CellType::Real);
        col("theta", CellType::Real);
        col("root_re", CellType::Real);
        col("root_im", CellType::Real);
        col("root_modulus", CellType::Real);
        col("factorization_residual", CellType::Real);
        col("confirmed_m", CellType::Int);
        col("x_prime", CellType::Real);
        col("zeta_prime", CellType::Real);
    } else if (command == "density") {
        col("z", CellType::Real);
        col("m", CellType::Int);
        sum("endpoint", CellType::Real);
        sum("window_lo", CellType::Real);
        sum("count", CellType::Int);
        sum("max_gap", CellType::Real);
    } else {
        throw InvalidParams("unknown command: " + command);
    }
    return t;
}

namespace detail {

inline Table fresh(const std::string& command) {
    Table t = schema_for(command);
    t.summary.clear();
    t.summary_types.clear();
    return t;
}

inline Cell opt_int(const std::optional<int>& v) {
    if (v) return static_cast<std::int64_t>(*v);
    return std::monostate{};
}

inline Cell opt_real(const std::optional<double>& v) {
    if (v) return *v;
    return std::monostate{};
}

inline void require_positive(double v, const char* what) {
    if (!(v > 0)) throw InvalidParams(std::string(what) + " must be positive");
}

inline void require_grid(int g, const char* what) {
    if (g < 2) throw InvalidParams(std::string(what) + " must be >= 2");
}

}  // namespace detail

inline Table cmd_gen(const AnyParams& params, int m_max) {
    Table t = detail::fresh("gen");
    t.config = params_json(params);
    t.config["mmax"] = m_max;
    const PolySequence seq = std::holds_alternative<NormParams>(params) ? gen_H(std::get<NormParams>(params), m_max)
                                                                        : gen_P(std::get<GeneralParams>(params), m_max);
    for (std::size_t m = 0; m < seq.size(); ++m) {
        const auto& p = seq[m];
        t.rows.push_back({static_cast<std::int64_t>(m), static_cast<std::int64_t>(p.degree()), RationalList(p.coeffs())});
    }
    return t;
}

/// a values amin, amin + astep, ... <= amax; empty when amin > amax.
inline std::vector<Rational> a_range(const Rational& amin, const Rational& amax, const Rational& astep) {
    if (astep <= 0) throw InvalidParams("--astep must be positive");
    std::vector<Rational> out;
    for (Rational a = amin; a <= amax; a += astep) {
        out.push_back(a);
        if (out.size() > 100000) throw InvalidParams("a-range has more than 100000 points");
    }
    return out;
}

inline Table cmd_classify(const Rational& b, const std::vector<Rational>& a_values, int m_max, int m_cap) {
    if (b < 0) throw InvalidParams("b must be >= 0");
    if (m_max < 0 || m_cap < 1) throw InvalidParams("--mmax must be >= 0 and --mcap >= 1");
    Table t = detail::fresh("classify");
    t.config["b"] = b.get_str();
    Json avals = Json::array();
    for (const auto& a : a_values) avals.push_back(a.get_str());
    t.config["a_values"] = std::move(avals);
    t.config["mmax"] = m_max;
    t.config["mcap"] = m_cap;

    auto classify_one = [&](const Rational& a) -> std::vector<Cell> {
        const NormParams p{a, b};
        const bool cond = reality_condition(p);
        std::optional<int> bad;
        std::string status;
        std::optional<int> verified;
        if (cond) {
            const PolySequence seq = gen_H(p, m_max);
            for (int m = 1; m <= m_max && !bad; ++m) {
                const auto& h = seq[static_cast<std::size_t>(m)];
                if (h.degree() >= 1 && !verdict(h).all_real) bad = m;
            }
            status = bad ? "violation" : "all_real";
            if (!bad) verified = m_max;
        } else {
            bad = confirm_nonreal(p, m_cap);
            status = bad ? "nonreal" : "not_found";
        }
        return {a, b, cond, detail::opt_int(bad), detail::opt_int(verified), status};
    };
    t.rows = parallel_map(a_values, classify_one);
    return t;
}

inline Table cmd_interval(const AnyParams& params) {
    Table t = detail::fresh("interval");
    t.config = params_json(params);
    const NormParams p = std::holds_alternative<NormParams>(params) ? std::get<NormParams>(params)
                                                                    : normalize(std::get<GeneralParams>(params));
    const Zeta0Result z = zeta0(p);
    const IntervalSpec spec = std::holds_alternative<NormParams>(params) ? interval_H(p)
                                                                         : interval_P(std::get<GeneralParams>(params));
    t.rows.push_back({p.a, p.b, z.zeta0, z.endpoint, z.degenerate,
                      std::string(spec.kind == IntervalSpec::Kind::LeftInfinite ? "left_infinite" : "right_infinite"),
                      spec.finite_endpoint});
    return t;
}

inline Table cmd_thetascan(const NormParams& np, int m, int grid, int samples) {
    detail::require_grid(grid, "--grid");
    detail::require_grid(samples, "--samples");
    if (m < 0) throw InvalidParams("--m must be >= 0");
    if (!reality_condition(np)) throw InvalidParams("thetascan: reality condition fails for these parameters");
    const RealParams p(np);
    Table t = detail::fresh("thetascan");
    t.config["a"] = np.a.get_str();
    t.config["b"] = np.b.get_str();
    t.config["m"] = m;
    t.config["grid"] = grid;
    t.config["samples"] = samples;

    const auto ta = asymptote(p);
    std::vector<double> thetas;
    for (int i = 1; i <= samples; ++i) {
        const double theta = std::numbers::pi / 2 * (1.0 + i / (samples + 1.0));
        if (ta && std::abs(theta - *ta) < kAsymptoteExclusion) continue;
        thetas.push_back(theta);
    }
    const auto rows = parallel_map(thetas, [&](double theta) {
        const ThetaSample s = sample(p, theta);
        return std::vector<Cell>{s.theta, s.zeta, s.tau, s.z, s.residual};
    });
    t.rows = rows;

    const double worst = monotonicity_scan(p, grid);
    const auto reports = count_g_zeros(p, m, grid);
    std::string per_j;
    for (const auto& r : reports) {
        per_j += (per_j.empty() ? "" : ";") + std::to_string(r.h) + ":" + std::to_string(r.zero_count);
        if (r.contains_asymptote) per_j += "*";
    }
    t.add_summary("m", static_cast<std::int64_t>(m), CellType::Int);
    t.add_summary("grid", static_cast<std::int64_t>(grid), CellType::Int);
    t.add_summary("asymptote", detail::opt_real(ta), CellType::Real);
    t.add_summary("min_forward_difference", worst, CellType::Real);
    t.add_summary("monotone", worst > 0, CellType::Bool);
    t.add_summary("g_zero_count", static_cast<std::int64_t>(total_zero_count(reports)), CellType::Int);
    t.add_summary("floor_m_half", static_cast<std::int64_t>(m / 2), CellType::Int);
    t.add_summary("subinterval_counts", per_j, CellType::Text);
    return t;
}

/// Picks the regime from the failing inequality; m_cap = 0 skips the exact
/// confirmation sweep.
inline Table cmd_witness(const NormParams& p, int m_cap) {
    if (m_cap < 0) throw InvalidParams("--mcap must be >= 0");
    p.validate();
    Table t = detail::fresh("witness");
    t.config["a"] = p.a.get_str();
    t.config["b"] = p.b.get_str();
    t.config["mcap"] = m_cap;
    WitnessResult w;
    if (p.a < -p.b - 1) {
        w = witness_below(p, m_cap);
    } else if (27 * p.a > p.b + 9) {
        w = witness_above(p, m_cap);
    } else {
        throw InvalidParams("witness: reality condition holds, no witness exists");
    }
    t.rows.push_back({std::string(to_string(w.regime)), w.witness_z.real(), w.witness_z.imag(), w.theta,
                      w.fstar_root.real(), w.fstar_root.imag(), w.root_modulus, w.factorization_residual,
                      detail::opt_int(w.confirmed_m), detail::opt_real(w.x_prime), detail::opt_real(w.zeta_prime)});
    return t;
}

inline Table cmd_density(const NormParams& p, int m_max, double window, double tol) {
    detail::require_positive(window, "--window");
    detail::require_positive(tol, "--tol");
    Table t = detail::fresh("density");
    t.config["a"] = p.a.get_str();
    t.config["b"] = p.b.get_str();
    t.config["mmax"] = m_max;
    t.config["window"] = window;
    t.config["tol"] = tol;
    const DensityProfile d = density_profile(p, m_max, window, tol);
    for (std::size_t i = 0; i < d.zeros.size(); ++i) t.rows.push_back({d.zeros[i], static_cast<std::int64_t>(d.orders[i])});
    t.add_summary("endpoint", d.endpoint, CellType::Real);
    t.add_summary("window_lo", d.window_lo, CellType::Real);
    t.add_summary("count", static_cast<std::int64_t>(d.zeros.size()), CellType::Int);
    t.add_summary("max_gap", d.max_gap, CellType::Real);
    return t;
}

}  // namespace quadzeros::cli

#endif  // QUADZEROS_CLI_COMMANDS_HPP
