#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cli/commands.hpp"

namespace {

using namespace quadzeros;
using namespace quadzeros::cli;

constexpr int kExitInvalid = 2;
constexpr int kExitIo = 3;
constexpr int kExitInternal = 4;

struct Output {
    std::string format = "csv";
    std::string path;
};

void add_output(CLI::App* sub, Output& out) {
    sub->add_option("--format", out.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", out.path, "Output path (default stdout)");
}

void add_norm(CLI::App* sub, ParamInput& in) {
    sub->add_option("--a", in.a, "Normalized parameter a (rational, e.g. -2.1 or 10/27)");
    sub->add_option("--b", in.b, "Normalized parameter b >= 0");
}

void add_general(CLI::App* sub, ParamInput& in) {
    sub->add_option("--c", in.c, "Constant coefficient C(z) = c");
    sub->add_option("--b0", in.b0, "B(z) = b0 + b1 z");
    sub->add_option("--b1", in.b1);
    sub->add_option("--a0", in.a0, "A(z) = a0 + a1 z");
    sub->add_option("--a1", in.a1);
}

/// Renders first so a failing command never leaves a partial file behind.
int emit(const Table& t, const Output& out) {
    std::ostringstream buf;
    if (out.format == "json") {
        write_json(buf, t);
    } else {
        write_csv(buf, t);
    }
    if (out.path.empty()) {
        std::cout << buf.str();
        std::cout.flush();
        return std::cout ? 0 : kExitIo;
    }
    std::ofstream file(out.path, std::ios::binary);
    if (!file) {
        std::cerr << "error: cannot open " << out.path << " for writing\n";
        return kExitIo;
    }
    file << buf.str();
    file.close();
    if (!file) {
        std::cerr << "error: write to " << out.path << " failed\n";
        return kExitIo;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quadzeros: zeros of polynomial sequences from a four-term recurrence"};
    app.require_subcommand(1);

    Output out;
    ParamInput params;
    int m_max = 10;
    int m = 10;
    int m_cap = 60;
    int grid = 4096;
    int samples = 256;
    double window = 5.0;
    double tol = 1e-12;
    std::string b_text;
    std::vector<std::string> a_values;
    std::optional<std::string> amin, amax, astep;

    std::function<Table()> run;

    auto* gen = app.add_subcommand("gen", "Coefficient table of H_0..H_mmax (or P_m for general parameters)");
    add_norm(gen, params);
    add_general(gen, params);
    gen->add_option("--mmax", m_max, "Largest index")->check(CLI::NonNegativeNumber);
    add_output(gen, out);
    gen->callback([&] { run = [&] { return cmd_gen(resolve(params), m_max); }; });

    auto* classify = app.add_subcommand("classify", "Reality classification over a sweep of a for fixed b");
    classify->add_option("--b", b_text, "Parameter b >= 0")->required();
    classify->add_option("--avals", a_values, "Explicit a values");
    classify->add_option("--amin", amin);
    classify->add_option("--amax", amax);
    classify->add_option("--astep", astep);
    classify->add_option("--mmax", m_max = 40, "Verify all-real up to this index when the condition holds");
    classify->add_option("--mcap", m_cap, "Search cap for a nonreal zero when the condition fails");
    add_output(classify, out);
    classify->callback([&] {
        run = [&] {
            std::vector<Rational> as;
            for (const auto& s : a_values) as.push_back(parse_rational(s));
            if (amin || amax || astep) {
                if (!(amin && amax && astep)) throw InvalidParams("--amin, --amax and --astep go together");
                for (const auto& a : a_range(parse_rational(*amin), parse_rational(*amax), parse_rational(*astep))) {
                    as.push_back(a);
                }
            }
            return cmd_classify(parse_rational(b_text), as, m_max, m_cap);
        };
    });

    auto* interval = app.add_subcommand("interval", "Right endpoint and zeta0 of the zero interval");
    add_norm(interval, params);
    add_general(interval, params);
    add_output(interval, out);
    interval->callback([&] { run = [&] { return cmd_interval(resolve(params)); }; });

    auto* thetascan = app.add_subcommand("thetascan", "Theta samples, monotonicity and g_m zero counts");
    add_norm(thetascan, params);
    thetascan->add_option("--m", m, "Index for the g_m zero count");
    thetascan->add_option("--grid", grid, "Grid size for the monotonicity and zero scans");
    thetascan->add_option("--samples", samples, "Number of emitted theta samples");
    add_output(thetascan, out);
    thetascan->callback([&] { run = [&] { return cmd_thetascan(resolve_norm(params), m, grid, samples); }; });

    auto* witness = app.add_subcommand("witness", "Nonreal limit point of zeros when the reality condition fails");
    add_norm(witness, params);
    witness->add_option("--mcap", m_cap, "Exact confirmation cap (0 skips the sweep)");
    add_output(witness, out);
    witness->callback([&] { run = [&] { return cmd_witness(resolve_norm(params), m_cap); }; });

    auto* density = app.add_subcommand("density", "Zeros of H_1..H_mmax near the endpoint and their largest gap");
    add_norm(density, params);
    density->add_option("--mmax", m_max, "Largest index");
    density->add_option("--window", window, "Window width below the endpoint");
    density->add_option("--tol", tol, "Root refinement tolerance");
    add_output(density, out);
    density->callback([&] { run = [&] { return cmd_density(resolve_norm(params), m_max, window, tol); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInvalid;
    }

    try {
        return emit(run(), out);
    } catch (const InvalidParams& e) {
        std::cerr << "invalid parameters: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
}
