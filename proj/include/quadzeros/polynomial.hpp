#ifndef QUADZEROS_POLYNOMIAL_HPP
#define QUADZEROS_POLYNOMIAL_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <type_traits>
#include <utility>
#include <vector>

#include "quadzeros/errors.hpp"
#include "quadzeros/rational.hpp"

namespace quadzeros {

/// Dense univariate polynomial, coefficients in ascending degree.
///
/// The zero polynomial is the empty coefficient list; any other value keeps a
/// nonzero leading coefficient. Floating-point instantiations reject NaN/Inf.
/// Values are immutable once built except through the arithmetic operators.
template <class T>
class Polynomial {
   public:
    using value_type = T;

    Polynomial() = default;
    explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }
    Polynomial(std::initializer_list<T> coeffs) : coeffs_(coeffs) { normalize(); }

    static Polynomial constant(const T& c) { return Polynomial(std::vector<T>{c}); }

    static Polynomial monomial(const T& c, std::size_t k) {
        std::vector<T> v(k + 1, T(0));
        v[k] = c;
        return Polynomial(std::move(v));
    }

    /// The identity polynomial z.
    static Polynomial variable() { return monomial(T(1), 1); }

    bool is_zero() const noexcept { return coeffs_.empty(); }

    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

    const std::vector<T>& coeffs() const noexcept { return coeffs_; }

    T coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : T(0); }

    const T& leading() const {
        if (coeffs_.empty()) throw ZeroPolynomial();
        return coeffs_.back();
    }

    /// Horner evaluation. The accumulator type is the common type of the
    /// coefficient and point types, so a real polynomial evaluates at complex
    /// points without conversion.
    template <class X>
    auto operator()(const X& x) const {
        using R = std::common_type_t<T, X>;
        R acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            acc = acc * x;
            acc = acc + R(*it);
        }
        return acc;
    }

    Polynomial derivative() const {
        if (coeffs_.size() <= 1) return {};
        std::vector<T> d(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * T(static_cast<long>(i));
        return Polynomial(std::move(d));
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        normalize();
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        normalize();
        return *this;
    }

    Polynomial& operator*=(const T& s) {
        for (auto& c : coeffs_) c *= s;
        normalize();
        return *this;
    }

    friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
    friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }
    friend Polynomial operator*(Polynomial p, const T& s) { return p *= s; }
    friend Polynomial operator*(const T& s, Polynomial p) { return p *= s; }

    friend Polynomial operator-(Polynomial p) {
        for (auto& c : p.coeffs_) c = -c;
        return p;
    }

    friend Polynomial operator*(const Polynomial& p, const Polynomial& q) {
        if (p.is_zero() || q.is_zero()) return {};
        std::vector<T> r(p.coeffs_.size() + q.coeffs_.size() - 1, T(0));
        for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
            if (p.coeffs_[i] == T(0)) continue;
            for (std::size_t j = 0; j < q.coeffs_.size(); ++j) r[i + j] += p.coeffs_[i] * q.coeffs_[j];
        }
        return Polynomial(std::move(r));
    }

    Polynomial& operator*=(const Polynomial& q) { return *this = *this * q; }

    friend bool operator==(const Polynomial& p, const Polynomial& q) { return p.coeffs_ == q.coeffs_; }

    /// Multiplication by z^k.
    Polynomial shifted(std::size_t k) const {
        if (is_zero()) return {};
        std::vector<T> v(k, T(0));
        v.insert(v.end(), coeffs_.begin(), coeffs_.end());
        return Polynomial(std::move(v));
    }

    /// Keeps only the terms of degree < n.
    Polynomial truncated(std::size_t n) const {
        if (n >= coeffs_.size()) return *this;
        return Polynomial(std::vector<T>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(n)));
    }

   private:
    void normalize() {
        if constexpr (std::is_floating_point_v<T>) {
            for (const auto& c : coeffs_) {
                if (!std::isfinite(c)) throw InvalidParams("non-finite polynomial coefficient");
            }
        } else if constexpr (std::is_same_v<T, Rational>) {
            // GMP arithmetic assumes canonical operands; Rational(4, 2) is not.
            for (auto& c : coeffs_) c.canonicalize();
        }
        while (!coeffs_.empty() && coeffs_.back() == T(0)) coeffs_.pop_back();
    }

    std::vector<T> coeffs_;
};

using RationalPoly = Polynomial<Rational>;
using FloatPoly = Polynomial<double>;
using ComplexPoly = Polynomial<std::complex<double>>;

/// Euclidean division over a field: p = q*d + r with deg r < deg d.
template <class T>
std::pair<Polynomial<T>, Polynomial<T>> divmod(const Polynomial<T>& p, const Polynomial<T>& d) {
    if (d.is_zero()) throw ZeroPolynomial();
    if (p.degree() < d.degree()) return {Polynomial<T>{}, p};
    std::vector<T> rem = p.coeffs();
    std::vector<T> quot(static_cast<std::size_t>(p.degree() - d.degree() + 1), T(0));
    const auto& dc = d.coeffs();
    const std::size_t dn = dc.size() - 1;
    for (std::size_t k = quot.size(); k-- > 0;) {
        T c = rem[k + dn] / dc[dn];
        quot[k] = c;
        if (c == T(0)) continue;
        for (std::size_t j = 0; j <= dn; ++j) rem[k + j] -= c * dc[j];
    }
    rem.resize(dn);
    return {Polynomial<T>(std::move(quot)), Polynomial<T>(std::move(rem))};
}

/// Monic gcd over Q.
inline RationalPoly gcd(RationalPoly a, RationalPoly b) {
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    Rational lc = a.leading();
    return a * Rational(1 / lc);
}

/// p(scale*z + shift), expanded.
template <class T>
Polynomial<T> compose_affine(const Polynomial<T>& p, const T& scale, const T& shift) {
    const Polynomial<T> inner({shift, scale});
    Polynomial<T> acc;
    const auto& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * inner + Polynomial<T>::constant(*it);
    return acc;
}

inline FloatPoly to_float(const RationalPoly& p) {
    std::vector<double> v;
    v.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) v.push_back(to_double(c));
    return FloatPoly(std::move(v));
}

template <class T>
std::ostream& operator<<(std::ostream& os, const Polynomial<T>& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (p.coeffs()[i] == T(0)) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << p.coeffs()[i] << ")";
        if (i >= 1) os << "*z";
        if (i >= 2) os << "^" << i;
    }
    return os;
}

}  // namespace quadzeros

#endif  // QUADZEROS_POLYNOMIAL_HPP
