// Exact integer helpers shared by every module.
#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace spin6 {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Thrown for malformed inputs: wrong ranks, broken invariants, violated preconditions.
class InvalidArgument : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

inline Integer abs_value(const Integer& a) { return a < 0 ? Integer(-a) : a; }

/// Non-negative gcd; gcd(0, 0) = 0.
inline Integer gcd(const Integer& a, const Integer& b) {
    Integer x = abs_value(a), y = abs_value(b);
    while (y != 0) {
        Integer t = x % y;
        x = std::move(y);
        y = std::move(t);
    }
    return x;
}

/// Representative of a mod m in [0, |m|).
inline Integer floor_mod(const Integer& a, const Integer& m) {
    if (m == 0) throw InvalidArgument("floor_mod: zero modulus");
    Integer r = a % m;
    if (r < 0) r += abs_value(m);
    return r;
}

inline bool divides(const Integer& d, const Integer& a) {
    if (d == 0) return a == 0;
    return a % d == 0;
}

inline Integer floor_div(const Integer& a, const Integer& b) {
    if (b == 0) throw InvalidArgument("floor_div: division by zero");
    Integer q = a / b;  // truncates toward zero
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline bool is_even(const Integer& a) { return (a & 1) == 0; }

struct ExtendedGcd {
    Integer g;  // non-negative
    Integer x;  // a*x + b*y == g
    Integer y;
};

inline ExtendedGcd extended_gcd(const Integer& a, const Integer& b) {
    Integer old_r = a, r = b;
    Integer old_s = 1, s = 0;
    Integer old_t = 0, t = 1;
    while (r != 0) {
        Integer q = old_r / r;
        Integer tmp = old_r - q * r;
        old_r = std::move(r);
        r = std::move(tmp);
        tmp = old_s - q * s;
        old_s = std::move(s);
        s = std::move(tmp);
        tmp = old_t - q * t;
        old_t = std::move(t);
        t = std::move(tmp);
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    return {old_r, old_s, old_t};
}

/// Content of a list of integers: gcd of all entries (0 for the zero list).
inline Integer content(std::span<const Integer> values) {
    Integer g = 0;
    for (const auto& v : values) g = gcd(g, v);
    return g;
}

inline Integer integer_sqrt_floor(const Integer& n) {
    if (n < 0) throw InvalidArgument("integer_sqrt_floor: negative argument");
    return boost::multiprecision::sqrt(n);
}

inline std::string to_string(const Integer& a) { return a.str(); }

inline std::string to_string(const Rational& q) {
    if (boost::multiprecision::denominator(q) == 1) return boost::multiprecision::numerator(q).str();
    return boost::multiprecision::numerator(q).str() + "/" + boost::multiprecision::denominator(q).str();
}

// ---------------------------------------------------------------------------
// Univariate polynomials of degree <= 3 with integer coefficients.
// coeffs[i] is the coefficient of t^i.

namespace detail {

inline Integer horner(std::span<const Integer> coeffs, const Integer& t) {
    Integer acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * t + *it;
    return acc;
}

inline int sign(const Integer& a) { return a > 0 ? 1 : (a < 0 ? -1 : 0); }

// Integer points near which the polynomial may stop being monotone.
inline std::vector<Integer> critical_neighbourhood(std::span<const Integer> p) {
    std::vector<Integer> centres;
    const auto deg = p.size() - 1;
    if (deg == 2) {
        // p'(t) = 2 a t + b
        centres.push_back(floor_div(-p[1], 2 * p[2]));
    } else if (deg == 3) {
        // p'(t) = 3 a t^2 + 2 b t + c
        const Integer A = 3 * p[3], B = 2 * p[2], C = p[1];
        const Integer disc = B * B - 4 * A * C;
        if (disc >= 0) {
            const Integer s = integer_sqrt_floor(disc);
            centres.push_back(floor_div(-B - s, 2 * A));
            centres.push_back(floor_div(-B + s, 2 * A));
        }
    }
    std::vector<Integer> pts;
    for (const auto& c : centres)
        for (int d = -2; d <= 2; ++d) pts.push_back(c + d);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

// Root of a polynomial that is monotone on [lo, hi], if an integer one exists there.
inline std::optional<Integer> bisect_monotone(std::span<const Integer> p, Integer lo, Integer hi) {
    Integer vlo = horner(p, lo), vhi = horner(p, hi);
    if (vlo == 0) return lo;
    if (vhi == 0) return hi;
    if (sign(vlo) == sign(vhi)) return std::nullopt;
    while (hi - lo > 1) {
        Integer mid = floor_div(lo + hi, 2);
        Integer vm = horner(p, mid);
        if (vm == 0) return mid;
        if (sign(vm) == sign(vlo)) {
            lo = std::move(mid);
            vlo = std::move(vm);
        } else {
            hi = std::move(mid);
        }
    }
    return std::nullopt;
}

}  // namespace detail

/// Thrown when a root query is made on the zero polynomial.
class ZeroPolynomial : public InvalidArgument {
  public:
    ZeroPolynomial() : InvalidArgument("polynomial is identically zero") {}
};

/// All distinct integer roots, ascending. Degree must be at most 3.
/// Roots are isolated exactly: monotone segments between the critical points
/// are bisected inside the Cauchy bound.
inline std::vector<Integer> integer_roots(std::vector<Integer> p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    if (p.empty()) throw ZeroPolynomial();
    if (p.size() > 4) throw InvalidArgument("integer_roots: degree above 3 is not supported");

    std::vector<Integer> roots;
    if (p[0] == 0) {
        roots.push_back(0);
        std::size_t shift = 0;
        while (p[shift] == 0) ++shift;
        p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(shift));
    }
    if (p.size() == 1) return roots;

    const Integer& lead = p.back();
    Integer bound = 0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) bound = std::max(bound, abs_value(p[i]));
    bound = bound / abs_value(lead) + 2;

    auto crit = detail::critical_neighbourhood(p);
    std::vector<Integer> found;
    for (const auto& c : crit)
        if (c >= -bound && c <= bound && detail::horner(p, c) == 0) found.push_back(c);

    // Monotone segments between (and outside) the critical neighbourhoods.
    std::vector<Integer> cuts;
    cuts.push_back(-bound);
    for (const auto& c : crit)
        if (c > -bound && c < bound) cuts.push_back(c);
    cuts.push_back(bound);
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        if (cuts[i] >= cuts[i + 1]) continue;
        if (auto r = detail::bisect_monotone(p, cuts[i], cuts[i + 1])) found.push_back(*r);
    }

    roots.insert(roots.end(), found.begin(), found.end());
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

/// All distinct rational roots, ascending, for degree <= 3.
/// With lead coefficient a and degree d, s = a t turns a^(d-1) p(t) into a monic
/// integer polynomial whose rational roots are necessarily integers.
inline std::vector<Rational> rational_roots(std::vector<Integer> p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    if (p.empty()) throw ZeroPolynomial();
    const std::size_t d = p.size() - 1;
    if (d == 0) return {};
    const Integer a = p.back();
    std::vector<Integer> monic(d + 1);
    monic[d] = 1;
    Integer power = 1;  // a^(d-1-i), built from i = d-1 downward
    for (std::size_t k = 0; k < d; ++k) {
        const std::size_t i = d - 1 - k;
        monic[i] = p[i] * power;
        power *= a;
    }
    std::vector<Rational> out;
    for (const auto& s : integer_roots(monic)) out.push_back(a < 0 ? Rational(-s, -a) : Rational(s, a));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace spin6
