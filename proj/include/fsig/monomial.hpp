#ifndef FSIG_MONOMIAL_HPP
#define FSIG_MONOMIAL_HPP

#include <cstdint>
#include <string>

#include "fsig/errors.hpp"

namespace fsig {

// Monomials x^i y^j in the two fixed variables.  Exponents are capped well
// below uint32 range so degree arithmetic can never overflow.
inline constexpr std::uint32_t kMaxExponent = 1u << 20;

struct Monomial {
    std::uint32_t i = 0;  // x-exponent
    std::uint32_t j = 0;  // y-exponent

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

inline Monomial mono(std::uint32_t i, std::uint32_t j) {
    if (i > kMaxExponent || j > kMaxExponent)
        throw DomainError("monomial exponent exceeds guard of 2^20");
    return Monomial{i, j};
}

inline std::uint32_t total_degree(const Monomial& m) { return m.i + m.j; }

// Graded lexicographic order with x > y: compare total degree, then the
// x-exponent.  This is the one term order used everywhere.
inline bool grlex_less(const Monomial& a, const Monomial& b) {
    std::uint32_t da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a.i < b.i;
}
inline bool grlex_greater(const Monomial& a, const Monomial& b) { return grlex_less(b, a); }

struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return grlex_less(b, a); }
};

inline bool divides(const Monomial& d, const Monomial& m) { return d.i <= m.i && d.j <= m.j; }

inline Monomial mono_mul(const Monomial& a, const Monomial& b) { return mono(a.i + b.i, a.j + b.j); }

inline Monomial mono_quotient(const Monomial& m, const Monomial& d) {
    if (!divides(d, m)) throw DomainError("mono_quotient: not divisible");
    return Monomial{m.i - d.i, m.j - d.j};
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    return Monomial{a.i > b.i ? a.i : b.i, a.j > b.j ? a.j : b.j};
}

inline std::string to_string(const Monomial& m) {
    if (m.i == 0 && m.j == 0) return "1";
    std::string s;
    if (m.i == 1) s += "x";
    if (m.i > 1) s += "x^" + std::to_string(m.i);
    if (m.i > 0 && m.j > 0) s += "*";
    if (m.j == 1) s += "y";
    if (m.j > 1) s += "y^" + std::to_string(m.j);
    return s;
}

}  // namespace fsig

#endif
