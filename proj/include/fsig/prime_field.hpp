#ifndef FSIG_PRIME_FIELD_HPP
#define FSIG_PRIME_FIELD_HPP

#include <cstdint>
#include <string>

#include "fsig/errors.hpp"
#include "fsig/rational.hpp"

namespace fsig {

// Deterministic trial division; enough for p < 2^31.
bool is_prime_u32(std::uint32_t n);

// F_p with canonical representatives in [0, p), p an odd-or-2 prime < 2^31.
// Products are formed in 64 bits, inverses by Fermat.  A PrimeField value is
// a lightweight handle; elements are plain uint32_t tagged by their field.
class PrimeField {
  public:
    using Elt = std::uint32_t;

    explicit PrimeField(std::uint32_t p) : p_(p) {
        if (p < 2 || p >= (1u << 31)) throw DomainError("PrimeField: modulus out of range");
        if (!is_prime_u32(p)) throw DomainError("PrimeField: " + std::to_string(p) + " is not prime");
    }

    std::uint32_t characteristic() const { return p_; }

    Elt zero() const { return 0; }
    Elt one() const { return 1; }
    bool is_zero(Elt a) const { return a == 0; }
    bool is_one(Elt a) const { return a == 1; }

    Elt add(Elt a, Elt b) const {
        std::uint32_t s = a + b;  // a,b < p <= 2^31 so no uint32 overflow
        return s >= p_ ? s - p_ : s;
    }
    Elt sub(Elt a, Elt b) const { return a >= b ? a - b : a + p_ - b; }
    Elt neg(Elt a) const { return a == 0 ? 0 : p_ - a; }
    Elt mul(Elt a, Elt b) const {
        return static_cast<Elt>((static_cast<std::uint64_t>(a) * b) % p_);
    }
    Elt pow(Elt base, std::uint64_t e) const {
        Elt acc = one();
        while (e) {
            if (e & 1) acc = mul(acc, base);
            base = mul(base, base);
            e >>= 1;
        }
        return acc;
    }
    Elt inv(Elt a) const {
        if (a == 0) throw DivisionByZero("PrimeField: inverse of zero mod " + std::to_string(p_));
        return pow(a, p_ - 2);
    }
    Elt div(Elt a, Elt b) const { return mul(a, inv(b)); }

    Elt from_int(long long n) const {
        long long r = n % static_cast<long long>(p_);
        if (r < 0) r += p_;
        return static_cast<Elt>(r);
    }
    Elt from_bigint(const BigInt& n) const {
        BigInt r = n % p_;
        if (r < 0) r += p_;
        return static_cast<Elt>(r.get_ui());
    }
    Elt from_rational(const BigRational& q) const {
        Elt den = from_bigint(q.get_den());
        if (den == 0)
            throw DivisionByZero("PrimeField: denominator divisible by " + std::to_string(p_));
        return mul(from_bigint(q.get_num()), inv(den));
    }

    std::string coeff_to_string(Elt a) const { return std::to_string(a); }
    bool coeff_is_negative(Elt) const { return false; }

    friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }
    friend bool operator!=(const PrimeField& a, const PrimeField& b) { return a.p_ != b.p_; }

  private:
    std::uint32_t p_;
};

// The rational field, with the same element interface as PrimeField so the
// polynomial layer can be written once.
class Rationals {
  public:
    using Elt = BigRational;

    std::uint32_t characteristic() const { return 0; }

    Elt zero() const { return BigRational(0); }
    Elt one() const { return BigRational(1); }
    bool is_zero(const Elt& a) const { return a == 0; }
    bool is_one(const Elt& a) const { return a == 1; }

    Elt add(const Elt& a, const Elt& b) const { return a + b; }
    Elt sub(const Elt& a, const Elt& b) const { return a - b; }
    Elt neg(const Elt& a) const { return -a; }
    Elt mul(const Elt& a, const Elt& b) const { return a * b; }
    Elt inv(const Elt& a) const {
        if (a == 0) throw DivisionByZero("Rationals: inverse of zero");
        return 1 / a;
    }
    Elt div(const Elt& a, const Elt& b) const { return mul(a, inv(b)); }

    Elt from_int(long long n) const { return BigRational(to_bigint(n)); }
    Elt from_bigint(const BigInt& n) const { return BigRational(n); }
    Elt from_rational(const BigRational& q) const { return q; }

    std::string coeff_to_string(const Elt& a) const { return to_string(a); }
    bool coeff_is_negative(const Elt& a) const { return sgn(a) < 0; }

    friend bool operator==(const Rationals&, const Rationals&) { return true; }
    friend bool operator!=(const Rationals&, const Rationals&) { return false; }
};

// Runtime field selector: p == 0 requests QQ, otherwise F_p.
struct FieldSpec {
    std::uint32_t p = 0;
    bool is_rational() const { return p == 0; }
    std::string name() const { return p == 0 ? "QQ" : "F_" + std::to_string(p); }
};

}  // namespace fsig

#endif
