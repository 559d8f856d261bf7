#ifndef FSIG_RATIONAL_HPP
#define FSIG_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "fsig/errors.hpp"

namespace fsig {

using BigInt = mpz_class;
using BigRational = mpq_class;  // always kept in lowest terms, denominator > 0

// gmpxx has no long long overloads; long is 64-bit on every supported target.
inline BigInt to_bigint(long long n) { return BigInt(static_cast<long>(n)); }

// num/den in lowest terms; throws DivisionByZero if den == 0.
BigRational make_rational(const BigInt& num, const BigInt& den);

// Accepts "7", "-3/4", and exact decimal strings like "0.25" (= 1/4).
// Throws DomainError on anything else.
BigRational parse_rational(const std::string& text);

std::string to_string(const BigInt& n);
std::string to_string(const BigRational& q);  // "p/q" or "p" when q is integral

// Decimal expansion truncated toward zero to `digits` fractional digits,
// e.g. (1/3, 4) -> "0.3333". Used only for labeled diagnostic columns.
std::string to_decimal_string(const BigRational& q, int digits);

// A nonnegative rational extended with +infinity (the 1/0 convention used by
// log-canonical thresholds).
class ExtRational {
  public:
    static ExtRational infinity() { return ExtRational(true, 0); }
    static ExtRational finite(BigRational v) { return ExtRational(false, std::move(v)); }

    bool is_infinite() const { return infinite_; }
    // Throws DomainError when infinite.
    const BigRational& value() const;

    // 1/n with 1/0 = infinity; n < 0 is a DomainError.
    static ExtRational inverse_of(const BigInt& n);

    friend bool operator<(const ExtRational& a, const ExtRational& b) {
        if (a.infinite_) return false;
        if (b.infinite_) return true;
        return a.value_ < b.value_;
    }
    friend bool operator==(const ExtRational& a, const ExtRational& b) {
        if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
        return a.value_ == b.value_;
    }

  private:
    ExtRational(bool inf, BigRational v) : infinite_(inf), value_(std::move(v)) {}
    bool infinite_;
    BigRational value_;
};

std::string to_string(const ExtRational& x);  // "inf" or the rational

inline ExtRational min(const ExtRational& a, const ExtRational& b) { return b < a ? b : a; }

}  // namespace fsig

#endif
