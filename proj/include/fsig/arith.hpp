#ifndef FSIG_ARITH_HPP
#define FSIG_ARITH_HPP

#include <vector>

#include "fsig/rational.hpp"

namespace fsig {

// C(n, k) from a memoized Pascal triangle; n >= 0 (DomainError otherwise),
// k < 0 or k > n gives 0.  Thread-safe.
BigInt binom(long long n, long long k);

// The full row [C(n,0), ..., C(n,n)] by the multiplicative recurrence
// C(n,k+1) = C(n,k)(n-k)/(k+1).  Used for single large rows (polynomial
// powers) where caching the whole triangle would be wasteful.
std::vector<BigInt> binom_row(long long n);

// det of the (a+v+1) x (a+v+1) matrix D(k,a,v) with entries C(k, a-i+j),
// via the closed product formula
//   prod_{i=0..a+v} C(k+i, a+i)  /  prod_{i=0..a+v} C(k+v-i, a+v-i).
// Preconditions: 0 <= a <= k and a+v >= 0.  The result is integer-valued.
BigRational det_binomial_formula(long long k, long long a, long long v);

// Same determinant by building the matrix and running fraction-free
// (Bareiss) elimination over the integers.  Independent of the formula.
BigRational det_binomial_naive(long long k, long long a, long long v);

}  // namespace fsig

#endif
