#ifndef FSIG_FSIG_HPP
#define FSIG_FSIG_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "fsig/rational.hpp"

namespace fsig {

// ---------------------------------------------------------------------------
// Log canonical thresholds
// ---------------------------------------------------------------------------

// Threshold of a pair together with the quantities it is the minimum of.
// Components equal to 1/0 are genuine infinities, never sentinel values.
struct ThresholdInfo {
    ExtRational lambda;    // min{inv_a, inv_b, inv_c, lambda_0}
    ExtRational lambda_0;  // the mixed-term bound
    ExtRational inv_a;
    ExtRational inv_b;
    ExtRational inv_c;
};

// Threshold for the pair (A^2, x^a y^b (x+y)^c) at the origin.
// Requires a >= b >= c >= 0, not all zero; lambda_0 = 2/(a+b+c).
ThresholdInfo lct_simple(long long a, long long b, long long c);

// Threshold for (A^2, x^a y^b (x^u + y^v)^c) at the origin.
// Requires u, v, c >= 1 and a, b >= 0;
// lambda_0 = (1/u + 1/v) / (a/u + b/v + c) = (u + v) / (a v + b u + c u v).
ThresholdInfo lct_general(long long a, long long b, long long c, long long u,
                          long long v);

// ---------------------------------------------------------------------------
// Piecewise quadratic functions on [0, lambda]
// ---------------------------------------------------------------------------

// A continuous piecewise-quadratic function psi on [0, infinity):
//   * breakpoints = {0 = t_0 < t_1 < ... < t_k = lambda};
//   * pieces[i] = {c0, c1, c2} gives psi(t) = c0 + c1 t + c2 t^2 on
//     [t_i, t_{i+1});
//   * psi is identically 0 on [lambda, infinity).
// Construction goes through make(), which checks psi(0) = 1, continuity at
// every interior breakpoint, psi(lambda) = 0, and convexity/monotonicity on a
// 100-triple sample grid; violations throw Error.
class PiecewiseFn {
  public:
    static PiecewiseFn make(std::vector<BigRational> breakpoints,
                            std::vector<std::array<BigRational, 3>> pieces);

    const std::vector<BigRational>& breakpoints() const { return breakpoints_; }
    const std::vector<std::array<BigRational, 3>>& pieces() const {
        return pieces_;
    }
    const BigRational& lambda() const { return breakpoints_.back(); }

    // psi(t); t < 0 is a DomainError, t >= lambda gives 0.
    BigRational eval(const BigRational& t) const;

    // {"breakpoints": [...], "pieces": [{"coeffs": [c0, c1, c2]}, ...],
    //  "lambda": "..."} with every number an exact rational string.
    // indent < 0 emits the compact single-line form.
    std::string to_json_string(int indent = -1) const;

  private:
    PiecewiseFn() = default;
    std::vector<BigRational> breakpoints_;
    std::vector<std::array<BigRational, 3>> pieces_;
};

// ---------------------------------------------------------------------------
// F-signature values
// ---------------------------------------------------------------------------

// F-signature of the pair (A^2, (x^a y^b)^t): (1 - a t)(1 - b t) below
// min{1/a, 1/b} and 0 at or above it.  Independent of the characteristic.
// Requires a, b >= 0 and t >= 0.
BigRational fsig_monomial(long long a, long long b, const BigRational& t);

// psi_p(r/p), the F-signature of (A^2, (x^a y^b (x+y)^c)^{r/p}) in
// characteristic p.  The inputs are sorted into a >= b >= c first (at cutoff
// exponent p the pair is symmetric in the three linear factors).  Requires p
// prime, r >= 0 and r/p < min{1/a, 2/(a+b+c)}; r at or beyond the threshold
// is a HypothesisViolation, never clamped.  r = 0 gives 1.
BigRational fsig_at_p(long long a, long long b, long long c, std::uint32_t p,
                      long long r);

// ---------------------------------------------------------------------------
// Limit F-signature functions
// ---------------------------------------------------------------------------

// Limit F-signature function psi(t) = lim_p psi_p(t) for the pair
// (A^2, (x^a y^b (x+y)^c)^t).  Requires a >= b >= c >= 0, not all zero.
// One quadratic piece on [0, lambda):
//   a >= b + c: (1 - a t)(1 - (b+c) t);   otherwise (1 - (a+b+c) t / 2)^2.
PiecewiseFn limit_fsig_simple(long long a, long long b, long long c);

// Limit F-signature function for (A^2, (x^a y^b (x^u + y^v)^c)^t).
// Requires u, v, c >= 1 and a, b >= 0.  Up to four quadratic case formulas
// glued at the parameter values where the dominant corner of the Newton
// polygon changes.
PiecewiseFn limit_fsig_general(long long a, long long b, long long c,
                               long long u, long long v);

// F-signature of (A^2, x^{r1} y^{r2} (x+y)^{r3}) with rational exponents.
// Requires r1 >= r2 >= r3 > 0.  0 when r1 >= 1 or r1 + r2 + r3 >= 2;
// (1 - r1)(1 - r2 - r3) when r1 >= r2 + r3; otherwise
// (1 - (r1 + r2 + r3)/2)^2.
BigRational limit_fsig_rational_exponents(const BigRational& r1,
                                          const BigRational& r2,
                                          const BigRational& r3);

// ---------------------------------------------------------------------------
// Normalized volumes
// ---------------------------------------------------------------------------

// Normalized volume of the valuation cone for (A^2, (x^a y^b (x+y)^c)^t).
// Requires a >= b >= c >= 0 and t >= 0.  0 at or above min{1/a, 2/(a+b+c)};
// below it 4 (1 - (b+c) t)(1 - a t) when a >= b + c, else (2 - (a+b+c) t)^2.
// The all-zero triple has infinite threshold and constant volume 4.
BigRational nvol_simple(long long a, long long b, long long c,
                        const BigRational& t);

// Checks nvol_simple(a, b, c, t) == 4 * limit_fsig_simple(a, b, c)(t)
// exactly.  Domain errors from either side propagate.
bool corollary_b_check(long long a, long long b, long long c,
                       const BigRational& t);

// ---------------------------------------------------------------------------
// Non-stabilization of psi_p
// ---------------------------------------------------------------------------

// A characteristic where psi_p differs from the limit at a sample point,
// witnessing that the F-signature does not stabilize for a = b = c = 1.
struct NonstabilizationWitness {
    bool found = false;
    std::uint32_t p = 0;    // characteristic
    long long r = 0;        // odd numerator; the sample point is r/p
    BigRational psi_p;      // psi_p(r/p)
    BigRational psi_limit;  // psi(r/p)
};

// Searches characteristics p <= max_p in ascending order and odd r with
// 0 < r/p < 2/3 for a point where psi_p(r/p) != psi(r/p) for a = b = c = 1.
NonstabilizationWitness find_nonstabilization_witness(std::uint32_t max_p);

}  // namespace fsig

#endif
