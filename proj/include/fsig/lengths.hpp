#ifndef FSIG_LENGTHS_HPP
#define FSIG_LENGTHS_HPP

#include <string>
#include <vector>

#include "fsig/closed_basis.hpp"

// Closed-form colengths of (x^M, y^N, f^K) for the binomial-pair families,
// plus the staircase lemma and the syzygy-gap (WLP) route.  Everything is
// exact integer arithmetic; no polynomial is ever built here.

namespace fsig {

enum class LengthRoute { SimpleFormula, GeneralFormula, WlpFormula, Oracle };

std::string to_string(LengthRoute route);

struct LengthResult {
    long long value = 0;
    LengthRoute route = LengthRoute::SimpleFormula;
    char case_tag = '-';  // 'a'..'d' per formula; '-' for the oracle route
    // Checked inequalities (standing hypotheses and case conditions) with
    // their outcomes, in evaluation order.
    std::vector<std::string> hypotheses;
};

// Colength of (x^beta, y^eta) + (x^(beta-1-t) y^(alpha-beta+1+2t) : 0 <= t < beta)
// for alpha >= beta >= 0, eta >= 0:
//   (a) beta + eta <= alpha -> beta*eta
//   (b) alpha + beta <= eta -> beta*alpha
//   (c) otherwise           -> beta*eta - floor((beta+eta-alpha)^2 / 4)
long long staircase_colength(long long alpha, long long beta, long long eta);

// Colength of (x^m, y^n, (x+y)^k).  In characteristic p the formula needs
// min(m+k, m+n, n+k) <= p.  Cases, evaluated in order:
//   (a) n >= k+m -> km   (b) k >= m+n -> mn   (c) m >= n+k -> kn
//   (d) otherwise -> kn + km + nm - floor((k+n+m)^2 / 4)
LengthResult length_simple(long long k, long long m, long long n, const FieldSpec& field);

// Colength step for J = (x^m, y^n, x^a y^b g):  with a' = min(a, m) and
// b' = min(b, n), the monomials with i < a' or j < b' all survive and the
// rest reduce to the inner ideal J' = (x^(m-a), y^(n-b), g), so
//   ell = m*b' + (n-b')*a' + inner_length,
// and when a >= m or b >= n the inner part is empty: ell = m*n.
long long length_shift(long long m, long long n, long long a, long long b,
                       long long inner_length);

// Colength of (x^M, y^M, (x^a y^b (x+y)^c)^K) — the spec must have N == M
// (unequal bounds are served by the rank oracle).  Needs aK <= M and
// bK <= M; in characteristic p additionally
//   min{ M+(c-a)K, M+(c-b)K, 2M-(a+b)K } <= p,
// where for M == p the generators x^M and (x+y)^M may be exchanged
// (Frobenius), so a and c are swapped first whenever that lowers c.
// Cases, evaluated in order:
//   (a) a >= b+c        -> (a+b+c)KM - a(b+c)K^2
//   (b) (a+b+c)K >= 2M  -> M^2
//   (c) b >= a+c        -> (a+b+c)KM - b(a+c)K^2
//   (d) otherwise       -> (a+b+c)KM - floor((a+b+c)^2 K^2 / 4)
LengthResult length_general(const IdealSpec& spec);

// Colength of (x^m, y^n, (x+y)^k) in characteristic p via the weak
// Lefschetz route.  Standing hypothesis, checked literally on the passed
// names: 0 <= m, n <= p - k.  With {k,m,n} sorted into d0 >= d1 >= d2 and
// socle degree t = d0+d1+d2-3:
//   (a) 2*d0 <= t+1 -> C(floor(t/2)+2, 2) - sum_i C(floor(t/2)-d_i+2, 2)
//   (b) otherwise   -> d1*d2
LengthResult length_wlp(long long k, long long m, long long n, std::uint32_t p);

}  // namespace fsig

#endif
