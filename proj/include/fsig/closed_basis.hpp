#ifndef FSIG_CLOSED_BASIS_HPP
#define FSIG_CLOSED_BASIS_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "fsig/poly.hpp"

namespace fsig {

// The ideal (x^M, y^N, (x^a y^b (x+y)^c)^K) over the field selected by
// `field` (p == 0 means QQ).  The closed Groebner basis below needs
// M + (c-a)K <= p in characteristic p; out-of-hypothesis instances must use
// the brute-force oracle instead.
struct IdealSpec {
    long long M = 1, N = 1, K = 1;
    long long a = 0, b = 0, c = 0;
    FieldSpec field;

    void validate() const {
        if (M < 1 || N < 1 || K < 1) throw DomainError("IdealSpec: M, N, K must be positive");
        if (a < 0 || b < 0 || c < 0) throw DomainError("IdealSpec: a, b, c must be nonnegative");
    }
};

template <typename F>
struct GroebnerBasis {
    std::vector<Poly<F>> generators;
    std::vector<Monomial> lt_ideal;  // minimal generating set, grlex-ascending
    int case_tag = 0;                // 1..3 for the closed construction, 0 otherwise
};

inline std::uint32_t checked_exp(long long e) {
    if (e < 0 || e > static_cast<long long>(kMaxExponent))
        throw DomainError("exponent out of range: " + std::to_string(e));
    return static_cast<std::uint32_t>(e);
}

// Minimal generating set of the monomial ideal generated by `gens`:
// divisors sort strictly earlier in grlex, so one ascending sweep suffices.
inline std::vector<Monomial> minimalize_lt(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), grlex_less);
    std::vector<Monomial> kept;
    for (const auto& m : gens) {
        bool redundant = false;
        for (const auto& d : kept)
            if (divides(d, m)) {
                redundant = true;
                break;
            }
        if (!redundant) kept.push_back(m);
    }
    return kept;
}

namespace detail {

// Characteristic-p validity guard for the truncated-power families over
// (x^m, y^n, (x+y)^k): requires m + k <= p.
template <typename F>
void require_family_hypothesis(const F& field, long long k, long long m) {
    std::uint32_t p = field.characteristic();
    if (p != 0 && m + k > static_cast<long long>(p))
        throw HypothesisViolation("closed family needs m + k <= p; got m=" + std::to_string(m) +
                                  ", k=" + std::to_string(k) + ", p=" + std::to_string(p));
}

// Product of the integers n, n-1, ..., n-count+1 mapped into the field factor
// by factor (each factor stays below p under the hypotheses, products may not).
template <typename F>
typename F::Elt falling_product(const F& field, long long n, long long count) {
    typename F::Elt acc = field.one();
    for (long long l = 0; l < count; ++l) acc = field.mul(acc, field.from_int(n - l));
    return acc;
}

}  // namespace detail

// f_{2t+1} for the ideal (x^m, y^n, (x+y)^k), m <= k:
//   sum_{j=0}^{m-1-t}  [ prod_{l=1..t} (m-j-l) / prod_{l=1..t} (m-l) ] C(k+t, j) x^j y^{k-j+t}.
template <typename F>
Poly<F> f_odd(const F& field, long long t, long long k, long long m) {
    if (!(0 <= t && t < m && m <= k)) throw DomainError("f_odd: need 0 <= t < m <= k");
    detail::require_family_hypothesis(field, k, m);
    typename F::Elt den = detail::falling_product(field, m - 1, t);
    typename F::Elt inv_den = field.inv(den);
    std::vector<typename Poly<F>::Term> terms;
    for (long long j = 0; j <= m - 1 - t; ++j) {
        typename F::Elt num = detail::falling_product(field, m - j - 1, t);
        typename F::Elt coeff =
            field.mul(field.mul(num, inv_den), field.from_bigint(binom(k + t, j)));
        if (!field.is_zero(coeff))
            terms.push_back({mono(checked_exp(j), checked_exp(k - j + t)), coeff});
    }
    return Poly<F>::from_terms(field, std::move(terms));
}

// f_{2t} for the same ideal, 1 <= t < m:
//   sum_{j=0}^{m-1-t}  [ prod_{l=2..t} (m-j-l) / prod_{l=1..t-1} (m-l) ] C(k+t-1, j) x^{j+1} y^{k-j+t-1}.
template <typename F>
Poly<F> f_even(const F& field, long long t, long long k, long long m) {
    if (!(1 <= t && t < m && m <= k)) throw DomainError("f_even: need 1 <= t < m <= k");
    detail::require_family_hypothesis(field, k, m);
    typename F::Elt den = detail::falling_product(field, m - 1, t - 1);
    typename F::Elt inv_den = field.inv(den);
    std::vector<typename Poly<F>::Term> terms;
    for (long long j = 0; j <= m - 1 - t; ++j) {
        typename F::Elt num = detail::falling_product(field, m - j - 2, t - 1);
        typename F::Elt coeff =
            field.mul(field.mul(num, inv_den), field.from_bigint(binom(k + t - 1, j)));
        if (!field.is_zero(coeff))
            terms.push_back({mono(checked_exp(j + 1), checked_exp(k - j + t - 1)), coeff});
    }
    return Poly<F>::from_terms(field, std::move(terms));
}

// f_s by the defining recursion (independent of the closed forms above):
//   f_1 = T^x_m (x+y)^k,
//   f_2 = x f_1 - C(k, m-1) x^m y^{k-m+1},
//   f_{2t+1} = y f_{2t-1} - ((k+2t-m)/(m-t)) f_{2t},
//   f_{2t+2} = ((k+2t-m+1)/(k+t-m+1)) x f_{2t+1}
//              - (t(k+t)/((k+t-m+1)(m-t))) y f_{2t}.
template <typename F>
Poly<F> f_recursive(const F& field, long long s, long long k, long long m) {
    if (!(1 <= s && s < 2 * m && m <= k)) throw DomainError("f_recursive: need 1 <= s < 2m, m <= k");
    detail::require_family_hypothesis(field, k, m);
    const Monomial X = mono(1, 0), Y = mono(0, 1);

    Poly<F> f1 = truncate_x(power_xy(field, 0, 0, 1, 1, 1, k), checked_exp(m));
    if (s == 1) return f1;
    Poly<F> f2 = f1.mul_term(X, field.one()) -
                 Poly<F>::monomial(field, mono(checked_exp(m), checked_exp(k - m + 1)),
                                   field.from_bigint(binom(k, m - 1)));
    if (s == 2) return f2;

    Poly<F> odd = f1, even = f2;  // f_{2t-1}, f_{2t}
    for (long long t = 1;; ++t) {
        typename F::Elt c_odd =
            field.div(field.from_int(k + 2 * t - m), field.from_int(m - t));
        Poly<F> next_odd = odd.mul_term(Y, field.one()) - even.scalar_mul(c_odd);
        if (s == 2 * t + 1) return next_odd;

        typename F::Elt c1 = field.div(field.from_int(k + 2 * t - m + 1),
                                       field.from_int(k + t - m + 1));
        typename F::Elt c2 = field.div(
            field.mul(field.from_int(t), field.from_int(k + t)),
            field.mul(field.from_int(k + t - m + 1), field.from_int(m - t)));
        Poly<F> next_even =
            next_odd.mul_term(X, c1) - even.mul_term(Y, c2);
        if (s == 2 * t + 2) return next_even;
        odd = next_odd;
        even = next_even;
    }
}

// g_t for the ideal (x^m, y^n, (x+y)^k) with k < m: the image of f_{2t+1}
// for the role-swapped ideal under x -> x+y, y -> -y.
template <typename F>
Poly<F> g_family(const F& field, long long t, long long k, long long m) {
    if (!(0 <= t && t < k && k < m)) throw DomainError("g_family: need 0 <= t < k < m");
    return substitute_phi(f_odd(field, t, m, k));
}

namespace detail {

inline void require_case2(const IdealSpec& s) {
    if (!(s.a * s.K < s.M && s.b * s.K < s.N && (s.a + s.c) * s.K >= s.M))
        throw DomainError("h_family: spec is not in case (2): need aK < M, bK < N, (a+c)K >= M");
}
inline void require_case3(const IdealSpec& s) {
    if (!(s.a * s.K < s.M && s.b * s.K < s.N && (s.a + s.c) * s.K < s.M))
        throw DomainError("l_family: spec is not in case (3): need aK < M, bK < N, (a+c)K < M");
}

}  // namespace detail

// Case-(2) generator H_t = x^{aK} y^{bK} f_{2t+1}(k = cK, m = M - aK), 0 <= t < M - aK.
template <typename F>
Poly<F> h_family(const F& field, const IdealSpec& spec, long long t) {
    spec.validate();
    detail::require_case2(spec);
    if (!(0 <= t && t < spec.M - spec.a * spec.K))
        throw DomainError("h_family: need 0 <= t < M - aK");
    Poly<F> base = f_odd(field, t, spec.c * spec.K, spec.M - spec.a * spec.K);
    return base.mul_term(mono(checked_exp(spec.a * spec.K), checked_exp(spec.b * spec.K)),
                         field.one());
}

// Case-(3) generator L_t = x^{aK} y^{bK} g_t(k = cK, m = M - aK), 0 <= t < cK.
template <typename F>
Poly<F> l_family(const F& field, const IdealSpec& spec, long long t) {
    spec.validate();
    detail::require_case3(spec);
    if (!(0 <= t && t < spec.c * spec.K)) throw DomainError("l_family: need 0 <= t < cK");
    Poly<F> base = g_family(field, t, spec.c * spec.K, spec.M - spec.a * spec.K);
    return base.mul_term(mono(checked_exp(spec.a * spec.K), checked_exp(spec.b * spec.K)),
                         field.one());
}

// Closed-form Groebner basis of (x^M, y^N, (x^a y^b (x+y)^c)^K).  Case order
// is fixed: (1) a pure-power ideal when aK >= M or bK >= N; (2) truncated
// powers H_t when aK < M, bK < N, (a+c)K >= M; (3) f^K plus the phi-image
// family L_t otherwise.  In characteristic p requires M + (c-a)K <= p.
template <typename F>
GroebnerBasis<F> closed_groebner(const F& field, const IdealSpec& spec) {
    spec.validate();
    const long long M = spec.M, N = spec.N, K = spec.K, a = spec.a, b = spec.b, c = spec.c;
    std::uint32_t p = field.characteristic();
    if (p != 0 && M + (c - a) * K > static_cast<long long>(p))
        throw HypothesisViolation(
            "closed_groebner needs M + (c-a)K <= p; got M=" + std::to_string(M) +
            ", (c-a)K=" + std::to_string((c - a) * K) + ", p=" + std::to_string(p));

    GroebnerBasis<F> out;
    auto xM = Poly<F>::monomial(field, mono(checked_exp(M), 0), field.one());
    auto yN = Poly<F>::monomial(field, mono(0, checked_exp(N)), field.one());
    out.generators.push_back(xM);
    out.generators.push_back(yN);

    if (a * K >= M || b * K >= N) {
        out.case_tag = 1;
    } else if ((a + c) * K >= M) {
        out.case_tag = 2;
        for (long long t = 0; t < M - a * K; ++t)
            out.generators.push_back(h_family(field, spec, t));
    } else {
        out.case_tag = 3;
        out.generators.push_back(power_xy(field, a, b, c, 1, 1, K));
        for (long long t = 0; t < c * K; ++t) out.generators.push_back(l_family(field, spec, t));
    }

    std::vector<Monomial> lts;
    for (const auto& g : out.generators) lts.push_back(g.leading_term().mono);
    out.lt_ideal = minimalize_lt(std::move(lts));
    return out;
}

}  // namespace fsig

#endif
