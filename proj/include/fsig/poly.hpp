#ifndef FSIG_POLY_HPP
#define FSIG_POLY_HPP

#include <algorithm>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "fsig/arith.hpp"
#include "fsig/monomial.hpp"
#include "fsig/prime_field.hpp"

namespace fsig {

// Sparse bivariate polynomial over a coefficient field F (Rationals or
// PrimeField).  Terms are kept grlex-descending (leading term first) with no
// zero coefficients, so representations are canonical and equality is
// term-by-term.
template <typename F>
class Poly {
  public:
    using Elt = typename F::Elt;
    struct Term {
        Monomial mono;
        Elt coeff;
        friend bool operator==(const Term&, const Term&) = default;
    };

    explicit Poly(const F& field) : field_(field) {}

    static Poly zero(const F& field) { return Poly(field); }
    static Poly constant(const F& field, const Elt& c) { return monomial(field, Monomial{0, 0}, c); }
    static Poly monomial(const F& field, const Monomial& m, const Elt& c) {
        Poly p(field);
        if (!field.is_zero(c)) p.terms_.push_back(Term{m, c});
        return p;
    }

    // Builds from an arbitrary term list: sorts, merges duplicates, drops zeros.
    static Poly from_terms(const F& field, std::vector<Term> terms) {
        std::map<Monomial, Elt, GrlexGreater> acc;
        Poly p(field);
        for (auto& t : terms) p.accumulate(acc, t.mono, t.coeff);
        return from_map(field, acc);
    }

    const F& field() const { return field_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    const Term& leading_term() const {
        if (terms_.empty()) throw ZeroPolynomialError("leading_term of zero polynomial");
        return terms_.front();
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.field_ == b.field_ && a.terms_ == b.terms_;
    }

    Poly operator-() const {
        Poly r(field_);
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back(Term{t.mono, field_.neg(t.coeff)});
        return r;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        a.check_same_field(b);
        Poly r(a.field_);
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        std::size_t ia = 0, ib = 0;
        while (ia < a.terms_.size() && ib < b.terms_.size()) {
            const Term& ta = a.terms_[ia];
            const Term& tb = b.terms_[ib];
            if (ta.mono == tb.mono) {
                Elt c = a.field_.add(ta.coeff, tb.coeff);
                if (!a.field_.is_zero(c)) r.terms_.push_back(Term{ta.mono, c});
                ++ia, ++ib;
            } else if (grlex_greater(ta.mono, tb.mono)) {
                r.terms_.push_back(ta);
                ++ia;
            } else {
                r.terms_.push_back(tb);
                ++ib;
            }
        }
        for (; ia < a.terms_.size(); ++ia) r.terms_.push_back(a.terms_[ia]);
        for (; ib < b.terms_.size(); ++ib) r.terms_.push_back(b.terms_[ib]);
        return r;
    }

    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    // Multiplication by the single term c * x^m; grlex order is translation
    // invariant, so the sorted term list is just mapped through.
    Poly mul_term(const Monomial& m, const Elt& c) const {
        Poly r(field_);
        if (field_.is_zero(c)) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) {
            Elt cc = field_.mul(t.coeff, c);
            if (!field_.is_zero(cc)) r.terms_.push_back(Term{mono_mul(t.mono, m), cc});
        }
        return r;
    }

    Poly scalar_mul(const Elt& c) const { return mul_term(Monomial{0, 0}, c); }

    friend Poly operator*(const Poly& a, const Poly& b) {
        a.check_same_field(b);
        std::map<Monomial, Elt, GrlexGreater> acc;
        Poly helper(a.field_);
        for (const auto& ta : a.terms_)
            for (const auto& tb : b.terms_)
                helper.accumulate(acc, mono_mul(ta.mono, tb.mono), a.field_.mul(ta.coeff, tb.coeff));
        return from_map(a.field_, acc);
    }

    void check_same_field(const Poly& other) const {
        if (field_ != other.field_) throw FieldMismatch("polynomials over different fields");
    }

  private:
    static Poly from_map(const F& field, const std::map<Monomial, Elt, GrlexGreater>& acc) {
        Poly p(field);
        p.terms_.reserve(acc.size());
        for (const auto& [m, c] : acc)
            if (!field.is_zero(c)) p.terms_.push_back(Term{m, c});
        return p;
    }
    void accumulate(std::map<Monomial, Elt, GrlexGreater>& acc, const Monomial& m,
                    const Elt& c) const {
        auto [it, inserted] = acc.emplace(m, c);
        if (!inserted) it->second = field_.add(it->second, c);
    }

    F field_;
    std::vector<Term> terms_;
};

template <typename F>
Poly<F> pow(const Poly<F>& base, unsigned long long e) {
    Poly<F> acc = Poly<F>::constant(base.field(), base.field().one());
    Poly<F> sq = base;
    while (e) {
        if (e & 1) acc = acc * sq;
        e >>= 1;
        if (e) sq = sq * sq;
    }
    return acc;
}

// T^x_b: keep only terms with x-degree < bound.
template <typename F>
Poly<F> truncate_x(const Poly<F>& f, std::uint32_t bound) {
    std::vector<typename Poly<F>::Term> kept;
    for (const auto& t : f.terms())
        if (t.mono.i < bound) kept.push_back(t);
    return Poly<F>::from_terms(f.field(), std::move(kept));
}

// T^y_b: keep only terms with y-degree < bound.
template <typename F>
Poly<F> truncate_y(const Poly<F>& f, std::uint32_t bound) {
    std::vector<typename Poly<F>::Term> kept;
    for (const auto& t : f.terms())
        if (t.mono.j < bound) kept.push_back(t);
    return Poly<F>::from_terms(f.field(), std::move(kept));
}

template <typename F>
struct DivisionResult {
    Poly<F> remainder;
    std::vector<Poly<F>> quotients;  // f = sum quotients[i]*basis[i] + remainder
};

// Multivariate division: repeatedly cancel the leading term against the first
// divisor whose leading monomial divides it, else move it to the remainder.
// No remainder term is divisible by any divisor's leading monomial.
template <typename F>
DivisionResult<F> divide(const Poly<F>& f, std::span<const Poly<F>> basis) {
    const F& field = f.field();
    for (const auto& g : basis) {
        f.check_same_field(g);
        if (g.is_zero()) throw DomainError("divide: zero divisor in basis");
    }
    DivisionResult<F> out{Poly<F>::zero(field), {}};
    out.quotients.assign(basis.size(), Poly<F>::zero(field));
    Poly<F> h = f;
    while (!h.is_zero()) {
        const auto& lt = h.leading_term();
        bool reduced = false;
        for (std::size_t idx = 0; idx < basis.size(); ++idx) {
            const auto& glt = basis[idx].leading_term();
            if (!divides(glt.mono, lt.mono)) continue;
            Monomial qm = mono_quotient(lt.mono, glt.mono);
            typename F::Elt qc = field.div(lt.coeff, glt.coeff);
            out.quotients[idx] = out.quotients[idx] + Poly<F>::monomial(field, qm, qc);
            h = h - basis[idx].mul_term(qm, qc);
            reduced = true;
            break;
        }
        if (!reduced) {
            Poly<F> t = Poly<F>::monomial(field, lt.mono, lt.coeff);
            out.remainder = out.remainder + t;
            h = h - t;
        }
    }
    return out;
}

template <typename F>
Poly<F> normal_form(const Poly<F>& f, std::span<const Poly<F>> basis) {
    return divide(f, basis).remainder;
}

// The substitution x -> x+y, y -> -y (an involution; it swaps the roles of
// x^m and (x+y)^m in the generators).
template <typename F>
Poly<F> substitute_phi(const Poly<F>& f) {
    const F& field = f.field();
    std::vector<typename Poly<F>::Term> terms;
    for (const auto& t : f.terms()) {
        auto row = binom_row(t.mono.i);
        typename F::Elt base =
            (t.mono.j % 2 == 0) ? t.coeff : field.neg(t.coeff);  // (-y)^j sign
        for (std::uint32_t s = 0; s <= t.mono.i; ++s) {
            typename F::Elt c = field.mul(base, field.from_bigint(row[s]));
            if (!field.is_zero(c)) terms.push_back({mono(s, t.mono.i - s + t.mono.j), c});
        }
    }
    return Poly<F>::from_terms(field, std::move(terms));
}

// (x^a y^b (x^u+y^v)^c)^K expanded exactly via one binomial row:
//   sum_i C(cK, i) x^{aK+ui} y^{bK+v(cK-i)}.
template <typename F>
Poly<F> power_xy(const F& field, long long a, long long b, long long c, long long u, long long v,
                 long long K) {
    if (a < 0 || b < 0 || c < 0 || K < 0) throw DomainError("power_xy: negative exponent");
    if (u < 1 || v < 1) throw DomainError("power_xy: need u, v >= 1");
    const long long cK = c * K;
    auto row = binom_row(cK);
    std::vector<typename Poly<F>::Term> terms;
    for (long long i = 0; i <= cK; ++i) {
        typename F::Elt coeff = field.from_bigint(row[i]);
        if (field.is_zero(coeff)) continue;
        terms.push_back({mono(static_cast<std::uint32_t>(a * K + u * i),
                              static_cast<std::uint32_t>(b * K + v * (cK - i))),
                         coeff});
    }
    return Poly<F>::from_terms(field, std::move(terms));
}

template <typename F>
std::string to_string(const Poly<F>& f) {
    if (f.is_zero()) return "0";
    const F& field = f.field();
    // Display order is descending in x then y (plain lex), the conventional
    // way to write binomial expansions; it matches grlex on homogeneous
    // polynomials, which covers every basis element we print.
    std::vector<typename Poly<F>::Term> display(f.terms().begin(), f.terms().end());
    std::sort(display.begin(), display.end(), [](const auto& a, const auto& b) {
        if (a.mono.i != b.mono.i) return a.mono.i > b.mono.i;
        return a.mono.j > b.mono.j;
    });
    std::string out;
    bool first = true;
    for (const auto& t : display) {
        typename F::Elt c = t.coeff;
        if (first) {
            if (field.coeff_is_negative(c)) {
                out += "-";
                c = field.neg(c);
            }
        } else {
            bool negative = field.coeff_is_negative(c);
            out += negative ? " - " : " + ";
            if (negative) c = field.neg(c);
        }
        bool unit_mono = (t.mono.i == 0 && t.mono.j == 0);
        if (unit_mono) {
            out += field.coeff_to_string(c);
        } else if (field.is_one(c)) {
            out += to_string(t.mono);
        } else {
            out += field.coeff_to_string(c) + "*" + to_string(t.mono);
        }
        first = false;
    }
    return out;
}

}  // namespace fsig

#endif
