#include "fsig/lengths.hpp"

#include <algorithm>
#include <utility>

#include "fsig/arith.hpp"
#include "fsig/mutation.hpp"

namespace fsig {

std::string to_string(LengthRoute route) {
    switch (route) {
        case LengthRoute::SimpleFormula: return "simple";
        case LengthRoute::GeneralFormula: return "general";
        case LengthRoute::WlpFormula: return "wlp";
        case LengthRoute::Oracle: return "oracle";
    }
    throw DomainError("unknown length route");
}

namespace {

void check_range(const char* who, std::initializer_list<long long> values) {
    for (long long v : values)
        if (v < 0 || v > static_cast<long long>(kMaxExponent))
            throw DomainError(std::string(who) + ": argument " + std::to_string(v) +
                              " outside [0, 2^20]");
}

std::string outcome(const std::string& label, bool holds) {
    return label + (holds ? ": holds" : ": fails");
}

// All satisfied case conditions must give one value; anything else is a bug
// in the formulas, not a property of the input.
void check_overlap_agreement(const char* who,
                             const std::vector<std::pair<bool, long long>>& cases) {
    long long seen = -1;
    for (const auto& [fired, value] : cases) {
        if (!fired) continue;
        if (seen != -1 && seen != value)
            throw Error(std::string(who) + ": overlapping cases disagree (internal error)");
        seen = value;
    }
}

}  // namespace

long long staircase_colength(long long alpha, long long beta, long long eta) {
    check_range("staircase_colength", {alpha, beta, eta});
    if (alpha < beta) throw DomainError("staircase_colength: need alpha >= beta");
    if (beta + eta <= alpha) return beta * eta;
    if (alpha + beta <= eta) return beta * alpha;
    long long s = beta + eta - alpha;
    return beta * eta - (s * s) / 4;
}

LengthResult length_simple(long long k, long long m, long long n, const FieldSpec& field) {
    check_range("length_simple", {k, m, n});
    LengthResult res;
    res.route = LengthRoute::SimpleFormula;

    if (!field.is_rational()) {
        long long p = field.p;
        long long least = std::min({m + k, m + n, n + k});
        bool holds = least <= p;
        res.hypotheses.push_back(outcome("min(m+k, m+n, n+k) = " + std::to_string(least) +
                                             " <= p = " + std::to_string(p),
                                         holds));
        if (!holds)
            throw HypothesisViolation("length_simple needs min(m+k, m+n, n+k) <= p; got " +
                                      std::to_string(least) + " > " + std::to_string(p));
    } else {
        res.hypotheses.push_back("characteristic 0: no extra hypothesis");
    }

    bool ca = n >= k + m;
    bool cb = k >= m + n;
    bool cc = m >= n + k;
    res.hypotheses.push_back(outcome("case (a) n >= k+m", ca));
    res.hypotheses.push_back(outcome("case (b) k >= m+n", cb));
    res.hypotheses.push_back(outcome("case (c) m >= n+k", cc));
    check_overlap_agreement("length_simple", {{ca, k * m}, {cb, m * n}, {cc, k * n}});

    if (mutation_active(MutationSite::LengthSimpleA)) ca = !ca;
    if (mutation_active(MutationSite::LengthSimpleB)) cb = !cb;
    if (mutation_active(MutationSite::LengthSimpleC)) cc = !cc;

    if (ca) {
        res.case_tag = 'a';
        res.value = k * m;
    } else if (cb) {
        res.case_tag = 'b';
        res.value = m * n;
    } else if (cc) {
        res.case_tag = 'c';
        res.value = k * n;
    } else {
        res.case_tag = 'd';
        long long s = k + n + m;
        res.value = k * n + k * m + n * m - (s * s) / 4;
    }
    return res;
}

long long length_shift(long long m, long long n, long long a, long long b,
                       long long inner_length) {
    check_range("length_shift", {m, n, a, b});
    if (inner_length < 0) throw DomainError("length_shift: inner_length must be >= 0");
    if (a >= m || b >= n) return m * n;  // the shifted part is empty
    return m * b + (n - b) * a + inner_length;
}

LengthResult length_general(const IdealSpec& spec) {
    spec.validate();
    check_range("length_general", {spec.M, spec.N, spec.K, spec.a, spec.b, spec.c});
    if (spec.N != spec.M)
        throw DomainError("length_general covers only N = M; "
                          "use the rank oracle for unequal bounds");
    long long M = spec.M, K = spec.K;
    long long a = spec.a, b = spec.b, c = spec.c;

    LengthResult res;
    res.route = LengthRoute::GeneralFormula;

    if (!spec.field.is_rational() && M == spec.field.p && c > a) {
        // x^p and (x+y)^p generate the same ideal mod p, so the roles of a
        // and c may be exchanged; choosing c <= a satisfies M+(c-a)K <= p.
        std::swap(a, c);
        res.hypotheses.push_back("M = p: exchanged a and c -> (a,b,c) = (" + std::to_string(a) +
                                 "," + std::to_string(b) + "," + std::to_string(c) + ")");
    }

    bool ha = a * K <= M;
    res.hypotheses.push_back(outcome("aK = " + std::to_string(a * K) +
                                         " <= M = " + std::to_string(M),
                                     ha));
    if (!ha)
        throw HypothesisViolation("length_general needs aK <= M; got aK = " +
                                  std::to_string(a * K) + " > M = " + std::to_string(M));
    bool hb = b * K <= M;
    res.hypotheses.push_back(outcome("bK = " + std::to_string(b * K) +
                                         " <= M = " + std::to_string(M),
                                     hb));
    if (!hb)
        throw HypothesisViolation("length_general needs bK <= M; got bK = " +
                                  std::to_string(b * K) + " > M = " + std::to_string(M));

    if (!spec.field.is_rational()) {
        long long p = spec.field.p;
        long long least = std::min({M + (c - a) * K, M + (c - b) * K, 2 * M - (a + b) * K});
        bool holds = least <= p;
        res.hypotheses.push_back(
            outcome("min{M+(c-a)K, M+(c-b)K, 2M-(a+b)K} = " + std::to_string(least) +
                        " <= p = " + std::to_string(p),
                    holds));
        if (!holds)
            throw HypothesisViolation(
                "length_general needs min{M+(c-a)K, M+(c-b)K, 2M-(a+b)K} <= p; got " +
                std::to_string(least) + " > " + std::to_string(p));
    } else {
        res.hypotheses.push_back("characteristic 0: no extra hypothesis");
    }

    long long S = (a + b + c) * K;
    bool ca = a >= b + c;
    bool cb = S >= 2 * M;
    bool cc = b >= a + c;
    res.hypotheses.push_back(outcome("case (a) a >= b+c", ca));
    res.hypotheses.push_back(outcome("case (b) (a+b+c)K >= 2M", cb));
    res.hypotheses.push_back(outcome("case (c) b >= a+c", cc));
    // aK <= M bounds every value computed below well inside 64 bits
    long long va = ca ? S * M - (a * K) * ((b + c) * K) : 0;
    long long vb = M * M;
    long long vc = cc ? S * M - (b * K) * ((a + c) * K) : 0;
    check_overlap_agreement("length_general", {{ca, va}, {cb, vb}, {cc, vc}});

    if (ca) {
        res.case_tag = 'a';
        res.value = va;
    } else if (cb) {
        res.case_tag = 'b';
        res.value = vb;
    } else if (cc) {
        res.case_tag = 'c';
        res.value = vc;
    } else {
        res.case_tag = 'd';
        res.value = S * M - (S * S) / 4;
    }
    return res;
}

LengthResult length_wlp(long long k, long long m, long long n, std::uint32_t p) {
    check_range("length_wlp", {k, m, n});
    if (!is_prime_u32(p)) throw DomainError("length_wlp: p must be prime");

    LengthResult res;
    res.route = LengthRoute::WlpFormula;
    long long pl = p;
    bool holds = m <= pl - k && n <= pl - k;
    res.hypotheses.push_back(outcome("0 <= m, n <= p - k with p = " + std::to_string(pl) +
                                         ", k = " + std::to_string(k),
                                     holds));
    if (!holds)
        throw HypothesisViolation("length_wlp needs 0 <= m, n <= p - k; got (k,m,n,p) = (" +
                                  std::to_string(k) + "," + std::to_string(m) + "," +
                                  std::to_string(n) + "," + std::to_string(pl) + ")");

    long long d0 = std::max({k, m, n});
    long long d2 = std::min({k, m, n});
    long long d1 = k + m + n - d0 - d2;
    long long t = d0 + d1 + d2 - 3;
    bool ca = 2 * d0 <= t + 1;
    res.hypotheses.push_back(outcome("case (a) 2*d0 <= t+1 with t = " + std::to_string(t), ca));
    if (ca) {
        res.case_tag = 'a';
        long long h = t / 2;  // t >= 0 here: 2*d0 <= t+1 forces d2 >= 1
        BigInt value = binom(h + 2, 2);
        for (long long d : {d0, d1, d2}) value -= binom(h - d + 2, 2);
        if (!value.fits_slong_p()) throw DomainError("length_wlp: value out of range");
        res.value = value.get_si();
    } else {
        res.case_tag = 'b';
        res.value = d1 * d2;
    }
    return res;
}

}  // namespace fsig
