#include <doctest.h>

#include <algorithm>
#include <vector>

#include "fsig/lengths.hpp"
#include "fsig/oracle.hpp"

using namespace fsig;

namespace {

const FieldSpec QQ{};

FieldSpec Fp(std::uint32_t p) {
    FieldSpec f;
    f.p = p;
    return f;
}

// Explicit generator list of the staircase lemma's monomial ideal:
// (x^beta, y^eta) + (x^(beta-1-t) y^(alpha-beta+1+2t) : 0 <= t < beta)
std::vector<Monomial> staircase_ideal(long long alpha, long long beta, long long eta) {
    std::vector<Monomial> gens{mono(checked_exp(beta), 0), mono(0, checked_exp(eta))};
    for (long long t = 0; t < beta; ++t)
        gens.push_back(mono(checked_exp(beta - 1 - t), checked_exp(alpha - beta + 1 + 2 * t)));
    return gens;
}

}  // namespace

TEST_CASE("staircase_colength: anchors and argument checks") {
    CHECK(staircase_colength(5, 2, 3) == 6);   // case (a)
    CHECK(staircase_colength(3, 2, 2) == 4);   // case (c), correction term 0
    CHECK(staircase_colength(2, 2, 2) == 3);   // case (c): 1, x, y survive
    CHECK(staircase_colength(2, 2, 9) == 4);   // case (b)
    CHECK(staircase_colength(0, 0, 7) == 0);
    CHECK_THROWS_AS(staircase_colength(1, 2, 3), DomainError);
    CHECK_THROWS_AS(staircase_colength(-1, -1, 0), DomainError);
    CHECK_THROWS_AS(staircase_colength(3, 2, -1), DomainError);
}

TEST_CASE("staircase_colength matches the box count of the displayed ideal") {
    for (long long alpha = 0; alpha <= 10; ++alpha)
        for (long long beta = 0; beta <= alpha; ++beta)
            for (long long eta = 0; eta <= 10; ++eta)
                CHECK(staircase_colength(alpha, beta, eta) ==
                      staircase_count(staircase_ideal(alpha, beta, eta)));
}

TEST_CASE("length_simple: anchors, case tags, zero collapse") {
    auto r = length_simple(3, 2, 2, QQ);
    CHECK(r.value == 4);
    CHECK(r.case_tag == 'd');
    CHECK(r.route == LengthRoute::SimpleFormula);
    CHECK(length_simple(2, 2, 2, QQ).value == 3);
    CHECK(length_simple(2, 2, 2, QQ).case_tag == 'd');

    auto a = length_simple(1, 1, 2, QQ);
    CHECK(a.value == 1);
    CHECK(a.case_tag == 'a');
    CHECK(length_simple(2, 2, 5, QQ).case_tag == 'a');
    CHECK(length_simple(5, 2, 2, QQ).case_tag == 'b');
    CHECK(length_simple(2, 5, 2, QQ).case_tag == 'c');
    CHECK(length_simple(2, 2, 5, QQ).value == 4);
    CHECK(length_simple(5, 2, 2, QQ).value == 4);
    CHECK(length_simple(2, 5, 2, QQ).value == 4);

    // one exponent zero makes the ideal the unit ideal
    CHECK(length_simple(0, 3, 4, QQ).value == 0);
    CHECK(length_simple(3, 0, 4, QQ).value == 0);
    CHECK(length_simple(3, 4, 0, QQ).value == 0);
    CHECK(length_simple(0, 0, 0, QQ).value == 0);
    // overlapping cases agree and resolve to the first listed
    CHECK(length_simple(2, 2, 0, QQ).case_tag == 'b');

    CHECK_THROWS_AS(length_simple(-1, 2, 2, QQ), DomainError);
}

TEST_CASE("length_simple: characteristic hypothesis") {
    CHECK(length_simple(3, 2, 2, Fp(5)).value == 4);
    CHECK_THROWS_AS(length_simple(3, 2, 2, Fp(3)), HypothesisViolation);
    // the recorded hypothesis names the failing bound
    try {
        length_simple(3, 2, 2, Fp(3));
        FAIL("expected HypothesisViolation");
    } catch (const HypothesisViolation& e) {
        CHECK(std::string(e.what()).find("min(m+k, m+n, n+k)") != std::string::npos);
    }
}

TEST_CASE("length_simple is symmetric in (k, m, n)") {
    for (long long k = 0; k <= 8; ++k)
        for (long long m = 0; m <= 8; ++m)
            for (long long n = 0; n <= 8; ++n) {
                long long base = length_simple(k, m, n, QQ).value;
                CHECK(base >= 0);
                CHECK(base == length_simple(k, n, m, QQ).value);
                CHECK(base == length_simple(m, k, n, QQ).value);
                CHECK(base == length_simple(m, n, k, QQ).value);
                CHECK(base == length_simple(n, k, m, QQ).value);
                CHECK(base == length_simple(n, m, k, QQ).value);
            }
}

TEST_CASE("length_simple matches the rank oracle") {
    Rationals Q;
    PrimeField F31(31);
    auto f_q = power_xy(Q, 0, 0, 1, 1, 1, 1);
    auto f_31 = power_xy(F31, 0, 0, 1, 1, 1, 1);
    for (long long k = 0; k <= 8; ++k)
        for (long long m = 1; m <= 8; ++m)
            for (long long n = 1; n <= 8; ++n) {
                long long expected = length_rank(Q, m, n, f_q, k);
                CHECK(length_simple(k, m, n, QQ).value == expected);
                CHECK(length_simple(k, m, n, Fp(31)).value == expected);
                CHECK(length_rank(F31, m, n, f_31, k) == expected);
            }
}

TEST_CASE("length_shift: anchors and degenerate collapse") {
    CHECK(length_shift(4, 5, 0, 0, 7) == 7);
    CHECK(length_shift(3, 4, 5, 0, 99) == 12);   // a >= m: inner part empty
    CHECK(length_shift(3, 4, 0, 4, 99) == 12);   // b >= n
    CHECK(length_shift(5, 5, 1, 1, 13) == 22);
    CHECK_THROWS_AS(length_shift(3, 4, 1, 1, -2), DomainError);
}

TEST_CASE("length_shift composed with length_simple matches the oracle") {
    Rationals Q;
    // ell(x^5, y^7, x^2 y^3 (x+y)^2): strip counts 5*3 + 4*2, inner ideal
    // (x^3, y^4, (x+y)^2) of colength 6
    long long inner = length_simple(2, 3, 4, QQ).value;
    CHECK(inner == 6);
    CHECK(length_shift(5, 7, 2, 3, inner) == 29);
    CHECK(length_rank(Q, 5, 7, power_xy(Q, 2, 3, 2, 1, 1, 1), 1) == 29);

    for (long long m = 1; m <= 5; ++m)
        for (long long n = 1; n <= 5; ++n)
            for (long long a = 0; a <= 2; ++a)
                for (long long b = 0; b <= 2; ++b)
                    for (long long c = 0; c <= 3; ++c) {
                        long long inner_len =
                            (a < m && b < n) ? length_simple(c, m - a, n - b, QQ).value : 0;
                        CHECK(length_shift(m, n, a, b, inner_len) ==
                              length_rank(Q, m, n, power_xy(Q, a, b, c, 1, 1, 1), 1));
                    }
}

TEST_CASE("length_general: anchors and case tags") {
    IdealSpec spec;
    spec.M = spec.N = 5;
    spec.K = 1;
    spec.a = spec.b = spec.c = 1;
    auto r = length_general(spec);
    CHECK(r.value == 13);
    CHECK(r.case_tag == 'd');
    CHECK(r.route == LengthRoute::GeneralFormula);

    spec = IdealSpec{};
    spec.M = spec.N = 5;
    spec.K = 2;
    spec.a = 2;
    spec.b = spec.c = 0;
    r = length_general(spec);
    CHECK(r.value == 20);
    CHECK(r.case_tag == 'a');

    spec = IdealSpec{};
    spec.M = spec.N = 3;
    spec.K = 3;
    spec.a = spec.b = spec.c = 1;
    r = length_general(spec);
    CHECK(r.value == 9);
    CHECK(r.case_tag == 'b');
}

TEST_CASE("length_general: errors and hypothesis checks") {
    IdealSpec spec;
    spec.M = 3;
    spec.N = 4;
    CHECK_THROWS_WITH_AS(length_general(spec), doctest::Contains("oracle"), DomainError);

    spec = IdealSpec{};
    spec.M = spec.N = 3;
    spec.K = 2;
    spec.a = 2;
    CHECK_THROWS_AS(length_general(spec), HypothesisViolation);

    spec = IdealSpec{};
    spec.M = spec.N = 4;
    spec.K = 1;
    spec.a = spec.b = 1;
    spec.c = 3;
    spec.field = Fp(5);
    CHECK_THROWS_WITH_AS(length_general(spec), doctest::Contains("min{M+(c-a)K"),
                         HypothesisViolation);
    spec.field = QQ;
    CHECK(length_general(spec).value == 14);
}

TEST_CASE("length_general: M = p allows exchanging a and c") {
    IdealSpec spec;
    spec.M = spec.N = 3;
    spec.K = 1;
    spec.a = 0;
    spec.b = 0;
    spec.c = 3;

    // characteristic 0: (x+y)^3 does not collapse, case (d) gives 7
    auto rq = length_general(spec);
    CHECK(rq.value == 7);
    CHECK(rq.case_tag == 'd');
    Rationals Q;
    CHECK(length_rank(Q, 3, 3, power_xy(Q, 0, 0, 3, 1, 1, 1), 1) == 7);

    // characteristic 3 = M: (x+y)^3 = x^3 + y^3, colength 9
    spec.field = Fp(3);
    auto rp = length_general(spec);
    CHECK(rp.value == 9);
    bool noted = false;
    for (const auto& h : rp.hypotheses)
        if (h.find("exchanged a and c") != std::string::npos) noted = true;
    CHECK(noted);
    PrimeField F3(3);
    CHECK(length_rank(F3, 3, 3, power_xy(F3, 0, 0, 3, 1, 1, 1), 1) == 9);
}

TEST_CASE("length_general matches the rank oracle and the shift composition") {
    Rationals Q;
    PrimeField F31(31);
    for (long long M = 1; M <= 8; ++M)
        for (long long K = 1; K <= 3; ++K)
            for (long long a = 0; a <= 2; ++a)
                for (long long b = 0; b <= 2; ++b)
                    for (long long c = 0; c <= 2; ++c) {
                        if (a * K > M || b * K > M) continue;
                        IdealSpec spec;
                        spec.M = spec.N = M;
                        spec.K = K;
                        spec.a = a;
                        spec.b = b;
                        spec.c = c;
                        long long v = length_general(spec).value;
                        CHECK(v == length_rank(Q, M, M, power_xy(Q, a, b, c, 1, 1, 1), K));
                        CHECK(v == length_shift(M, M, a * K, b * K,
                                                (a * K < M && b * K < M)
                                                    ? length_simple(c * K, M - a * K, M - b * K,
                                                                    QQ)
                                                          .value
                                                    : 0));
                        spec.field = Fp(31);
                        long long least = std::min(
                            {M + (c - a) * K, M + (c - b) * K, 2 * M - (a + b) * K});
                        if (least <= 31) {
                            CHECK(length_general(spec).value == v);
                            CHECK(v == length_rank(F31, M, M,
                                                   power_xy(F31, a, b, c, 1, 1, 1), K));
                        }
                    }
}

TEST_CASE("length_wlp: anchors and hypothesis") {
    auto r = length_wlp(3, 2, 2, 31);
    CHECK(r.value == 4);
    CHECK(r.case_tag == 'b');
    CHECK(r.route == LengthRoute::WlpFormula);

    r = length_wlp(2, 2, 2, 31);
    CHECK(r.value == 3);
    CHECK(r.case_tag == 'a');

    // t = 0 socle: colength of (x, y, x+y) is 1 (value matches both cases)
    r = length_wlp(1, 1, 1, 7);
    CHECK(r.value == 1);
    CHECK(r.case_tag == 'b');

    CHECK(length_wlp(3, 2, 2, 5).value == 4);  // boundary: m = n = p - k
    CHECK_THROWS_AS(length_wlp(5, 2, 2, 5), HypothesisViolation);
    CHECK_THROWS_AS(length_wlp(2, 2, 2, 10), DomainError);  // p not prime
    CHECK(length_wlp(0, 0, 0, 31).value == 0);
}

TEST_CASE("length_wlp agrees with length_simple across the shared region") {
    for (std::uint32_t p : {31u, 101u})
        for (long long k = 0; k <= 14; ++k)
            for (long long m = 0; m <= 14; ++m)
                for (long long n = 0; n <= 14; ++n) {
                    if (m > p - k || n > p - k) continue;
                    CHECK(length_wlp(k, m, n, p).value ==
                          length_simple(k, m, n, Fp(p)).value);
                }
}

TEST_CASE("oracle colength is monotone in M, N, K") {
    Rationals Q;
    auto f = power_xy(Q, 1, 1, 1, 1, 1, 1);  // x y (x + y)
    long long len[6][6][4];
    for (long long M = 1; M <= 5; ++M)
        for (long long N = 1; N <= 5; ++N)
            for (long long K = 0; K <= 3; ++K) len[M][N][K] = length_rank(Q, M, N, f, K);
    for (long long M = 1; M <= 5; ++M)
        for (long long N = 1; N <= 5; ++N)
            for (long long K = 0; K <= 3; ++K) {
                if (M > 1) CHECK(len[M][N][K] >= len[M - 1][N][K]);
                if (N > 1) CHECK(len[M][N][K] >= len[M][N - 1][K]);
                if (K > 0) CHECK(len[M][N][K] >= len[M][N][K - 1]);
            }
}
