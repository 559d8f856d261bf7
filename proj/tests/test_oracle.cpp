#include <doctest.h>

#include <vector>

#include "fsig/closed_basis.hpp"
#include "fsig/oracle.hpp"

using namespace fsig;

namespace {

template <typename F>
Poly<F> mono_poly(const F& field, std::uint32_t i, std::uint32_t j) {
    return Poly<F>::monomial(field, mono(i, j), field.one());
}

// x^M, y^N, f^K as explicit generators for the brute-force routes.
template <typename F>
std::vector<Poly<F>> pair_generators(const F& field, std::uint32_t M, std::uint32_t N,
                                     const Poly<F>& f, unsigned K) {
    return {mono_poly(field, M, 0), mono_poly(field, 0, N), pow(f, K)};
}

template <typename F>
std::vector<Monomial> minimal_lt_of(const std::vector<Poly<F>>& gens) {
    std::vector<Monomial> lts;
    for (const auto& g : gens) lts.push_back(g.leading_term().mono);
    return minimalize_lt(std::move(lts));
}

}  // namespace

TEST_CASE("s_polynomial cancels leading terms") {
    Rationals Q;
    auto x2y2 = mono_poly(Q, 2, 0) + mono_poly(Q, 0, 2);  // x^2 + y^2
    auto xy = mono_poly(Q, 1, 1);
    // lcm = x^2 y: S = y(x^2+y^2) - x(xy) = y^3
    auto s = s_polynomial(x2y2, xy);
    CHECK(s == mono_poly(Q, 0, 3));
    // and y^3 does not reduce against {x^2+y^2, xy}
    std::vector<Poly<Rationals>> gens{x2y2, xy};
    CHECK(normal_form(s, std::span<const Poly<Rationals>>(gens)) == s);
}

TEST_CASE("is_groebner: certificate examples") {
    Rationals Q;
    std::vector<Poly<Rationals>> monomials{mono_poly(Q, 2, 0), mono_poly(Q, 0, 2)};
    CHECK(is_groebner(Q, std::span<const Poly<Rationals>>(monomials)).is_basis);

    auto x = mono_poly(Q, 1, 0);
    auto y = mono_poly(Q, 0, 1);
    // {x+y, y}: S-poly y^2 reduces to zero in one step against y
    std::vector<Poly<Rationals>> linear{x + y, y};
    CHECK(is_groebner(Q, std::span<const Poly<Rationals>>(linear)).is_basis);
    // {x+y, x} generates (x, y) but its leading terms only span (x): the
    // S-polynomial y is its own normal form, so this is not a basis
    std::vector<Poly<Rationals>> not_basis{x + y, x};
    auto lin_cert = is_groebner(Q, std::span<const Poly<Rationals>>(not_basis));
    CHECK_FALSE(lin_cert.is_basis);
    REQUIRE(lin_cert.failing_pairs.size() == 1);
    CHECK(lin_cert.failing_pairs[0] == std::pair<std::size_t, std::size_t>(0, 1));
    // Buchberger completes it to a true basis of (x, y)
    auto completed = buchberger(Q, not_basis);
    CHECK(completed.lt_ideal == std::vector<Monomial>{mono(0, 1), mono(1, 0)});

    std::vector<Poly<Rationals>> bad{mono_poly(Q, 2, 0) + mono_poly(Q, 0, 2),
                                     mono_poly(Q, 1, 1)};
    auto cert = is_groebner(Q, std::span<const Poly<Rationals>>(bad));
    CHECK_FALSE(cert.is_basis);
    REQUIRE(cert.failing_pairs.size() == 1);
    CHECK(cert.failing_pairs[0] == std::pair<std::size_t, std::size_t>(0, 1));

    std::vector<Poly<Rationals>> with_zero{x, Poly<Rationals>::zero(Q)};
    CHECK_THROWS_AS(is_groebner(Q, std::span<const Poly<Rationals>>(with_zero)), DomainError);
    std::vector<Poly<Rationals>> empty;
    CHECK_THROWS_AS(is_groebner(Q, std::span<const Poly<Rationals>>(empty)), DomainError);
}

TEST_CASE("buchberger: monomial ideal is returned as-is") {
    Rationals Q;
    auto gb = buchberger(Q, {mono_poly(Q, 2, 0), mono_poly(Q, 0, 2)});
    CHECK(gb.generators.size() == 2);
    CHECK(gb.lt_ideal == std::vector<Monomial>{mono(0, 2), mono(2, 0)});
    CHECK_THROWS_AS(buchberger(Q, std::vector<Poly<Rationals>>{Poly<Rationals>::zero(Q)}),
                    DomainError);
}

TEST_CASE("buchberger: (x+y)^3 lies in (x^2, y^2) over F_31") {
    PrimeField F31(31);
    auto f = power_xy(F31, 0, 0, 1, 1, 1, 1);  // x + y
    auto gb = buchberger(F31, pair_generators(F31, 2, 2, f, 3));
    CHECK(gb.lt_ideal == std::vector<Monomial>{mono(0, 2), mono(2, 0)});
}

TEST_CASE("buchberger agrees with the closed basis for (x^3, y^3, (x+y)^2) over QQ") {
    Rationals Q;
    IdealSpec spec;
    spec.M = 3;
    spec.N = 3;
    spec.K = 1;
    spec.a = 0;
    spec.b = 0;
    spec.c = 2;
    auto closed = closed_groebner(Q, spec);
    auto f = power_xy(Q, 0, 0, 1, 1, 1, 1);
    auto gb = buchberger(Q, pair_generators(Q, 3, 3, f, 2));
    CHECK(gb.lt_ideal == closed.lt_ideal);
    CHECK(gb.lt_ideal == std::vector<Monomial>{mono(2, 0), mono(0, 3), mono(1, 2)});
}

TEST_CASE("buchberger output passes is_groebner and reduces its input to zero") {
    Rationals Q;
    PrimeField F31(31);
    auto run = [](const auto& field, std::uint32_t m, std::uint32_t n, unsigned k) {
        using F = std::decay_t<decltype(field)>;
        auto f = power_xy(field, 0, 0, 1, 1, 1, 1);
        auto gens = pair_generators(field, m, n, f, k);
        auto gb = buchberger(field, gens);
        CHECK(is_groebner(field, std::span<const Poly<F>>(gb.generators)).is_basis);
        for (const auto& g : gens)
            CHECK(normal_form(g, std::span<const Poly<F>>(gb.generators)).is_zero());
    };
    for (std::uint32_t m = 1; m <= 4; ++m)
        for (std::uint32_t n = 1; n <= 4; ++n)
            for (unsigned k = 1; k <= 4; ++k) {
                run(Q, m, n, k);
                run(F31, m, n, k);
            }
}

TEST_CASE("discover_weights") {
    Rationals Q;
    auto xy_sum = power_xy(Q, 0, 0, 1, 1, 1, 1);
    CHECK(discover_weights(xy_sum) == std::pair<std::uint32_t, std::uint32_t>(1, 1));
    auto curve = power_xy(Q, 0, 0, 1, 2, 3, 1);  // x^2 + y^3
    CHECK(discover_weights(curve) == std::pair<std::uint32_t, std::uint32_t>(3, 2));
    auto shifted = power_xy(Q, 1, 1, 1, 1, 1, 1);  // x^2 y + x y^2
    CHECK(discover_weights(shifted) == std::pair<std::uint32_t, std::uint32_t>(1, 1));
    // x^5 + x^2 y is homogeneous for wt(x)=1, wt(y)=3
    auto skew = mono_poly(Q, 5, 0) + mono_poly(Q, 2, 1);
    CHECK(discover_weights(skew) == std::pair<std::uint32_t, std::uint32_t>(1, 3));
    CHECK(discover_weights(mono_poly(Q, 2, 3).scalar_mul(BigRational(7))) ==
          std::pair<std::uint32_t, std::uint32_t>(1, 1));

    CHECK_THROWS_AS(discover_weights(mono_poly(Q, 3, 0) + mono_poly(Q, 1, 0)), DomainError);
    CHECK_THROWS_AS(discover_weights(mono_poly(Q, 1, 0) + Poly<Rationals>::constant(Q, Q.one())),
                    DomainError);
    // pair (0,1) consistent, third term breaks homogeneity
    auto broken = mono_poly(Q, 1, 3) + mono_poly(Q, 2, 0) + mono_poly(Q, 0, 2);
    CHECK_THROWS_AS(discover_weights(broken), DomainError);
    CHECK_THROWS_AS(discover_weights(Poly<Rationals>::zero(Q)), DomainError);
}

TEST_CASE("length_rank: anchor values") {
    Rationals Q;
    PrimeField F31(31), F7(7), F2(2);
    auto check_linear = [](const auto& field) {
        auto f = power_xy(field, 0, 0, 1, 1, 1, 1);
        CHECK(length_rank(field, 2, 2, f, 3) == 4);
        CHECK(length_rank(field, 2, 2, f, 5) == 4);
    };
    check_linear(Q);
    check_linear(F31);
    check_linear(F7);

    auto fQ = power_xy(Q, 0, 0, 1, 1, 1, 1);
    CHECK(length_rank(Q, 2, 2, fQ, 2) == 3);
    CHECK(length_rank(F31, 2, 2, power_xy(F31, 0, 0, 1, 1, 1, 1), 2) == 3);
    // (x+y)^2 = x^2 + y^2 in characteristic 2, so the colength jumps to 4
    CHECK(length_rank(F2, 2, 2, power_xy(F2, 0, 0, 1, 1, 1, 1), 2) == 4);

    CHECK(length_rank(Q, 3, 4, fQ, 0) == 0);
    CHECK(length_rank(Q, 3, 4, Poly<Rationals>::zero(Q), 2) == 12);

    auto cusp = power_xy(Q, 1, 1, 1, 1, 1, 1);  // x y (x + y)
    CHECK(length_rank(Q, 5, 5, cusp, 1) == 13);
    CHECK(length_rank(Q, 3, 3, cusp, 3) == 9);
    CHECK(length_rank(F31, 5, 5, power_xy(F31, 1, 1, 1, 1, 1, 1), 1) == 13);
}

TEST_CASE("length_rank: argument checks and policies") {
    Rationals Q;
    PrimeField F31(31);
    auto fQ = power_xy(Q, 0, 0, 1, 1, 1, 1);
    CHECK_THROWS_AS(length_rank(Q, 0, 2, fQ, 1), DomainError);
    CHECK_THROWS_AS(length_rank(Q, 2, 0, fQ, 1), DomainError);
    CHECK_THROWS_AS(length_rank(Q, 2, 2, fQ, -1), DomainError);
    CHECK_THROWS_AS(length_rank(Q, 60, 60, fQ, 1), DomainError);  // QQ size policy
    CHECK_THROWS_AS(length_rank_dense(Q, 50, 50, fQ, 1), DomainError);

    // the F_p route has no size policy at this scale: k >= m+n forces f^K
    // into the monomial part, so the colength is the full box
    auto f31 = power_xy(F31, 0, 0, 1, 1, 1, 1);
    CHECK(length_rank(F31, 60, 60, f31, 120) == 3600);
}

TEST_CASE("blockwise rank equals dense rank on small boxes") {
    Rationals Q;
    PrimeField F31(31), F7(7);
    auto run = [](const auto& field) {
        std::vector fs = {power_xy(field, 0, 0, 1, 1, 1, 1),   // x + y
                          power_xy(field, 1, 1, 1, 1, 1, 1),   // x y (x + y)
                          power_xy(field, 0, 0, 1, 2, 3, 1)};  // x^2 + y^3
        for (const auto& f : fs)
            for (long long M = 1; M <= 4; ++M)
                for (long long N = 1; N <= 4; ++N)
                    for (long long K = 0; K <= 3; ++K)
                        CHECK(length_rank(field, M, N, f, K) ==
                              length_rank_dense(field, M, N, f, K));
    };
    run(Q);
    run(F31);
    run(F7);
}

TEST_CASE("length_rank equals the staircase count of the Buchberger basis") {
    Rationals Q;
    PrimeField F31(31);
    auto run = [](const auto& field) {
        std::vector fs = {power_xy(field, 0, 0, 1, 1, 1, 1),
                          power_xy(field, 1, 0, 1, 1, 1, 1),   // x (x + y)
                          power_xy(field, 0, 0, 1, 2, 3, 1)};
        for (const auto& f : fs)
            for (std::uint32_t M = 1; M <= 4; ++M)
                for (std::uint32_t N = 1; N <= 4; ++N)
                    for (unsigned K = 1; K <= 2; ++K) {
                        auto gb = buchberger(field, pair_generators(field, M, N, f, K));
                        CHECK(staircase_count(gb.lt_ideal) ==
                              length_rank(field, M, N, f, K));
                    }
    };
    run(Q);
    run(F31);
}

TEST_CASE("length_rank is field independent on closed-form territory") {
    Rationals Q;
    PrimeField F31(31), F101(101);
    for (long long m = 1; m <= 5; ++m)
        for (long long n = 1; n <= 5; ++n)
            for (long long k = 1; k <= 5; ++k) {
                long long lq = length_rank(Q, m, n, power_xy(Q, 0, 0, 1, 1, 1, 1), k);
                CHECK(lq == length_rank(F31, m, n, power_xy(F31, 0, 0, 1, 1, 1, 1), k));
                CHECK(lq == length_rank(F101, m, n, power_xy(F101, 0, 0, 1, 1, 1, 1), k));
            }
}

TEST_CASE("staircase_count") {
    CHECK(staircase_count({mono(2, 0), mono(0, 2)}) == 4);
    CHECK(staircase_count({mono(2, 0), mono(0, 3), mono(1, 2)}) == 5);
    CHECK(staircase_count({mono(3, 0), mono(1, 2), mono(0, 3)}) == 7);
    // non-minimal and unsorted inputs are fine
    CHECK(staircase_count({mono(5, 5), mono(0, 3), mono(3, 0), mono(1, 2)}) == 7);
    CHECK(staircase_count({mono(0, 0)}) == 0);  // unit ideal

    CHECK_THROWS_AS(staircase_count({}), DomainError);
    CHECK_THROWS_AS(staircase_count({mono(1, 1)}), DomainError);
    CHECK_THROWS_AS(staircase_count({mono(2, 0)}), DomainError);
    CHECK_THROWS_AS(staircase_count({mono(0, 2)}), DomainError);
}

TEST_CASE("graded blocks partition the monomial box") {
    auto grading = detail::build_blocks(5, 7, 3, 2);
    long long total = 0;
    for (const auto& [d, blk] : grading.blocks) {
        auto [i0, count] = blk;
        total += count;
        // every listed monomial really has weighted degree d and sits in the box
        for (long long s = 0; s < count; ++s) {
            long long i = i0 + s * 2;  // step w_y
            CHECK(i < 5);
            long long j = (static_cast<long long>(d) - 3 * i) / 2;
            CHECK(j >= 0);
            CHECK(j < 7);
            CHECK(3 * i + 2 * j == static_cast<long long>(d));
        }
    }
    CHECK(total == 35);
}

TEST_CASE("truncating the odd family below the y-bound keeps the same lt ideal") {
    Rationals Q;
    PrimeField F31(31);
    auto run = [](const auto& field, std::uint32_t m, std::uint32_t n, std::uint32_t k) {
        using F = std::decay_t<decltype(field)>;
        IdealSpec spec;
        spec.M = m;
        spec.N = n;
        spec.K = 1;
        spec.a = 0;
        spec.b = 0;
        spec.c = k;
        auto closed = closed_groebner(field, spec);
        std::vector<Poly<F>> cand{mono_poly(field, m, 0), mono_poly(field, 0, n)};
        for (std::uint32_t t = 0; t < m; ++t) {
            if (k + 2 * t + 1 < m + n)  // truncation at y^n is nonzero exactly here
                cand.push_back(truncate_y(f_odd(field, t, k, m), n));
        }
        auto cert = is_groebner(field, std::span<const Poly<F>>(cand));
        CHECK(cert.is_basis);
        CHECK(minimal_lt_of(cand) == closed.lt_ideal);
    };
    for (std::uint32_t k = 1; k <= 7; ++k)
        for (std::uint32_t m = 1; m <= k; ++m)
            for (std::uint32_t n = 1; n <= 7; ++n) {
                run(Q, m, n, k);
                run(F31, m, n, k);
            }
}
