#include <doctest.h>

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "fsig/fsig.hpp"
#include "fsig/sweep.hpp"

using namespace fsig;

namespace {

BigRational q(long long num, long long den = 1) {
    return make_rational(to_bigint(num), to_bigint(den));
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string::npos) nl = text.size();
        lines.push_back(text.substr(pos, nl - pos));
        pos = nl + 1;
    }
    return lines;
}

}  // namespace

TEST_CASE("csv_escape: RFC-4180 quoting") {
    CHECK(csv_escape("5/9") == "5/9");
    CHECK(csv_escape("") == "");
    CHECK(csv_escape("a,b") == "\"a,b\"");
    CHECK(csv_escape("say \"hi\"") == "\"say \"\"hi\"\"\"");
    CHECK(csv_escape("two\nlines") == "\"two\nlines\"");
}

TEST_CASE("run_sweep: closed route rows are exact and ordered") {
    SweepConfig config;
    config.a = 1, config.b = 1, config.c = 1, config.u = 1, config.v = 1;
    config.primes = {37, 31};  // unsorted on purpose
    config.grid = 4;
    SweepResult result = run_sweep(config);

    CHECK(result.lambda == q(2, 3));
    REQUIRE(result.rows.size() == 8);
    PiecewiseFn psi = limit_fsig_simple(1, 1, 1);
    std::uint32_t prev_p = 0;
    for (std::size_t i = 0; i < result.rows.size(); ++i) {
        const SweepRow& row = result.rows[i];
        CHECK(row.p == (i < 4 ? 31u : 37u));
        CHECK(row.p >= prev_p);
        prev_p = row.p;
        // r = floor(t p) for t = lambda (i+1)/5, and the row records r/p.
        BigRational t_grid = result.lambda * static_cast<int>(i % 4 + 1) / 5;
        BigInt rn = t_grid.get_num() * to_bigint(row.p) / t_grid.get_den();
        CHECK(row.r == rn.get_si());
        CHECK(row.t == q(row.r, row.p));
        CHECK(row.psi_p == fsig_at_p(1, 1, 1, row.p, row.r));
        CHECK(row.psi_limit == psi.eval(row.t));
    }
    // t within each p block is strictly increasing.
    for (std::size_t i = 1; i < 4; ++i) {
        CHECK(result.rows[i - 1].t < result.rows[i].t);
        CHECK(result.rows[i + 3].t < result.rows[i + 4].t);
    }
}

TEST_CASE("run_sweep: boundary sample point t = lambda gives psi_p = 0") {
    // For (1,1,1) at p = 3 the grid point t = 2/3 hits r/p = lambda exactly;
    // there the colength is exactly p^2, so psi_p = 0 = psi.
    SweepConfig config;
    config.a = 1, config.b = 1, config.c = 1;
    config.primes = {3};
    config.grid = 1;
    config.t_min = q(2, 3);
    config.t_max = q(2, 3);
    SweepResult result = run_sweep(config);
    REQUIRE(result.rows.size() == 1);
    CHECK(result.rows[0].r == 2);
    CHECK(result.rows[0].psi_p == q(0));
    CHECK(result.rows[0].psi_limit == q(0));
}

TEST_CASE("run_sweep: oracle route matches the definition and the bound") {
    SweepConfig config;
    config.a = 1, config.b = 0, config.c = 1, config.u = 2, config.v = 3;
    config.primes = {7, 11};
    config.grid = 3;
    SweepResult result = run_sweep(config);
    CHECK(result.lambda == q(5, 9));
    REQUIRE(result.rows.size() == 6);
    for (const SweepRow& row : result.rows) {
        BigRational diff = row.psi_p - row.psi_limit;
        if (diff < 0) diff = -diff;
        CHECK(diff <= q(10, row.p));
        CHECK(row.psi_p >= 0);
        CHECK(row.psi_p <= 1);
    }
    // Determinism: a second run renders byte-identical output.
    CHECK(render_csv(run_sweep(config)) == render_csv(result));
    CHECK(render_json(run_sweep(config)) == render_json(result));
}

TEST_CASE("run_sweep: validation") {
    SweepConfig config;  // the (1,0,1,2,3) pair: lambda = 5/9
    config.a = 1, config.b = 0, config.c = 1, config.u = 2, config.v = 3;
    config.primes = {10};
    CHECK_THROWS_AS(run_sweep(config), DomainError);  // composite p
    config.primes.clear();
    CHECK_THROWS_AS(run_sweep(config), DomainError);  // no primes
    config.primes = {31};
    config.grid = 0;
    CHECK_THROWS_AS(run_sweep(config), DomainError);  // empty grid
    config.grid = 2;
    config.t_min = q(1, 9);
    CHECK_THROWS_AS(run_sweep(config), DomainError);  // t_min without t_max
    config.t_max = q(2, 3);
    CHECK_THROWS_AS(run_sweep(config), DomainError);  // beyond lambda = 5/9
    config.t_max = q(1, 2);
    CHECK_NOTHROW(run_sweep(config));
}

TEST_CASE("render_csv and render_json encode identical data") {
    SweepConfig config;
    config.a = 2, config.b = 1, config.c = 0;
    config.primes = {31, 101};
    config.grid = 5;
    SweepResult result = run_sweep(config);

    std::vector<std::string> lines = split_lines(render_csv(result));
    REQUIRE(lines.size() == 11);
    CHECK(lines[0] == "p,t,psi_p,psi_limit,abs_diff");

    nlohmann::json doc = nlohmann::json::parse(render_json(result));
    CHECK(doc["spec"]["a"] == 2);
    CHECK(doc["spec"]["u"] == 1);
    CHECK(doc["lambda"] == to_string(result.lambda));
    REQUIRE(doc["rows"].size() == 10);
    for (std::size_t i = 0; i < 10; ++i) {
        const auto& row = doc["rows"][i];
        std::string expect = std::to_string(result.rows[i].p) + "," +
                             to_string(result.rows[i].t) + "," +
                             to_string(result.rows[i].psi_p) + "," +
                             to_string(result.rows[i].psi_limit) + "," +
                             row["abs_diff"].get<std::string>();
        CHECK(lines[i + 1] == expect);
        CHECK(row["p"].get<std::uint32_t>() == result.rows[i].p);
        CHECK(row["t"].get<std::string>() == to_string(result.rows[i].t));
    }
    // The diagnostic column really is a decimal, not a rational.
    CHECK(doc["rows"][0]["abs_diff"].get<std::string>().find('.') !=
          std::string::npos);
}
