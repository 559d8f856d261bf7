#include "fsig/sweep.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>

#include "fsig/errors.hpp"
#include "fsig/lengths.hpp"
#include "fsig/oracle.hpp"
#include "fsig/parallel.hpp"
#include "fsig/poly.hpp"
#include "fsig/prime_field.hpp"

namespace fsig {

namespace {

constexpr int kDiffDigits = 12;

PiecewiseFn limit_for(const SweepConfig& config) {
    if (config.u == 1 && config.v == 1) {
        std::array<long long, 3> s{config.a, config.b, config.c};
        std::sort(s.begin(), s.end(), std::greater<>());
        return limit_fsig_simple(s[0], s[1], s[2]);
    }
    return limit_fsig_general(config.a, config.b, config.c, config.u,
                              config.v);
}

// psi_p(r/p) for the u = v = 1 pair.  At M = N = p the colength is symmetric
// in the three linear forms x, y, x + y (the substitution y -> x + y fixes
// the Frobenius ideal (x^p, y^p)), so the sorted threshold test is exact:
// r a >= p makes f^r a multiple of a p-th power of a linear form and
// r (a+b+c) >= 2p pushes every monomial of f^r past total degree 2p, so in
// both cases the colength is exactly p^2 and psi_p = 0.
BigRational psi_p_closed(long long a, long long b, long long c,
                         std::uint32_t p, long long r) {
    std::array<long long, 3> s{a, b, c};
    std::sort(s.begin(), s.end(), std::greater<>());
    const BigInt R = to_bigint(r), P = to_bigint(p);
    if (R * to_bigint(s[0]) >= P ||
        R * to_bigint(s[0] + s[1] + s[2]) >= 2 * P)
        return BigRational(0);
    return fsig_at_p(a, b, c, p, r);
}

BigRational psi_p_oracle(const SweepConfig& config, std::uint32_t p,
                         long long r) {
    PrimeField field(p);
    Poly<PrimeField> f = power_xy(field, config.a, config.b, config.c,
                                  config.u, config.v, 1);
    long long len = length_rank(field, p, p, f, r);
    return 1 - make_rational(to_bigint(len), to_bigint(p) * to_bigint(p));
}

}  // namespace

SweepResult run_sweep(const SweepConfig& config) {
    if (config.primes.empty())
        throw DomainError("run_sweep: no characteristics requested");
    std::vector<std::uint32_t> primes = config.primes;
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    for (std::uint32_t p : primes)
        if (!is_prime_u32(p))
            throw DomainError("run_sweep: " + std::to_string(p) +
                              " is not prime");
    if (config.grid < 1) throw DomainError("run_sweep: grid must be >= 1");
    if (config.t_min.has_value() != config.t_max.has_value())
        throw DomainError("run_sweep: t_min and t_max must be given together");

    PiecewiseFn limit = limit_for(config);
    const BigRational& lambda = limit.lambda();

    std::vector<BigRational> ts;
    ts.reserve(config.grid);
    if (config.t_min.has_value()) {
        const BigRational& lo = *config.t_min;
        const BigRational& hi = *config.t_max;
        if (lo < 0 || hi < lo || hi > lambda)
            throw DomainError(
                "run_sweep: need 0 <= t_min <= t_max <= lambda = " +
                to_string(lambda));
        if (config.grid == 1) {
            ts.push_back(lo);
        } else {
            for (long long i = 0; i < config.grid; ++i)
                ts.push_back(lo + (hi - lo) * to_bigint(i) /
                                      to_bigint(config.grid - 1));
        }
    } else {
        for (long long i = 1; i <= config.grid; ++i)
            ts.push_back(lambda * to_bigint(i) / to_bigint(config.grid + 1));
    }

    SweepResult result{config, lambda, {}};
    result.rows.resize(primes.size() * ts.size());
    parallel_for(result.rows.size(), [&](std::size_t idx) {
        const std::uint32_t p = primes[idx / ts.size()];
        const BigRational& t = ts[idx % ts.size()];
        SweepRow& row = result.rows[idx];
        row.p = p;
        BigInt rnum = t.get_num() * to_bigint(p) / t.get_den();
        row.r = rnum.get_si();
        row.t = make_rational(to_bigint(row.r), to_bigint(p));
        row.psi_p = config.u == 1 && config.v == 1
                        ? psi_p_closed(config.a, config.b, config.c, p, row.r)
                        : psi_p_oracle(config, p, row.r);
        row.psi_limit = limit.eval(row.t);
    });
    return result;
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char ch : field) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

namespace {

std::string abs_diff_string(const SweepRow& row) {
    BigRational diff = row.psi_p - row.psi_limit;
    if (diff < 0) diff = -diff;
    return to_decimal_string(diff, kDiffDigits);
}

}  // namespace

std::string render_csv(const SweepResult& result) {
    std::string out = "p,t,psi_p,psi_limit,abs_diff\n";
    for (const SweepRow& row : result.rows) {
        out += csv_escape(std::to_string(row.p)) + ',';
        out += csv_escape(to_string(row.t)) + ',';
        out += csv_escape(to_string(row.psi_p)) + ',';
        out += csv_escape(to_string(row.psi_limit)) + ',';
        out += csv_escape(abs_diff_string(row));
        out += '\n';
    }
    return out;
}

std::string render_json(const SweepResult& result) {
    nlohmann::ordered_json doc;
    doc["spec"] = {{"a", result.config.a},
                   {"b", result.config.b},
                   {"c", result.config.c},
                   {"u", result.config.u},
                   {"v", result.config.v}};
    doc["lambda"] = to_string(result.lambda);
    doc["rows"] = nlohmann::ordered_json::array();
    for (const SweepRow& row : result.rows) {
        nlohmann::ordered_json r;
        r["p"] = row.p;
        r["t"] = to_string(row.t);
        r["psi_p"] = to_string(row.psi_p);
        r["psi_limit"] = to_string(row.psi_limit);
        r["abs_diff"] = abs_diff_string(row);
        doc["rows"].push_back(std::move(r));
    }
    return doc.dump(2) + "\n";
}

}  // namespace fsig
