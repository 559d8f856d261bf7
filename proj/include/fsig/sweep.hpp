#ifndef FSIG_SWEEP_HPP
#define FSIG_SWEEP_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fsig/fsig.hpp"
#include "fsig/rational.hpp"

namespace fsig {

enum class SweepFormat { Csv, Json };

// A convergence experiment: fix the pair (A^2, (x^a y^b (x^u + y^v)^c)^t),
// then for every requested characteristic p and grid value t sample psi_p at
// the nearby rational point r/p, r = floor(t p), next to the limit function.
struct SweepConfig {
    long long a = 1, b = 0, c = 1;
    long long u = 1, v = 1;
    std::vector<std::uint32_t> primes;
    long long grid = 10;  // number of t samples
    // Both endpoints inclusive; they must satisfy 0 <= t_min <= t_max <=
    // lambda.  When absent the grid is spread evenly over (0, lambda).
    std::optional<BigRational> t_min, t_max;
    SweepFormat format = SweepFormat::Csv;
};

struct SweepRow {
    std::uint32_t p = 0;
    long long r = 0;        // floor(t p)
    BigRational t;          // the exact sample point r / p
    BigRational psi_p;      // F-signature in characteristic p at r / p
    BigRational psi_limit;  // limit function at r / p
};

struct SweepResult {
    SweepConfig config;
    BigRational lambda;
    std::vector<SweepRow> rows;  // p ascending, then t ascending
};

// Runs the experiment.  psi_p comes from the closed characteristic-p formula
// when u = v = 1 and from the rank-oracle definition otherwise; psi_limit
// always comes from the limit piecewise function.  Work is distributed over
// worker_count() threads; the result is deterministic regardless.
SweepResult run_sweep(const SweepConfig& config);

// RFC-4180 quoting: wrap in double quotes when the field contains a comma,
// quote or line break, doubling embedded quotes.
std::string csv_escape(const std::string& field);

// Header p,t,psi_p,psi_limit,abs_diff; exact rational columns except the
// final decimal diagnostic column.
std::string render_csv(const SweepResult& result);

// The same data as a single JSON document with fixed key order.
std::string render_json(const SweepResult& result);

}  // namespace fsig

#endif
