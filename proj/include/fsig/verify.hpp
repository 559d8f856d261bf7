#ifndef FSIG_VERIFY_HPP
#define FSIG_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace fsig {

// One dual-route consistency check over a parameter grid.  On failure,
// detail holds the full parameters of the first counterexample (or the
// escaped exception message) so the mismatch can be reproduced directly.
struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    bool all_passed() const {
        for (const CheckResult& c : checks)
            if (!c.passed) return false;
        return !checks.empty();
    }
};

struct VerifyOptions {
    long long max_size = 6;                  // grid bound for k, m, n, M
    std::vector<std::uint32_t> primes{31, 101};
};

// Closed-form Groebner bases against the Buchberger oracle.
VerifyReport verify_basis(const VerifyOptions& options);

// Length formulas against each other and the rank oracle.
VerifyReport verify_length(const VerifyOptions& options);

// F-signature formulas: the colength identity, the limit reductions, the
// convergence bound, Corollary B and the non-stabilization witness.
VerifyReport verify_fsig(const VerifyOptions& options);

// All three suites concatenated.
VerifyReport verify_all(const VerifyOptions& options);

// "PASS <name>" / "FAIL <name>: <detail>" lines plus a summary line.
std::string render_report(const VerifyReport& report);

}  // namespace fsig

#endif
