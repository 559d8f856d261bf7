#include <doctest.h>

#include <set>
#include <string>

#include "fsig/verify.hpp"

using namespace fsig;

TEST_CASE("verify suites pass on a small grid") {
    VerifyOptions options;
    options.max_size = 3;
    options.primes = {31};

    VerifyReport basis = verify_basis(options);
    CHECK(basis.all_passed());
    CHECK(basis.checks.size() == 3);

    VerifyReport length = verify_length(options);
    CHECK(length.all_passed());
    CHECK(length.checks.size() == 4);

    VerifyReport fsig_report = verify_fsig(options);
    CHECK(fsig_report.all_passed());
    CHECK(fsig_report.checks.size() == 9);

    VerifyReport all = verify_all(options);
    CHECK(all.all_passed());
    CHECK(all.checks.size() ==
          basis.checks.size() + length.checks.size() +
              fsig_report.checks.size());

    // Check names are unique so a FAIL line identifies its grid.
    std::set<std::string> names;
    for (const CheckResult& check : all.checks) names.insert(check.name);
    CHECK(names.size() == all.checks.size());

    for (const CheckResult& check : all.checks) {
        CHECK(check.passed);
        CHECK(check.detail.empty());
    }
}

TEST_CASE("render_report formats PASS/FAIL lines") {
    VerifyReport report;
    report.checks.push_back(CheckResult{"alpha", true, ""});
    report.checks.push_back(CheckResult{"beta", false, "k=1 m=2: 3 != 4"});
    std::string text = render_report(report);
    CHECK(text == "PASS alpha\nFAIL beta: k=1 m=2: 3 != 4\n1/2 checks passed\n");
    CHECK(!report.all_passed());

    VerifyReport empty;
    CHECK(!empty.all_passed());
}
