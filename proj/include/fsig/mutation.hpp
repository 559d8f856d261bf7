#ifndef FSIG_MUTATION_HPP
#define FSIG_MUTATION_HPP

#include <string>
#include <vector>

namespace fsig {

// Self-test hook: setting FSIG_MUTATION=<site name> in the environment
// negates the comparison at exactly one case boundary.  The verification
// suites must then fail — this is how the test suite proves it would catch a
// misplaced boundary.  With the variable unset every site is inert.
enum class MutationSite {
    LengthSimpleA,
    LengthSimpleB,
    LengthSimpleC,
    LimitGeneral1,
    LimitGeneral2,
    LimitGeneral3,
};

// True iff FSIG_MUTATION names this site (read once per process).
bool mutation_active(MutationSite site);

const char* mutation_name(MutationSite site);
std::vector<std::string> all_mutation_names();

}  // namespace fsig

#endif
