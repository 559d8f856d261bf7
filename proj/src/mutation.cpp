#include "fsig/mutation.hpp"

#include <array>
#include <cstdlib>

namespace fsig {

namespace {

constexpr std::array<const char*, 6> kNames = {
    "length_simple_a", "length_simple_b", "length_simple_c",
    "limit_general_1", "limit_general_2", "limit_general_3",
};

const std::string& active_name() {
    static const std::string value = [] {
        const char* env = std::getenv("FSIG_MUTATION");
        return std::string(env ? env : "");
    }();
    return value;
}

}  // namespace

bool mutation_active(MutationSite site) {
    return active_name() == kNames[static_cast<std::size_t>(site)];
}

const char* mutation_name(MutationSite site) { return kNames[static_cast<std::size_t>(site)]; }

std::vector<std::string> all_mutation_names() {
    return std::vector<std::string>(kNames.begin(), kNames.end());
}

}  // namespace fsig
