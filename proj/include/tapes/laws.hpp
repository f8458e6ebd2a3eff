#ifndef TAPES_LAWS_HPP
#define TAPES_LAWS_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace tapes {

struct LawCheck {
    std::string name;
    int checked = 0;     // instances where the law premise applied
    int failures = 0;
    std::string witness; // description of the first failure
    bool ok() const { return failures == 0; }
};

/// Named suites of algebraic laws checked on randomly sampled finite
/// relations (and matrices). Each law is sampled `samples` times over
/// carriers of size at most `max_size`.
std::vector<std::string> law_suite_names();
std::vector<LawCheck> run_law_suite(const std::string& suite, int samples, std::uint64_t seed, int max_size = 4);

}  // namespace tapes

#endif
