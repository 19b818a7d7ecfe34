#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gf2od {

struct SelftestReport {
    struct Suite {
        std::string name;
        std::size_t checks = 0;
        std::size_t failures = 0;
    };
    std::vector<Suite> suites;

    bool ok() const {
        for (const auto& s : suites)
            if (s.failures) return false;
        return true;
    }
};

// Embedded property suites: exhaustive solvability for n <= 4, randomized
// rank-one-update checks, brute-force tree pattern counts for small trees.
SelftestReport run_selftest(std::uint64_t seed);

} // namespace gf2od
