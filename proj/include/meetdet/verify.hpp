#pragma once

/**
 * @file verify.hpp
 * @brief Cross-method property suite over seeded random instances: every
 *        closed form against its brute-force oracle, plus the structural
 *        identities the evaluators rely on.
 *
 * Output is deterministic for a given seed: per-property pass counts only,
 * no timings, so two runs (serial or threaded) are byte-identical.
 */

#include <cstdint>
#include <ostream>

namespace meetdet {

struct VerifyOptions {
    std::uint64_t seed = 42;
    int trials = 50;
    int nmax = 4;
    int kmax = 4;
    bool inject_fault = false; // test hook: corrupts one comparison
};

struct VerifyOutcome {
    int properties = 0;
    int checks = 0;
    int failures = 0;
    bool ok() const { return failures == 0; }
};

VerifyOutcome run_verify(const VerifyOptions& opt, std::ostream& out);

} // namespace meetdet
