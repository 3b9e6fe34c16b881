#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "epi/reduction.hpp"

namespace epi {

/// Outcome of a randomized invariant suite.
struct SuiteReport {
    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::vector<std::string> messages;  // first few failures

    bool passed() const { return cases > 0 && failures == 0; }
};

struct LemmaConfig {
    std::uint64_t seed = 1;
    std::size_t pairs = 200;
    std::size_t max_len = 6;        // |qa|, |qb|
    std::size_t blocks = 3;         // random instance size
    std::size_t max_block_len = 3;
};

/**
 * State-transformation lemmas of a variant, checked up to bisimilarity:
 * adding a block to a loop state, the first block from s_I, next_stage, and
 * removing the last letter (separators first). Every intermediate state is
 * checked against the variant's frame conditions.
 */
SuiteReport lemma_suite(Variant v, const LemmaConfig &cfg);

/**
 * Wrong removals: a wrong bit, a bit where a separator is due, or
 * mismatched sides. The result must be failed, stay failed along a random
 * continuation, and never satisfy the goal.
 */
SuiteReport failure_suite(Variant v, std::uint64_t seed, std::size_t attempts);

/// Random applicable-action walks from s_I; after next_stage or a removal,
/// neither next_stage nor any ad_i may be applicable again.
SuiteReport plan_shape_suite(Variant v, std::uint64_t seed, std::size_t walks, std::size_t max_steps = 12);

} // namespace epi
