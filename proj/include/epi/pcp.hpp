#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace epi {

/// Word pairs (a_i, b_i) over {0,1}; empty words allowed.
struct PcpInstance {
    std::vector<std::pair<std::string, std::string>> blocks;
};

/// 1-based block indices.
using Match = std::vector<std::size_t>;

/// Throws FormatError unless nonempty with binary words.
void validate(const PcpInstance &inst);

/// Shortest match of length <= max_len, lexicographically least among those.
std::optional<Match> brute_force_match(const PcpInstance &inst, std::size_t max_len);

/// Common concatenation; throws NotAMatch.
std::string matched_word(const PcpInstance &inst, const Match &m);

} // namespace epi
