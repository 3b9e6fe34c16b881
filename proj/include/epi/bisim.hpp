#pragma once

#include <string>
#include <vector>

#include "epi/kripke.hpp"

namespace epi {

/// World -> block map with dense block ids, numbered by first occurrence.
struct Partition {
    std::vector<NodeIx> block;
    std::size_t count = 0;
};

/// Coarsest autobisimulation by iterated signature splitting.
Partition coarsest_bisimulation(const KripkeModel &m);

/// Generated submodel, then merged by the coarsest bisimulation. Each block
/// is named after its first world.
EpistemicState quotient(const EpistemicState &s);

bool bisimilar(const EpistemicState &a, const EpistemicState &b);

/// Byte-string fingerprint; equal iff the inputs are bisimilar.
using CanonicalKey = std::string;

CanonicalKey canonical_key(const EpistemicState &s);
std::string to_hex(const CanonicalKey &k);

/// Disjoint union with world names prefixed "L:" and "R:".
KripkeModel disjoint_union(const KripkeModel &a, const KripkeModel &b);

} // namespace epi
