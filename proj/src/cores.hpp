#ifndef SEQNET_CORES_HPP
#define SEQNET_CORES_HPP

#include <cstdint>
#include <set>
#include <vector>

#include "network.hpp"

namespace seqnet {

enum class CoreMode { Degree, Strength };

// Unique fixed point of iterated removal of nodes whose in/out degree or
// strength (within the surviving induced subgraph) falls below `order`.
// Self-loops count toward both directions and disappear with their node.
std::set<SignId> core_set(const SignNetwork& net, std::uint64_t order, Direction dir,
                          CoreMode mode);

struct CoreProfile {
    Direction direction = Direction::In;
    CoreMode mode = CoreMode::Degree;
    std::vector<std::pair<std::uint64_t, std::size_t>> sizes; // order 1.. -> core size
    std::uint64_t innermost_order = 0;                        // max order with non-empty core
    std::set<SignId> innermost_set;
};

CoreProfile core_profile(const SignNetwork& net, Direction dir, CoreMode mode);

struct LexiconSets {
    std::set<SignId> medial;    // innermost-out (intersect) innermost-in
    std::set<SignId> preceders; // innermost-out minus medial
    std::set<SignId> followers; // innermost-in minus medial
};

LexiconSets lexicon_sets(const SignNetwork& net, CoreMode mode);

} // namespace seqnet

#endif
