// Brute-force oracles used to pin expected values: plain exhaustive
// enumeration, no memoization, no shared code with the paths under test.

#pragma once

#include <map>
#include <set>
#include <vector>

#include "core/characters.hpp"
#include "core/rootsystem.hpp"

namespace liecoh::testsupport {

// All roots obtained by closing the simple roots under simple reflections.
std::set<RootVector> reflection_closure(const RootSystem& rs);

// size-of-multiset -> number of multisets from S summing to mu, by direct
// depth-first enumeration of non-increasing index sequences.
std::map<int, long long> brute_multiset_partitions(const RootSystem& rs, const RootVector& mu,
                                                   const std::vector<RootVector>& S);

}  // namespace liecoh::testsupport
