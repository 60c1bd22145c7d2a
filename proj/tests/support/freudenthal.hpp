// Independent character oracle: Freudenthal's recursion, computed level by
// level over the full weight set. Shares only the root-system arithmetic
// with the library; the production character path (alternating sum over W
// with the partition function) is never called here.

#pragma once

#include "core/characters.hpp"
#include "core/rootsystem.hpp"

namespace liecoh::testsupport {

Character freudenthal_character(const RootSystem& rs, const Weight& lambda);

}  // namespace liecoh::testsupport
