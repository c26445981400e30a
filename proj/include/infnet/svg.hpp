#pragma once

#include <string>

#include "infnet/free_particle.hpp"
#include "infnet/network.hpp"

namespace infnet {

// Hasse diagram of the transitive reduction: height follows the longest
// influence path from the sources, chains are thick vertical polylines and
// covering influences between chains are arrows. Requires a finalized network.
std::string hasse_svg(const InfluenceNetwork& net);

// Zig-zag path with time running upward, one segment per step.
std::string path_svg(const SpacetimePath& path);

}  // namespace infnet
