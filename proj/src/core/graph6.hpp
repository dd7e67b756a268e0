#ifndef HOMCOUNT_CORE_GRAPH6_HPP
#define HOMCOUNT_CORE_GRAPH6_HPP

#include <string>

#include "graph.hpp"

namespace homcount {

// Standard graph6: leading byte n+63 (n <= 62) or the 126-prefixed long
// form, then the upper triangle column-major, six bits per byte, each +63.
std::string graph6Encode(const SimpleGraph& g);
SimpleGraph graph6Decode(const std::string& bytes);

}  // namespace homcount

#endif
