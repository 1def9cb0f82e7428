#pragma once

#include <cstdint>

namespace shiftpoly {

// Resource caps for the combinatorial stages.  Every enumeration that can blow
// up exponentially checks one of these up front and throws CapExceeded with the
// cap's name instead of grinding.
struct Caps {
  std::uint64_t max_patterns = 1ull << 24;  // pattern enumerations per shape
  std::uint64_t max_triples = 1ull << 22;   // invariance equations in the full family
  std::uint64_t max_rays = 200000;          // intermediate rays in double description
  std::uint64_t max_words = 1ull << 20;     // words per enumerated language level
  int max_torus = 8;                        // side length of periodic torus searches
};

}  // namespace shiftpoly
