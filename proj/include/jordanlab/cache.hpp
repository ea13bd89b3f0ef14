#pragma once

#include <optional>
#include <string>

#include "jordanlab/assoc.hpp"
#include "jordanlab/linalg.hpp"

namespace jordanlab {

inline constexpr int kCacheFormatVersion = 1;

struct CachedComponent {
  ExactRref rref{0};
  bool prime_agreement = true;
};

// Disk cache of a component's reduced relation rows, one file per
// multidegree. Files carry a format version and a payload checksum; a
// version mismatch discards the file with a warning, a checksum mismatch
// raises CacheCorrupt. Writes go through a temp file and an atomic rename.
std::optional<CachedComponent> cache_load_component(const std::string& dir,
                                                    const MultiDegree& d,
                                                    size_t ncols);

void cache_store_component(const std::string& dir, const MultiDegree& d,
                           size_t ncols, const ExactRref& rref,
                           bool prime_agreement);

std::string cache_component_path(const std::string& dir, const MultiDegree& d);

}  // namespace jordanlab
