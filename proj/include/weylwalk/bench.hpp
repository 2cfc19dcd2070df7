#pragma once

#include <cstdint>

#include "weylwalk/io.hpp"

namespace weylwalk {

/// Time the propagator engines over a grid of step counts up to t_max.
/// Engines whose cost estimate exceeds `budget` are skipped.  Returns one
/// JSON row per (t, engine) with the wall time and the bit sizes reached by
/// the exact amplitudes.
io::Json run_bench(std::int64_t t_max, std::uint64_t budget, int jobs);

}  // namespace weylwalk
