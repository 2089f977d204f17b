#pragma once

#include <cstdint>

#include "baire/json_io.hpp"

namespace baire {

struct SelftestConfig {
    std::uint64_t seed = 1;
    std::size_t trials = 200;
    std::size_t depth = 8;
};

/// Runs every module's invariant suite at the configured scale and returns a
/// deterministic report: same config, byte-identical JSON.
Json run_selftest(const SelftestConfig& config);

}  // namespace baire
