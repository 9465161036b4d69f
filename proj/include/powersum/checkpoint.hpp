#pragma once

#include <string>

#include "powersum/sieve.hpp"

namespace powersum {

// Versioned, line-oriented text format; integers stored as decimal strings.
// Writes are atomic (temp file then rename). Loading a corrupt or
// wrong-version file throws std::runtime_error with a specific diagnostic.
inline constexpr int kCheckpointFormatVersion = 1;

void checkpoint_save(const SieveState& state, const std::string& path);
SieveState checkpoint_load(const std::string& path);

}  // namespace powersum
