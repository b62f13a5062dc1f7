#pragma once

#include <filesystem>
#include <string>

#include "psi/analysis.hpp"

namespace psi {

// Checkpoint documents are JSON objects with exactly the keys
// {version, max_done, collisions, divisible_hits}. psi values and quotients
// are decimal strings.
std::string checkpoint_to_string(const SweepCheckpoint& cp);

// Throws CheckpointError for malformed documents, missing or extra keys, and
// version mismatches.
SweepCheckpoint checkpoint_from_string(const std::string& text);

// Writes to a sibling temporary file, then renames over path.
void save_checkpoint(const std::filesystem::path& path, const SweepCheckpoint& cp);
SweepCheckpoint load_checkpoint(const std::filesystem::path& path);

}  // namespace psi
