#pragma once

#include <string>

#include "adw/cli/config.hpp"

namespace adw {

inline constexpr const char* kToolVersion = "adw 0.1.0";

// Executes one batch mode (congruence | caustics | fields | uwl | render),
// writing the mode's data files and a manifest.json into [run] output_dir.
// A numerical failure still leaves a manifest behind, with status "partial"
// and the error recorded, before the exception propagates.
void run_mode(const RunConfig& cfg, const std::string& mode);

}  // namespace adw
