#pragma once

#include <ostream>

#include "emc/explorer.hpp"
#include "emc/model.hpp"

namespace emc {

inline constexpr const char* kBoundaryMarker = "==========";
inline constexpr const char* kCycleMarker = "----------";
inline constexpr const char* kErrorPrefix = "!!! ";

// Writes the counterexample of `finding` (one state per line) followed by
// its "!!! " line. With `quiet`, only the "!!! " line. Nothing for a pass.
void write_finding(std::ostream& out, const Model& model, const StateStore& store,
                   const Finding& finding, bool quiet);

}  // namespace emc
