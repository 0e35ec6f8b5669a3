#pragma once

#include <string>

#include "kelc/klc.hpp"

namespace kelc {

/// Serializes a run trace to the versioned "klc-trace/1" JSON document:
/// {"schema": "klc-trace/1",
///  "levels": [{"level", "l", "T_B", "T_C"?, "T_D"?, "branch", "c_increment"}, ...],
///  "final": {"rule", "c_final"}}
std::string trace_to_json(const KlcTrace& trace, int indent = 2);

}  // namespace kelc
