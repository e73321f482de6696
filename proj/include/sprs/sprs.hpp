#pragma once

// Umbrella header.

#include "dot.hpp"          // IWYU pragma: export
#include "enumerate.hpp"    // IWYU pragma: export
#include "errors.hpp"       // IWYU pragma: export
#include "pc_graph.hpp"     // IWYU pragma: export
#include "pointer.hpp"      // IWYU pragma: export
#include "reduction_graph.hpp"  // IWYU pragma: export
#include "report.hpp"       // IWYU pragma: export
#include "rules.hpp"        // IWYU pragma: export
#include "verify.hpp"       // IWYU pragma: export
