// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace rmplan {

// Execution policy for the map-construction kernels. Serial is the reference
// implementation; Parallel uses OpenMP and must produce bitwise-equal output.
enum class Exec { Serial, Parallel };

}  // namespace rmplan
