#pragma once

namespace thetakit {

// Selects between the OpenMP kernel and the serial reference loop. Both
// produce identical, canonically ordered output.
enum class Exec { serial, parallel };

int max_threads();

}  // namespace thetakit
