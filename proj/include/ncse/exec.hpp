#pragma once

namespace ncse {

/// Execution policy for the closure kernels.  Serial is the reference
/// implementation; Parallel expands frontiers with OpenMP.  Both produce
/// the same canonical result.
enum class Exec { Serial, Parallel };

}  // namespace ncse
