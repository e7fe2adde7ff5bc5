#pragma once

namespace fbp {

/// Execution policy for the data-parallel kernels. The serial path is the
/// reference implementation; the parallel path must produce identical values
/// (every element is computed independently, reductions stay serial).
enum class ExecPolicy { serial, parallel };

/// Worker count used by OpenMP regions. Resolution order:
/// FBP_WORKERS environment variable, then set_worker_count(), then hardware.
int worker_count();
void set_worker_count(int n);

} // namespace fbp
