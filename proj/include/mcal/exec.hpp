#ifndef MCAL_EXEC_HPP
#define MCAL_EXEC_HPP

namespace mcal {

/// Execution policy for the enumeration-heavy sweeps. The serial path is
/// the reference implementation; the parallel path runs the same sweep with
/// OpenMP worker threads and must produce identical results.
enum class Exec { serial, parallel };

}  // namespace mcal

#endif
