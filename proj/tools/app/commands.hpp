#pragma once

#include <filesystem>

#include "config.hpp"
#include "table.hpp"

namespace nhq::cli {

/// J, eigenvalues of H_eff, eigenvector overlap and regime per sweep point.
SweepTable cmd_spectrum(const RunConfig& config);

/// Un-postselected P(+z) and postselected Pn(+z) from |e>, per J and t.
SweepTable cmd_sweep(const RunConfig& config);

/// First passage time from |e> and the Hermitian reference per J.
SweepTable cmd_fpt(const RunConfig& config);

/// OFS per J, initial state and t, with the renormalization ratio r_f/r_e.
SweepTable cmd_linearity(const RunConfig& config);

/// Mixture test of the postselected qubit and of the full qutrit.
SweepTable cmd_mixture(const RunConfig& config);

struct TrajectoryTables {
  SweepTable trajectories;  // one row per trajectory
  SweepTable aggregate;     // one row per time
};

/// `shots` quantum-jump trajectories from |e>.
TrajectoryTables cmd_trajectories(const RunConfig& config);

/// IBU correction and reconstruction of every tomography point in a counts
/// file, using the configured beta.
SweepTable cmd_ingest(const std::filesystem::path& counts_csv, const RunConfig& config);

}  // namespace nhq::cli
