#pragma once

// Numerical tolerances shared across the library. Change them here only.

namespace nhq::tol {

// |norm^2 - 1| for a state to count as normalized.
inline constexpr double kNormalized = 1e-12;

// Elementwise Hermiticity of a density matrix.
inline constexpr double kHermitian = 1e-12;
// Hermiticity accepted by eig_hermitian before symmetrizing.
inline constexpr double kHermitianInput = 1e-10;
// Smallest eigenvalue allowed in a density matrix.
inline constexpr double kMinEigenvalue = -1e-10;
// Slack on trace <= 1.
inline constexpr double kTraceExcess = 1e-12;

// Bloch vectors may exceed the unit ball by this much.
inline constexpr double kBlochExcess = 1e-9;

// Jacobi sweeps stop when the off-diagonal Frobenius norm drops below this
// (scaled by max(1, ||M||_F)).
inline constexpr double kJacobiOffDiagonal = 1e-14;

// Components with modulus below this are skipped when fixing the global phase.
inline constexpr double kPhaseComponent = 1e-10;

// Eigenvector overlap above which the 2x2 exponential abandons the
// eigendecomposition and falls back to the Taylor series.
inline constexpr double kExpmParallelOverlap = 1.0 - 1e-8;

// Eigenvector overlap above which a 2x2 matrix is reported defective.
inline constexpr double kDefectiveOverlap = 1.0 - 1e-6;

// Default discriminant tolerance (rad/us) for EP classification.
inline constexpr double kExceptionalPoint = 1e-9;

// Survival probability below which postselection is considered to have failed.
inline constexpr double kSurvivalUnderflow = 1e-300;

// Postselection success below which a conditioned ensemble is empty.
inline constexpr double kEmptyEnsemble = 1e-12;

// Row-sum tolerance of a confusion matrix, and the looser one used for the
// printed calibration matrix.
inline constexpr double kRowSum = 1e-9;
inline constexpr double kPrintedRowSum = 2e-3;

// Probability vectors must sum to one within this.
inline constexpr double kSimplex = 1e-12;

// Eigenvalue gap below which purification reports degeneracy.
inline constexpr double kPurifyGap = 1e-12;

// Smallest superposition norm accepted by superpose().
inline constexpr double kSuperposeNorm = 1e-12;

}  // namespace nhq::tol
