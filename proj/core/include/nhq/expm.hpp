#pragma once

#include "nhq/matrix.hpp"

namespace nhq {

/// Propagator exp(-i M t).
///
/// Dimension 2 goes through the closed-form eigendecomposition unless the
/// eigenvectors are nearly parallel (overlap above
/// tol::kExpmParallelOverlap), which happens at and around an exceptional
/// point; that case and dimension 3 use scaling-and-squaring Taylor.
ComplexMatrix matrix_exponential(const ComplexMatrix& m, double t);

/// exp(A) by scaling and squaring with a truncated Taylor series.
ComplexMatrix exp_taylor(const ComplexMatrix& a);

}  // namespace nhq
