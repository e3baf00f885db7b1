#pragma once

#include <array>
#include <initializer_list>
#include <iosfwd>
#include <string_view>

#include "nhq/matrix.hpp"

namespace nhq {

/// Ket of dimension 2 or 3. The amplitudes are not forced to unit norm:
/// propagation under a non-Hermitian generator and jump operators produce
/// sub-normalized vectors, and normalized() is how callers get back to |psi>.
class StateVector {
 public:
  explicit StateVector(int dim);
  StateVector(std::initializer_list<Complex> amplitudes);

  int dim() const noexcept { return dim_; }

  Complex& operator[](int i) noexcept { return c_[i]; }
  const Complex& operator[](int i) const noexcept { return c_[i]; }

  double norm2() const;
  double norm() const;
  bool is_normalized(double tol = 1e-12) const;

  /// Unit vector along *this. Throws NumericalError for the zero vector.
  StateVector normalized() const;

  /// |psi><psi| (not normalized first).
  ComplexMatrix projector() const;

  StateVector& operator+=(const StateVector& rhs);
  StateVector& operator-=(const StateVector& rhs);
  StateVector& operator*=(Complex s);

  friend StateVector operator+(StateVector a, const StateVector& b) { return a += b; }
  friend StateVector operator-(StateVector a, const StateVector& b) { return a -= b; }
  friend StateVector operator*(StateVector v, Complex s) { return v *= s; }
  friend StateVector operator*(Complex s, StateVector v) { return v *= s; }
  friend StateVector operator*(const ComplexMatrix& m, const StateVector& v);

 private:
  int dim_;
  std::array<Complex, 3> c_{};
};

/// <a|b>
Complex inner(const StateVector& a, const StateVector& b);

/// Multiplies by the global phase that makes the first component with
/// modulus above tol::kPhaseComponent real and positive.
StateVector fix_phase(const StateVector& v);

/// Qutrit levels. In dimension 3 the index order is (g, e, f); the
/// postselected qubit drops g and uses (e, f).
enum class Level { g, e, f };

/// Parses "g", "e" or "f".
Level parse_level(std::string_view label);
std::string_view to_string(Level level);

int level_index(Level level, int dim);

/// Unit vector for a level. Throws InvalidArgument for |g> in dimension 2.
StateVector basis_ket(Level level, int dim);

enum class Axis { x, y, z };

Axis parse_axis(std::string_view label);
std::string_view to_string(Axis axis);

/// Pauli operator on the (e, f) manifold:
/// sigma_z = |e><e| - |f><f|, sigma_x = |e><f| + |f><e|,
/// sigma_y = -i|e><f| + i|f><e|.
ComplexMatrix pauli(Axis axis);

/// Eigenstate of pauli(axis) with eigenvalue `sign` (+1 or -1), phase fixed.
StateVector pauli_eigenstate(Axis axis, int sign);

/// Embeds a 2x2 operator on (e, f) into the qutrit space, zero on |g>.
ComplexMatrix embed_ef(const ComplexMatrix& block);
/// Embeds an (e, f) ket into the qutrit space.
StateVector embed_ef(const StateVector& ket);

std::ostream& operator<<(std::ostream& os, const StateVector& v);

}  // namespace nhq
