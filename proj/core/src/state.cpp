#include "nhq/state.hpp"

#include <cmath>
#include <ostream>
#include <string>

#include "nhq/errors.hpp"
#include "nhq/tolerances.hpp"

namespace nhq {

namespace {

void check_same_dim(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim()) throw InvalidArgument("state dimension mismatch");
}

}  // namespace

StateVector::StateVector(int dim) : dim_(dim) {
  if (dim != 2 && dim != 3) {
    throw InvalidArgument("state dimension must be 2 or 3, got " + std::to_string(dim));
  }
}

StateVector::StateVector(std::initializer_list<Complex> amplitudes)
    : StateVector(static_cast<int>(amplitudes.size())) {
  int i = 0;
  for (const auto& a : amplitudes) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
      throw InvalidArgument("state amplitudes must be finite");
    }
    c_[i++] = a;
  }
}

double StateVector::norm2() const {
  double sum = 0.0;
  for (int i = 0; i < dim_; ++i) sum += std::norm(c_[i]);
  return sum;
}

double StateVector::norm() const { return std::sqrt(norm2()); }

bool StateVector::is_normalized(double tol) const { return std::abs(norm2() - 1.0) <= tol; }

StateVector StateVector::normalized() const {
  const double n = norm();
  if (!(n > 0.0) || !std::isfinite(n)) throw NumericalError("cannot normalize a zero state");
  StateVector out = *this;
  out *= 1.0 / n;
  return out;
}

ComplexMatrix StateVector::projector() const {
  ComplexMatrix p(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) p(i, j) = c_[i] * std::conj(c_[j]);
  return p;
}

StateVector& StateVector::operator+=(const StateVector& rhs) {
  check_same_dim(*this, rhs);
  for (int i = 0; i < dim_; ++i) c_[i] += rhs.c_[i];
  return *this;
}

StateVector& StateVector::operator-=(const StateVector& rhs) {
  check_same_dim(*this, rhs);
  for (int i = 0; i < dim_; ++i) c_[i] -= rhs.c_[i];
  return *this;
}

StateVector& StateVector::operator*=(Complex s) {
  for (int i = 0; i < dim_; ++i) c_[i] *= s;
  return *this;
}

StateVector operator*(const ComplexMatrix& m, const StateVector& v) {
  if (m.dim() != v.dim()) throw InvalidArgument("matrix/state dimension mismatch");
  StateVector out(v.dim());
  for (int i = 0; i < v.dim(); ++i) {
    Complex sum = 0.0;
    for (int j = 0; j < v.dim(); ++j) sum += m(i, j) * v[j];
    out[i] = sum;
  }
  return out;
}

Complex inner(const StateVector& a, const StateVector& b) {
  check_same_dim(a, b);
  Complex sum = 0.0;
  for (int i = 0; i < a.dim(); ++i) sum += std::conj(a[i]) * b[i];
  return sum;
}

StateVector fix_phase(const StateVector& v) {
  const double scale = v.norm();
  for (int i = 0; i < v.dim(); ++i) {
    const double mag = std::abs(v[i]);
    if (mag > tol::kPhaseComponent * scale) {
      StateVector out = v * (std::conj(v[i]) / mag);
      out[i] = mag;
      return out;
    }
  }
  return v;
}

Level parse_level(std::string_view label) {
  if (label == "g") return Level::g;
  if (label == "e") return Level::e;
  if (label == "f") return Level::f;
  throw InvalidArgument("unknown level label '" + std::string(label) + "'");
}

std::string_view to_string(Level level) {
  switch (level) {
    case Level::g:
      return "g";
    case Level::e:
      return "e";
    case Level::f:
      return "f";
  }
  return "?";
}

int level_index(Level level, int dim) {
  if (dim == 3) return static_cast<int>(level);
  if (dim == 2) {
    if (level == Level::g) throw InvalidArgument("|g> is outside the (e, f) manifold");
    return static_cast<int>(level) - 1;
  }
  throw InvalidArgument("state dimension must be 2 or 3, got " + std::to_string(dim));
}

StateVector basis_ket(Level level, int dim) {
  const int index = level_index(level, dim);
  StateVector v(dim);
  v[index] = 1.0;
  return v;
}

Axis parse_axis(std::string_view label) {
  if (label == "x" || label == "X") return Axis::x;
  if (label == "y" || label == "Y") return Axis::y;
  if (label == "z" || label == "Z") return Axis::z;
  throw InvalidArgument("unknown axis '" + std::string(label) + "'");
}

std::string_view to_string(Axis axis) {
  switch (axis) {
    case Axis::x:
      return "x";
    case Axis::y:
      return "y";
    case Axis::z:
      return "z";
  }
  return "?";
}

ComplexMatrix pauli(Axis axis) {
  switch (axis) {
    case Axis::x:
      return ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}};
    case Axis::y:
      return ComplexMatrix{{0.0, -kI}, {kI, 0.0}};
    case Axis::z:
      break;
  }
  return ComplexMatrix{{1.0, 0.0}, {0.0, -1.0}};
}

StateVector pauli_eigenstate(Axis axis, int sign) {
  if (sign != 1 && sign != -1) throw InvalidArgument("eigenstate sign must be +1 or -1");
  const double r = 1.0 / std::sqrt(2.0);
  const double s = sign;
  switch (axis) {
    case Axis::x:
      return StateVector{r, s * r};
    case Axis::y:
      return StateVector{r, s * r * kI};
    case Axis::z:
      break;
  }
  return sign > 0 ? StateVector{1.0, 0.0} : StateVector{0.0, 1.0};
}

ComplexMatrix embed_ef(const ComplexMatrix& block) {
  if (block.dim() != 2) throw InvalidArgument("embed_ef expects a 2x2 block");
  ComplexMatrix out(3);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out(i + 1, j + 1) = block(i, j);
  return out;
}

StateVector embed_ef(const StateVector& ket) {
  if (ket.dim() != 2) throw InvalidArgument("embed_ef expects a 2-level ket");
  return StateVector{0.0, ket[0], ket[1]};
}

std::ostream& operator<<(std::ostream& os, const StateVector& v) {
  os << '(';
  for (int i = 0; i < v.dim(); ++i) os << (i ? ", " : "") << v[i];
  return os << ')';
}

}  // namespace nhq
