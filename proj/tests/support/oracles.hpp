#pragma once

// Reference computations that do not share code with the library.

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "nhq/matrix.hpp"
#include "nhq/state.hpp"

namespace nhq::oracle {

inline Eigen::MatrixXcd to_eigen(const ComplexMatrix& m) {
  Eigen::MatrixXcd out(m.dim(), m.dim());
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) out(i, j) = m(i, j);
  return out;
}

inline ComplexMatrix from_eigen(const Eigen::MatrixXcd& m) {
  ComplexMatrix out(static_cast<int>(m.rows()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return out;
}

/// exp(-i M t) through Eigen's MatrixFunctions (Pade).
inline ComplexMatrix expm(const ComplexMatrix& m, double t) {
  const Eigen::MatrixXcd a = to_eigen(m) * std::complex<double>(0.0, -t);
  return from_eigen(a.exp());
}

/// Plain partial sum of exp(-i M t) with `terms` terms.
inline ComplexMatrix taylor_series(const ComplexMatrix& m, double t, int terms) {
  const Eigen::MatrixXcd a = to_eigen(m) * std::complex<double>(0.0, -t);
  Eigen::MatrixXcd term = Eigen::MatrixXcd::Identity(a.rows(), a.cols());
  Eigen::MatrixXcd sum = term;
  for (int k = 1; k < terms; ++k) {
    term = term * a / static_cast<double>(k);
    sum += term;
  }
  return from_eigen(sum);
}

/// First maximum of the postselected P(f) from |e> at zero detuning, where
/// c_e(t) vanishes. Above the EP c_e = cos(J't) - (g/J') sin(J't) with
/// g = Gamma/4, J' = sqrt(J^2 - g^2); below it c_e = cosh(kt) - (g/k) sinh(kt)
/// with k = sqrt(g^2 - J^2); at the EP c_e = 1 - g t.
inline double analytic_fpt(double gamma_e, double j) {
  const double g = gamma_e / 4.0;
  if (gamma_e == 0.0) return std::numbers::pi / (2.0 * j);
  if (j > g) {
    const double jp = std::sqrt(j * j - g * g);
    return std::atan(jp / g) / jp;
  }
  if (j == g) return 1.0 / g;
  const double k = std::sqrt(g * g - j * j);
  return std::atanh(k / g) / k;
}

/// Postselected P(f)(t) from |e> in closed form (unbroken regime, zero detuning).
inline double analytic_pn_f(double gamma_e, double j, double t) {
  const double g4 = gamma_e / 4.0;
  const double jp = std::sqrt(j * j - g4 * g4);
  const double ce = std::cos(jp * t) - g4 / jp * std::sin(jp * t);
  const double cf = j / jp * std::sin(jp * t);
  return cf * cf / (ce * ce + cf * cf);
}

/// Haar-random ket of dimension `dim`.
inline StateVector random_ket(std::mt19937_64& rng, int dim) {
  std::normal_distribution<double> n(0.0, 1.0);
  StateVector v(dim);
  for (int i = 0; i < dim; ++i) v[i] = Complex(n(rng), n(rng));
  return v.normalized();
}

/// Random Hermitian matrix with entries of order one.
inline ComplexMatrix random_hermitian(std::mt19937_64& rng, int dim) {
  std::normal_distribution<double> n(0.0, 1.0);
  ComplexMatrix m(dim);
  for (int i = 0; i < dim; ++i) {
    m(i, i) = n(rng);
    for (int j = i + 1; j < dim; ++j) {
      m(i, j) = Complex(n(rng), n(rng));
      m(j, i) = std::conj(m(i, j));
    }
  }
  return m;
}

/// Iterative Bayesian unfolding written directly from its update rule,
/// beta(i, j) = P(assigned j | prepared i).
inline std::array<double, 3> ibu(const std::array<double, 3>& observed,
                                 const std::array<std::array<double, 3>, 3>& beta, int iterations) {
  Eigen::Matrix3d b;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) b(i, j) = beta[i][j];
  const Eigen::Vector3d o(observed[0], observed[1], observed[2]);
  Eigen::Vector3d p = Eigen::Vector3d::Constant(1.0 / 3.0);
  for (int it = 0; it < iterations; ++it) {
    const Eigen::Vector3d predicted = b.transpose() * p;
    p = p.cwiseProduct(b * o.cwiseQuotient(predicted));
  }
  p /= p.sum();
  return {p(0), p(1), p(2)};
}

/// Uniform point of the 3-simplex with every component at least `floor`.
inline std::array<double, 3> random_simplex(std::mt19937_64& rng, double floor) {
  std::exponential_distribution<double> e(1.0);
  std::array<double, 3> w{e(rng), e(rng), e(rng)};
  const double s = w[0] + w[1] + w[2];
  const double free = 1.0 - 3.0 * floor;
  for (double& v : w) v = floor + free * v / s;
  return w;
}

}  // namespace nhq::oracle
