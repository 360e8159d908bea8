#pragma once

// Numerical check of invariant Kahler potentials on the opposite big cell of
// SL3/B. Coordinates z = (z1, z2, z3) parametrize the lower unitriangular
// matrix [[1,0,0],[z1,1,0],[z2,z3,1]]; the potential of O(s1, s2) is
//   s1 log(1 + |z1|^2 + |z2|^2) + s2 log(1 + |z3|^2 + |z1 z3 - z2|^2)
// (the 1/2pi normalization cancels in every eigenvalue ratio and is dropped).

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>
#include <vector>

namespace dhymlab::bigcell {

using Point = std::array<std::complex<double>, 3>;
using Function = std::function<double(const Point&)>;
using Hessian = Eigen::Matrix3cd;

inline double potential(long s1, long s2, const Point& z) {
  const double first = std::norm(z[0]) + std::norm(z[1]);
  const double second = std::norm(z[2]) + std::norm(z[0] * z[2] - z[1]);
  return static_cast<double>(s1) * std::log1p(first) + static_cast<double>(s2) * std::log1p(second);
}

inline Function potential_function(long s1, long s2) {
  return [s1, s2](const Point& z) { return potential(s1, s2, z); };
}

/// Thrown when a finite-difference evaluation is not finite or the Hessian is not Hermitian.
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Complex Hessian d^2 f / dz_j dzbar_k by central differences with step h,
/// returned symmetrized to exact Hermitian form. `raw_asymmetry` receives the
/// max |H - H^*| entry before symmetrization.
inline Hessian fd_complex_hessian(const Function& f, const Point& z0, double h, double* raw_asymmetry = nullptr) {
  if (!(h > 0)) throw std::invalid_argument("finite-difference step must be positive");
  // Real coordinates: index 2j is x_j, 2j+1 is y_j.
  auto eval = [&](int a, double da, int b, double db) {
    Point z = z0;
    auto shift = [&](int idx, double d) {
      if (idx < 0) return;
      z[idx / 2] += (idx % 2 == 0) ? std::complex<double>(d, 0) : std::complex<double>(0, d);
    };
    shift(a, da);
    shift(b, db);
    double v = f(z);
    if (!std::isfinite(v)) throw NumericalError("potential is not finite near the evaluation point");
    return v;
  };
  const double f0 = eval(-1, 0, -1, 0);
  auto second = [&](int a, int b) {
    if (a == b) return (eval(a, h, -1, 0) - 2 * f0 + eval(a, -h, -1, 0)) / (h * h);
    return (eval(a, h, b, h) - eval(a, h, b, -h) - eval(a, -h, b, h) + eval(a, -h, b, -h)) / (4 * h * h);
  };

  Hessian H;
  for (int j = 0; j < 3; ++j) {
    for (int k = 0; k < 3; ++k) {
      const int xj = 2 * j, yj = 2 * j + 1, xk = 2 * k, yk = 2 * k + 1;
      const double re = second(xj, xk) + second(yj, yk);
      const double im = second(xj, yk) - second(yj, xk);
      H(j, k) = 0.25 * std::complex<double>(re, im);
    }
  }
  if (!H.allFinite()) throw NumericalError("non-finite Hessian entry");
  if (raw_asymmetry) *raw_asymmetry = (H - H.adjoint()).cwiseAbs().maxCoeff();
  return 0.5 * (H + H.adjoint());
}

/// Sorted eigenvalues of H_omega^{-1} H_chi for Hermitian H_omega > 0.
inline std::vector<double> generalized_eigenvalues(const Hessian& h_chi, const Hessian& h_omega) {
  Eigen::SelfAdjointEigenSolver<Hessian> base(h_omega);
  if (base.info() != Eigen::Success || base.eigenvalues().minCoeff() <= 1e-8 * std::max(1.0, base.eigenvalues().maxCoeff()))
    throw NumericalError("Kahler Hessian is numerically singular or not positive definite");
  Eigen::GeneralizedSelfAdjointEigenSolver<Hessian> ges(h_chi, h_omega);
  if (ges.info() != Eigen::Success) throw NumericalError("generalized eigensolver failed");
  std::vector<double> out(ges.eigenvalues().data(), ges.eigenvalues().data() + 3);
  std::sort(out.begin(), out.end());
  return out;
}

struct EigenRatioReport {
  long s1{0}, s2{0};
  double step{0}, tolerance{0};
  std::vector<double> numeric;   // sorted generalized eigenvalues
  std::vector<double> expected;  // sorted {s1/2, s2/2, (s1+s2)/4}
  double max_error{0};
  double trace{0};               // trace(H_omega^{-1} H_chi)
  double expected_trace{0};      // (3/4)(s1+s2)
  bool passed{false};
};

inline constexpr double kDefaultStep = 1e-4;
inline constexpr double kDefaultTolerance = 1e-4;

/// Compares the numeric spectrum of omega_0^{-1} chi at the origin, with
/// omega_0 the (2,2) potential, against the closed-form eigenvalues.
inline EigenRatioReport eigen_ratio_check(long s1, long s2, double h = kDefaultStep, double tol = kDefaultTolerance) {
  const Point origin{};
  const Hessian h_omega = fd_complex_hessian(potential_function(2, 2), origin, h);
  const Hessian h_chi = fd_complex_hessian(potential_function(s1, s2), origin, h);

  EigenRatioReport r;
  r.s1 = s1;
  r.s2 = s2;
  r.step = h;
  r.tolerance = tol;
  r.numeric = generalized_eigenvalues(h_chi, h_omega);
  r.expected = {s1 / 2.0, s2 / 2.0, (s1 + s2) / 4.0};
  std::sort(r.expected.begin(), r.expected.end());
  for (int k = 0; k < 3; ++k) r.max_error = std::max(r.max_error, std::abs(r.numeric[k] - r.expected[k]));
  r.trace = (h_omega.inverse() * h_chi).trace().real();
  r.expected_trace = 0.75 * static_cast<double>(s1 + s2);
  r.passed = r.max_error < tol && std::abs(r.trace - r.expected_trace) < tol;
  return r;
}

} // namespace dhymlab::bigcell
