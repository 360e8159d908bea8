#pragma once

// Exact Lagrangian phases and central charges.
//
// A sum of arctangents sum_beta arctan(b_beta / a_beta) with a_beta > 0 is the
// argument of prod_beta (a_beta + i b_beta). The product is computed over the
// Gaussian rationals; the number of times the partial products wrap past the
// negative real axis is tracked as an integer winding, so the lifted real
// value (not just its class mod 2 pi) is represented exactly.

#include "dhymlab/flag_variety.hpp"

#include <cmath>
#include <numbers>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

namespace dhymlab {

struct GaussianRational {
  Rational re;
  Rational im;

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  GaussianRational conj() const { return {re, -im}; }
  Rational norm() const { return re * re + im * im; }

  GaussianRational& operator+=(const GaussianRational& o) { re += o.re; im += o.im; return *this; }
  GaussianRational& operator-=(const GaussianRational& o) { re -= o.re; im -= o.im; return *this; }
  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  GaussianRational operator-() const { return {-re, -im}; }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussianRational operator*(const Rational& t, const GaussianRational& z) { return {t * z.re, t * z.im}; }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    if (b.is_zero()) throw std::domain_error("division by zero Gaussian rational");
    auto n = b.norm();
    auto p = a * b.conj();
    return {p.re / n, p.im / n};
  }
  friend bool operator==(const GaussianRational&, const GaussianRational&) = default;
};

/// Positive-real multiple test: z = t w with t > 0.
inline bool same_ray(const GaussianRational& z, const GaussianRational& w) {
  if (z.is_zero() || w.is_zero()) return false;
  auto p = z * w.conj();
  return p.im.is_zero() && p.re.sign() > 0;
}

/// Principal argument in (-pi, pi] as a double, robust to huge components.
inline double principal_arg(const GaussianRational& z) {
  auto scaled = [](const Rational& r, long& e) {
    if (r.is_zero()) { e = 0; return 0.0; }
    long en, ed;
    double mn = mpz_get_d_2exp(&en, r.numerator().get_mpz_t());
    double md = mpz_get_d_2exp(&ed, r.denominator().get_mpz_t());
    e = en - ed;
    return mn / md;
  };
  long ex, ey;
  double x = scaled(z.re, ex), y = scaled(z.im, ey);
  long e = std::max(ex, ey);
  return std::atan2(std::ldexp(y, static_cast<int>(std::max(ey - e, -2000L))),
                    std::ldexp(x, static_cast<int>(std::max(ex - e, -2000L))));
}

/// Canonical primitive representative: clear denominators, divide by the gcd.
/// Only positive scalings are applied, so the direction is preserved.
inline GaussianRational normalize_ray(const GaussianRational& z) {
  if (z.is_zero()) throw std::domain_error("zero has no ray");
  Integer l;
  mpz_lcm(l.get_mpz_t(), z.re.denominator().get_mpz_t(), z.im.denominator().get_mpz_t());
  Integer x = z.re.numerator() * (l / z.re.denominator());
  Integer y = z.im.numerator() * (l / z.im.denominator());
  Integer g;
  mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  return {Rational(Integer(x / g)), Rational(Integer(y / g))};
}

/// Real angle principal_arg(ray) + 2 pi winding.
class ExactPhase {
public:
  ExactPhase() : ray_{1, 0} {}
  ExactPhase(long winding, const GaussianRational& ray) : winding_(winding), ray_(normalize_ray(ray)) {}

  static ExactPhase zero() { return {}; }
  static ExactPhase pi() { return {0, {-1, 0}}; }

  long winding() const { return winding_; }
  const GaussianRational& ray() const { return ray_; }
  bool on_negative_real_axis() const { return ray_.im.is_zero() && ray_.re.sign() < 0; }

  /// Exact negation. The ray of pi is its own principal representative, so
  /// -(w, -1) = (-w - 1, -1); elsewhere the ray conjugates and winding negates.
  ExactPhase operator-() const {
    if (on_negative_real_axis()) return {-winding_ - 1, ray_};
    return {-winding_, ray_.conj()};
  }

  friend bool operator==(const ExactPhase&, const ExactPhase&) = default;

private:
  long winding_{0};
  GaussianRational ray_;
};

inline double phase_to_float(const ExactPhase& p) {
  return 2.0 * std::numbers::pi * static_cast<double>(p.winding()) + principal_arg(p.ray());
}

inline bool phases_equal_mod_2pi(const ExactPhase& p, const ExactPhase& q) { return same_ray(p.ray(), q.ray()); }

inline std::ostream& operator<<(std::ostream& os, const ExactPhase& p) {
  return os << "{winding " << p.winding() << ", ray (" << p.ray().re << ", " << p.ray().im << ")}";
}

/// "0", "pi", "pi/2", "-pi/2" on the axes, otherwise "arg(re,im)".
inline std::string ray_label(const GaussianRational& z) {
  auto r = normalize_ray(z);
  if (r.im.is_zero()) return r.re.sign() > 0 ? "0" : "pi";
  if (r.re.is_zero()) return r.im.sign() > 0 ? "pi/2" : "-pi/2";
  return "arg(" + r.re.str() + "," + r.im.str() + ")";
}

/// Largest admissible |winding| for a sum of n arctangents.
inline long winding_bound(std::size_t n) { return static_cast<long>((n + 3) / 4) + 1; }

/// Multiplies out prod (a_k + i b_k) with a_k > 0, tracking the lift of the argument.
inline ExactPhase phase_of_factors(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("phase_of_factors: length mismatch");
  GaussianRational acc{1, 0};
  long w = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k].sign() <= 0) throw std::invalid_argument("phase factor with non-positive real part");
    GaussianRational next = acc * GaussianRational{a[k], b[k]};
    const int f = b[k].sign();
    // Factor arguments lie in (-pi/2, pi/2), so at most one wrap per step:
    // up through pi from the closed upper half-plane into Im < 0, or down
    // from Im < 0 onto the negative real axis or into Im > 0.
    if (f > 0 && acc.im.sign() >= 0 && next.im.sign() < 0) ++w;
    if (f < 0 && acc.im.sign() < 0 && (next.im.sign() > 0 || (next.im.is_zero() && next.re.sign() < 0))) --w;
    acc = normalize_ray(next);
  }
  ExactPhase out(w, acc);
  if (std::labs(w) > winding_bound(a.size())) throw std::logic_error("winding bound violated");
  return out;
}

/// Theta_omega(xi) = sum_beta arctan(<xi, beta^vee> / <lambda([omega]), beta^vee>).
inline ExactPhase exact_phase(const KahlerClass& kc, const Weight& xi) {
  const auto& fv = kc.flag();
  fv.require_supported(xi);
  std::vector<Rational> b;
  for (const auto& beta : fv.phi_I_plus()) b.push_back(pairing(xi, beta, fv.root_system()));
  return phase_of_factors(kc.pairings(), b);
}

inline ExactPhase exact_phase(const KahlerClass& kc, const LineBundle& L) { return exact_phase(kc, L.weight()); }

struct CentralCharge {
  std::size_t n{0};
  GaussianRational value;
};

/// -(-i)^n.
inline GaussianRational charge_prefactor(std::size_t n) {
  switch (n % 4) {
    case 0: return {-1, 0};
    case 1: return {0, 1};
    case 2: return {1, 0};
    default: return {0, -1};
  }
}

/// (1/n!) integral (omega + i xi)^n = prod_beta (a_beta + i b_beta) / <rho+, beta^vee>.
inline GaussianRational normalized_top_power(const KahlerClass& kc, const Weight& xi) {
  const auto& fv = kc.flag();
  fv.require_supported(xi);
  GaussianRational acc{1, 0};
  for (std::size_t k = 0; k < fv.dim_c(); ++k) {
    GaussianRational factor{kc.pairings()[k], pairing(xi, fv.phi_I_plus()[k], fv.root_system())};
    acc = (Rational(1) / fv.rho_pairings()[k]) * (acc * factor);
  }
  return acc;
}

/// Z = -(-i)^n prod_beta (a_beta + i b_beta) / <rho+, beta^vee>.
inline CentralCharge central_charge(const KahlerClass& kc, const LineBundle& L) {
  if (!(L.flag() == kc.flag())) throw std::invalid_argument("line bundle and Kahler class live on different flag varieties");
  const auto n = kc.flag().dim_c();
  return {n, charge_prefactor(n) * normalized_top_power(kc, L.weight())};
}

/// Im(Z_E conj(Z_F)) == 0.
inline bool im_charge_ratio_zero(const KahlerClass& kc, const LineBundle& E, const LineBundle& F) {
  auto p = central_charge(kc, E).value * central_charge(kc, F).value.conj();
  return p.im.is_zero();
}

} // namespace dhymlab
