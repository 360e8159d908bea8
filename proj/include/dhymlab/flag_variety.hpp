#pragma once

// Flag varieties X_P = G/P_I and their invariant Kahler geometry.
//
// Every quantity below factors through coroot pairings <lambda, beta^vee> for
// beta in Phi_I^+ (positive roots not supported on I): invariant (1,1)-forms
// are simultaneously diagonal at the base point with those pairings as
// entries, so no differential-geometric representative is ever materialized.

#include "dhymlab/root_system.hpp"

#include <cstdint>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace dhymlab {

namespace detail {

struct FlagData {
  RootSystem rs;
  std::vector<std::size_t> parabolic;   // I, sorted, 0-based
  std::vector<std::size_t> complement;  // Delta \ I, sorted, 0-based
  std::vector<Root> phi_I_plus;
  Weight delta_P;
  std::vector<Integer> anticanonical;   // l_alpha over complement
  std::vector<Rational> rho_pairings;   // <rho+, beta^vee> over phi_I_plus
};

} // namespace detail

class FlagVariety {
public:
  const RootSystem& root_system() const { return d_->rs; }
  const std::vector<std::size_t>& parabolic_set() const { return d_->parabolic; }
  const std::vector<std::size_t>& picard_indices() const { return d_->complement; }
  const std::vector<Root>& phi_I_plus() const { return d_->phi_I_plus; }
  std::size_t dim_c() const { return d_->phi_I_plus.size(); }
  const Weight& delta_P() const { return d_->delta_P; }
  const std::vector<Integer>& anticanonical_coeffs() const { return d_->anticanonical; }
  const std::vector<Rational>& rho_pairings() const { return d_->rho_pairings; }
  std::size_t rank() const { return d_->rs.rank(); }
  std::size_t picard_rank() const { return d_->complement.size(); }

  /// I = Delta: the flag variety is a point.
  bool is_point() const { return dim_c() == 0; }
  bool is_full_flag() const { return d_->parabolic.empty(); }

  /// Embeds coefficients over Delta \ I into a full weight (zero on I).
  Weight weight_from_picard(const std::vector<Rational>& coeffs) const {
    if (coeffs.size() != picard_rank())
      throw std::invalid_argument("expected " + std::to_string(picard_rank()) +
                                  " coefficients (one per simple root outside the parabolic set), got " +
                                  std::to_string(coeffs.size()));
    Weight w(rank());
    for (std::size_t k = 0; k < coeffs.size(); ++k) w.coords[d_->complement[k]] = coeffs[k];
    return w;
  }

  /// Throws unless xi vanishes on every index in I.
  void require_supported(const Weight& xi) const {
    if (xi.size() != rank()) throw std::invalid_argument("weight rank does not match the flag variety");
    for (auto i : d_->parabolic)
      if (!xi.coords[i].is_zero())
        throw std::invalid_argument("weight has a nonzero coordinate on the parabolic set (index " +
                                    std::to_string(i + 1) + ")");
  }

  friend bool operator==(const FlagVariety& a, const FlagVariety& b) {
    return a.d_ == b.d_ || (a.d_->rs == b.d_->rs && a.d_->parabolic == b.d_->parabolic);
  }

private:
  friend FlagVariety make_flag(const RootSystem&, const std::vector<std::size_t>&);
  explicit FlagVariety(std::shared_ptr<const detail::FlagData> d) : d_(std::move(d)) {}
  std::shared_ptr<const detail::FlagData> d_;
};

/// I holds 0-based simple-root indices.
inline FlagVariety make_flag(const RootSystem& rs, const std::vector<std::size_t>& I) {
  std::set<std::size_t> iset(I.begin(), I.end());
  for (auto i : iset)
    if (i >= rs.rank())
      throw std::invalid_argument("parabolic index " + std::to_string(i + 1) + " out of range 1.." +
                                  std::to_string(rs.rank()));
  auto d = std::make_shared<detail::FlagData>(detail::FlagData{rs, {}, {}, {}, Weight(rs.rank()), {}, {}});
  d->parabolic.assign(iset.begin(), iset.end());
  for (std::size_t i = 0; i < rs.rank(); ++i)
    if (!iset.count(i)) d->complement.push_back(i);

  for (const auto& beta : rs.positive_roots()) {
    bool outside = false;
    for (auto j : d->complement) outside = outside || beta.coeffs[j] != 0;
    if (outside) d->phi_I_plus.push_back(beta);
  }
  for (const auto& beta : d->phi_I_plus) d->delta_P += root_to_weight(beta, rs);

  const auto rho = rho_plus(rs);
  for (const auto& beta : d->phi_I_plus) d->rho_pairings.push_back(pairing(rho, beta, rs));

  for (auto a : d->complement) {
    const auto& l = d->delta_P.coords[a];
    if (!l.is_integer() || l.sign() <= 0)
      throw std::logic_error("anticanonical coefficient is not a positive integer");
    d->anticanonical.push_back(l.numerator());
  }
  for (auto a : d->parabolic)
    if (!d->delta_P.coords[a].is_zero()) throw std::logic_error("delta_P is not orthogonal to the parabolic set");
  return FlagVariety(std::move(d));
}

/// Invariant Kahler class with weight lambda([omega]) = sum c_alpha varpi_alpha, c_alpha > 0.
class KahlerClass {
public:
  KahlerClass(FlagVariety fv, const std::vector<Rational>& coeffs)
      : fv_(std::move(fv)), weight_(fv_.weight_from_picard(coeffs)) {
    for (std::size_t k = 0; k < coeffs.size(); ++k)
      if (coeffs[k].sign() <= 0)
        throw std::invalid_argument("Kahler coefficient c_" + std::to_string(fv_.picard_indices()[k] + 1) +
                                    " = " + coeffs[k].str() + " is not strictly positive");
    for (const auto& beta : fv_.phi_I_plus()) a_.push_back(pairing(weight_, beta, fv_.root_system()));
  }

  static KahlerClass from_weight(const FlagVariety& fv, const Weight& w) {
    fv.require_supported(w);
    std::vector<Rational> c;
    for (auto i : fv.picard_indices()) c.push_back(w.coords[i]);
    return {fv, c};
  }

  const FlagVariety& flag() const { return fv_; }
  const Weight& weight() const { return weight_; }
  std::vector<Rational> coeffs() const {
    std::vector<Rational> c;
    for (auto i : fv_.picard_indices()) c.push_back(weight_.coords[i]);
    return c;
  }
  /// a_beta = <lambda([omega]), beta^vee> over Phi_I^+, all positive.
  const std::vector<Rational>& pairings() const { return a_; }

  KahlerClass scaled(const Rational& t) const { return from_weight(fv_, t * weight_); }

private:
  FlagVariety fv_;
  Weight weight_;
  std::vector<Rational> a_;
};

/// Line bundle O(s) with integral coefficients over Delta \ I.
class LineBundle {
public:
  LineBundle(FlagVariety fv, std::vector<std::int64_t> coeffs) : fv_(std::move(fv)), s_(std::move(coeffs)) {
    std::vector<Rational> c(s_.begin(), s_.end());
    weight_ = fv_.weight_from_picard(c);
  }

  const FlagVariety& flag() const { return fv_; }
  const std::vector<std::int64_t>& coeffs() const { return s_; }
  const Weight& weight() const { return weight_; }

  LineBundle dual() const {
    auto s = s_;
    for (auto& v : s) v = -v;
    return {fv_, s};
  }
  friend LineBundle operator*(const LineBundle& a, const LineBundle& b) {
    if (!(a.fv_ == b.fv_)) throw std::invalid_argument("tensor product of line bundles on different flag varieties");
    auto s = a.s_;
    for (std::size_t k = 0; k < s.size(); ++k) s[k] += b.s_[k];
    return {a.fv_, s};
  }
  friend bool operator==(const LineBundle& a, const LineBundle& b) { return a.fv_ == b.fv_ && a.s_ == b.s_; }

private:
  FlagVariety fv_;
  std::vector<std::int64_t> s_;
  Weight weight_;
};

/// q_beta = <xi, beta^vee> / <lambda([omega]), beta^vee>, ordered as phi_I_plus().
inline std::vector<Rational> eigenvalues(const KahlerClass& kc, const Weight& xi) {
  const auto& fv = kc.flag();
  fv.require_supported(xi);
  std::vector<Rational> q;
  q.reserve(fv.dim_c());
  for (std::size_t k = 0; k < fv.dim_c(); ++k)
    q.push_back(pairing(xi, fv.phi_I_plus()[k], fv.root_system()) / kc.pairings()[k]);
  return q;
}

/// Lambda_omega(xi): trace of omega^{-1} o xi.
inline Rational contraction(const KahlerClass& kc, const Weight& xi) {
  Rational s = 0;
  for (const auto& q : eigenvalues(kc, xi)) s += q;
  return s;
}

inline Rational volume(const KahlerClass& kc) {
  Rational v = 1;
  const auto& rho = kc.flag().rho_pairings();
  for (std::size_t k = 0; k < rho.size(); ++k) v *= kc.pairings()[k] / rho[k];
  return v;
}

/// deg = (n-1)! * Lambda(c1) * Vol, for the first-Chern weight c1. Zero on a point.
inline Rational degree_of_weight(const KahlerClass& kc, const Weight& c1) {
  const auto n = kc.flag().dim_c();
  if (n == 0) return 0;
  return Rational(factorial(n - 1)) * contraction(kc, c1) * volume(kc);
}

inline Rational degree(const KahlerClass& kc, const LineBundle& L) {
  if (!(L.flag() == kc.flag())) throw std::invalid_argument("line bundle and Kahler class live on different flag varieties");
  return degree_of_weight(kc, L.weight());
}

inline Rational slope(const KahlerClass& kc, const LineBundle& L) { return degree(kc, L); }

} // namespace dhymlab
