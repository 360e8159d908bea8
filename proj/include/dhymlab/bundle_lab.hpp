#pragma once

// Whitney sums of line bundles with their diagonal Chern connections:
// instanton classification, slope stability, level-set enumeration and
// h^0(End E) through Borel-Weil and the Weyl dimension formula.

#include "dhymlab/phase.hpp"

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dhymlab {

class SumBundle {
public:
  explicit SumBundle(std::vector<LineBundle> summands) : summands_(std::move(summands)) {
    if (summands_.empty()) throw std::invalid_argument("a sum bundle needs at least one summand");
    for (const auto& L : summands_)
      if (!(L.flag() == summands_.front().flag()))
        throw std::invalid_argument("summands live on different flag varieties");
  }

  const FlagVariety& flag() const { return summands_.front().flag(); }
  const std::vector<LineBundle>& summands() const { return summands_; }
  std::size_t rank() const { return summands_.size(); }

  /// Coordinate-wise sum of summand weights (weight of det E).
  Weight first_chern_weight() const {
    Weight w(flag().rank());
    for (const auto& L : summands_) w += L.weight();
    return w;
  }

private:
  std::vector<LineBundle> summands_;
};

inline Rational degree(const KahlerClass& kc, const SumBundle& E) {
  if (!(E.flag() == kc.flag())) throw std::invalid_argument("bundle and Kahler class live on different flag varieties");
  return degree_of_weight(kc, E.first_chern_weight());
}

inline Rational slope(const KahlerClass& kc, const SumBundle& E) {
  return degree(kc, E) / Rational(static_cast<long>(E.rank()));
}

enum class InstantonType { TypeI, TypeII, TypeIII, Neither };
enum class Stability { Stable, Polystable, Unstable };

inline const char* to_string(InstantonType t) {
  switch (t) {
    case InstantonType::TypeI: return "TypeI";
    case InstantonType::TypeII: return "TypeII";
    case InstantonType::TypeIII: return "TypeIII";
    default: return "Neither";
  }
}

inline const char* to_string(Stability s) {
  switch (s) {
    case Stability::Stable: return "Stable";
    case Stability::Polystable: return "Polystable";
    default: return "Unstable";
  }
}

struct InstantonClassification {
  bool hym{false};
  bool dhym{false};
  InstantonType type_label{InstantonType::Neither};
  Stability stability{Stability::Stable};
};

inline InstantonType instanton_type(bool hym, bool dhym) {
  if (hym && dhym) return InstantonType::TypeI;
  if (hym) return InstantonType::TypeII;
  if (dhym) return InstantonType::TypeIII;
  return InstantonType::Neither;
}

/// HYM: equal summand contractions. dHYM: summand phases pairwise equal mod 2 pi,
/// so every diagonal entry (omega + i chi_l)^n of the curvature power shares one ray.
inline InstantonClassification classify(const KahlerClass& kc, const SumBundle& E) {
  if (!(E.flag() == kc.flag())) throw std::invalid_argument("bundle and Kahler class live on different flag varieties");
  InstantonClassification out;
  const auto& Ls = E.summands();
  const auto c0 = contraction(kc, Ls.front().weight());
  const auto p0 = exact_phase(kc, Ls.front());
  out.hym = true;
  out.dhym = true;
  for (std::size_t l = 1; l < Ls.size(); ++l) {
    out.hym = out.hym && contraction(kc, Ls[l].weight()) == c0;
    out.dhym = out.dhym && phases_equal_mod_2pi(exact_phase(kc, Ls[l]), p0);
  }
  out.type_label = instanton_type(out.hym, out.dhym);
  // For line bundles slope equality is contraction equality (Vol > 0).
  if (E.rank() == 1)
    out.stability = Stability::Stable;
  else
    out.stability = out.hym ? Stability::Polystable : Stability::Unstable;
  return out;
}

/// Sum over summands of (1/n!) integral (omega + i chi_l)^n.
inline GaussianRational trace_top_power(const KahlerClass& kc, const SumBundle& E) {
  GaussianRational s{0, 0};
  for (const auto& L : E.summands()) s += normalized_top_power(kc, L.weight());
  return s;
}

/// Ray of Arg integral tr(omega (x) 1 - F/2pi)^n; empty when the integral vanishes.
inline std::optional<GaussianRational> sum_phase(const KahlerClass& kc, const SumBundle& E) {
  if (!(E.flag() == kc.flag())) throw std::invalid_argument("bundle and Kahler class live on different flag varieties");
  auto s = trace_top_power(kc, E);
  if (s.is_zero()) return std::nullopt;
  return normalize_ray(s);
}

inline CentralCharge central_charge(const KahlerClass& kc, const SumBundle& E) {
  const auto n = kc.flag().dim_c();
  return {n, charge_prefactor(n) * trace_top_power(kc, E)};
}

namespace detail {

// Visits every integer vector in [-bound, bound]^dim in lexicographic order.
inline void for_each_lattice_point(std::size_t dim, std::int64_t bound,
                                   const std::function<void(const std::vector<std::int64_t>&)>& visit) {
  if (bound < 1) throw std::invalid_argument("enumeration bound must be >= 1");
  std::vector<std::int64_t> s(dim, -bound);
  while (true) {
    visit(s);
    std::size_t k = dim;
    while (k > 0 && s[k - 1] == bound) s[--k] = -bound;
    if (k == 0) return;
    ++s[k - 1];
  }
}

} // namespace detail

/// D_m: integral line bundles with |s_alpha| <= bound and contraction exactly m.
inline std::vector<LineBundle> enumerate_D_m(const KahlerClass& kc, const Rational& m, std::int64_t bound) {
  std::vector<LineBundle> out;
  const auto& fv = kc.flag();
  detail::for_each_lattice_point(fv.picard_rank(), bound, [&](const auto& s) {
    LineBundle L(fv, s);
    if (contraction(kc, L.weight()) == m) out.push_back(std::move(L));
  });
  return out;
}

/// L_target: integral line bundles whose lifted phase equals target (winding and ray).
inline std::vector<LineBundle> enumerate_L_target(const KahlerClass& kc, const ExactPhase& target, std::int64_t bound) {
  std::vector<LineBundle> out;
  const auto& fv = kc.flag();
  detail::for_each_lattice_point(fv.picard_rank(), bound, [&](const auto& s) {
    LineBundle L(fv, s);
    if (exact_phase(kc, L) == target) out.push_back(std::move(L));
  });
  return out;
}

inline bool is_dominant_integral(const Weight& lambda) {
  for (const auto& c : lambda.coords)
    if (!c.is_integer() || c.sign() < 0) return false;
  return true;
}

/// dim V(lambda) = prod_{beta in Phi+} <lambda + rho, beta^vee> / <rho, beta^vee>.
inline Integer weyl_dim(const RootSystem& rs, const Weight& lambda) {
  if (lambda.size() != rs.rank()) throw std::invalid_argument("weyl_dim: weight rank mismatch");
  if (!is_dominant_integral(lambda))
    throw std::invalid_argument("weyl_dim: highest weight must be dominant integral");
  const auto rho = rho_plus(rs);
  const auto shifted = lambda + rho;
  Rational d = 1;
  for (const auto& beta : rs.positive_roots()) d *= pairing(shifted, beta, rs) / pairing(rho, beta, rs);
  if (!d.is_integer()) throw std::logic_error("Weyl dimension is not an integer");
  return d.numerator();
}

/// h^0(L) on a full flag variety: dim V(lambda(L)) if dominant, else 0.
inline Integer h0_line(const LineBundle& L) {
  if (!L.flag().is_full_flag())
    throw std::invalid_argument("h0 via Borel-Weil is only implemented for full flag varieties (empty parabolic set)");
  if (!is_dominant_integral(L.weight())) return 0;
  return weyl_dim(L.flag().root_system(), L.weight());
}

/// h^0(End E) = sum_{i,j} h^0(L_i (x) L_j^{-1}).
inline Integer h0_end(const SumBundle& E) {
  Integer total = 0;
  for (const auto& Li : E.summands())
    for (const auto& Lj : E.summands()) total += h0_line(Li * Lj.dual());
  return total;
}

} // namespace dhymlab
