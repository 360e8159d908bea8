#pragma once

// End-to-end reproduction of the SL3/B instanton constructions:
// the Type I/II/III bundles, the unstable dHYM family of every rank r,
// and the supporting invariants (volume, anticanonical data, level sets,
// charge/phase equivalence, big-cell eigenvalues, Weyl dimensions).

#include "dhymlab/bigcell.hpp"
#include "dhymlab/bundle_lab.hpp"

#include <cmath>
#include <cstdint>
#include <map>
#include <numbers>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace dhymlab {

using Coeffs = std::vector<std::int64_t>;

/// The Wallach threefold SL3/B with omega_0 = c1 (weight 2 varpi_1 + 2 varpi_2).
struct WallachSetup {
  RootSystem rs = build_root_system({Family::A, 2});
  FlagVariety fv = make_flag(rs, {});
  KahlerClass omega0{fv, {2, 2}};

  LineBundle line(std::int64_t s1, std::int64_t s2) const { return {fv, {s1, s2}}; }
  SumBundle sum(const std::vector<Coeffs>& parts) const {
    std::vector<LineBundle> ls;
    for (const auto& c : parts) ls.emplace_back(fv, c);
    return SumBundle(std::move(ls));
  }
};

struct BundleSummary {
  std::string name;
  std::vector<Coeffs> summands;
  InstantonClassification classification;
  std::vector<Rational> contractions;
  Rational slope;
  std::optional<GaussianRational> theta_hat_ray;
  Integer h0_end;
  GaussianRational charge;
};

struct Claim {
  std::string id;
  std::string statement;
  bool passed{false};
  std::string detail;
};

struct PaperReport {
  Rational volume;
  Weight delta_B;
  std::vector<Rational> delta_pairings;  // <delta_B, beta^vee> over Phi+
  std::vector<BundleSummary> bundles;
  std::vector<Coeffs> l_pi;
  std::vector<Claim> claims;

  bool all_passed() const {
    for (const auto& c : claims)
      if (!c.passed) return false;
    return true;
  }
};

inline BundleSummary summarize(const KahlerClass& kc, const std::string& name, const SumBundle& E) {
  BundleSummary s;
  s.name = name;
  for (const auto& L : E.summands()) {
    s.summands.push_back(L.coeffs());
    s.contractions.push_back(contraction(kc, L.weight()));
  }
  s.classification = classify(kc, E);
  s.slope = slope(kc, E);
  s.theta_hat_ray = sum_phase(kc, E);
  s.h0_end = E.flag().is_full_flag() ? h0_end(E) : Integer(0);
  s.charge = central_charge(kc, E).value;
  return s;
}

namespace detail {

inline std::string coeffs_str(const Coeffs& c) {
  std::string s = "(";
  for (std::size_t k = 0; k < c.size(); ++k) s += (k ? "," : "") + std::to_string(c[k]);
  return s + ")";
}

inline std::set<Coeffs> coeff_set(const std::vector<LineBundle>& ls) {
  std::set<Coeffs> out;
  for (const auto& L : ls) out.insert(L.coeffs());
  return out;
}

inline Claim make_claim(std::string id, std::string statement, bool ok, std::string detail) {
  return {std::move(id), std::move(statement), ok, std::move(detail)};
}

} // namespace detail

/// Runs every check; each claim records pass/fail and a short detail string.
inline PaperReport reproduce_paper(std::uint64_t seed = 20240611) {
  const WallachSetup w;
  const auto& kc = w.omega0;
  std::mt19937_64 rng(seed);
  PaperReport rep;

  // 1. Volume.
  rep.volume = volume(kc);
  rep.claims.push_back(detail::make_claim("1", "Vol(P(T_P2), omega_0) = 8", rep.volume == Rational(8),
                                          "Vol = " + rep.volume.str()));

  // 2. Anticanonical data.
  rep.delta_B = w.fv.delta_P();
  for (const auto& beta : w.rs.positive_roots()) rep.delta_pairings.push_back(pairing(rep.delta_B, beta, w.rs));
  {
    bool ok = rep.delta_B == Weight({2, 2}) &&
              rep.delta_pairings == std::vector<Rational>{2, 2, 4};
    rep.claims.push_back(detail::make_claim("2", "delta_B = 2 varpi_1 + 2 varpi_2 with coroot pairings (2, 2, 4)", ok,
                                            "pairings (" + rep.delta_pairings[0].str() + ", " +
                                                rep.delta_pairings[1].str() + ", " + rep.delta_pairings[2].str() + ")"));
  }

  // 3. Contraction law.
  {
    bool ok = true;
    std::uniform_int_distribution<std::int64_t> dist(-1000, 1000);
    for (int k = 0; k < 100; ++k) {
      auto s1 = dist(rng), s2 = dist(rng);
      ok = ok && contraction(kc, w.line(s1, s2).weight()) == Rational(3, 4) * Rational(s1 + s2);
    }
    ok = ok && contraction(kc, w.line(2, 6).weight()) == Rational(6) &&
         contraction(kc, w.line(3, 4).weight()) == Rational(21, 4) &&
         contraction(kc, w.line(2, -1).weight()) == Rational(3, 4);
    rep.claims.push_back(detail::make_claim("3", "Lambda(chi_L) = (3/4)(s1+s2); 6, 21/4, 3/4 at (2,6), (3,4), (2,-1)", ok,
                                            "100 random pairs + 3 fixed values"));
  }

  // 4. Slopes.
  {
    auto mf = slope(kc, w.line(2, -1)), mg = slope(kc, w.line(3, -2)), me = slope(kc, w.sum({{2, -1}, {3, -2}}));
    bool ok = mf == Rational(12) && mg == Rational(12) && me == Rational(12);
    rep.claims.push_back(detail::make_claim("4", "mu(F) = mu(G) = mu(F + G) = 12", ok,
                                            "mu = " + mf.str() + ", " + mg.str() + ", " + me.str()));
  }

  // 5. Phase-pi level set.
  {
    auto found = enumerate_L_target(kc, ExactPhase::pi(), 100);
    for (const auto& L : found) rep.l_pi.push_back(L.coeffs());
    std::set<Coeffs> expected{{1, 12}, {2, 6}, {3, 4}, {4, 3}, {6, 2}, {12, 1}};
    bool ok = detail::coeff_set(found) == expected && found.size() == expected.size();
    std::string d;
    for (const auto& c : rep.l_pi) d += detail::coeffs_str(c) + " ";
    rep.claims.push_back(detail::make_claim("5", "L_pi within |s| <= 100 is {s1 s2 = 12, s1 > 0}", ok, d));
  }

  // 6. D_0 = L_0 = Pic^0.
  {
    bool ok = true;
    for (std::int64_t b = 1; b <= 20 && ok; ++b) {
      std::set<Coeffs> pic0;
      for (std::int64_t s = -b; s <= b; ++s) pic0.insert({s, -s});
      ok = detail::coeff_set(enumerate_D_m(kc, 0, b)) == pic0 &&
           detail::coeff_set(enumerate_L_target(kc, ExactPhase::zero(), b)) == pic0;
    }
    rep.claims.push_back(detail::make_claim("6", "D_0 = L_0 = {(s,-s)} for every bound 1..20", ok, ""));
  }

  // 7. The three instanton types.
  const auto e1 = summarize(kc, "E1", w.sum({{1, -1}, {2, -2}}));
  const auto e2 = summarize(kc, "E2", w.sum({{2, -1}, {3, -2}}));
  const auto e3 = summarize(kc, "E3", w.sum({{2, 6}, {3, 4}}));
  rep.bundles = {e1, e2, e3};
  {
    auto is = [](const BundleSummary& b, InstantonType t, Stability s) {
      return b.classification.type_label == t && b.classification.stability == s;
    };
    const GaussianRational plus{1, 0}, minus{-1, 0};
    bool ok = is(e1, InstantonType::TypeI, Stability::Polystable) &&
              is(e2, InstantonType::TypeII, Stability::Polystable) &&
              is(e3, InstantonType::TypeIII, Stability::Unstable) && e3.theta_hat_ray == minus &&
              e1.theta_hat_ray == plus && e1.slope == Rational(0) && e2.slope == Rational(12) &&
              e2.contractions == std::vector<Rational>{Rational(3, 4), Rational(3, 4)} &&
              Rational(2) * e2.contractions[0] == e2.slope / Rational(8) &&
              e3.contractions == std::vector<Rational>{Rational(6), Rational(21, 4)};
    rep.claims.push_back(detail::make_claim(
        "7", "E1 TypeI/Polystable, E2 TypeII/Polystable, E3 TypeIII/Unstable; Theta_hat(E3) = pi, Theta_hat(E1) = 0",
        ok,
        std::string("E1 ") + to_string(e1.classification.type_label) + ", E2 " +
            to_string(e2.classification.type_label) + ", E3 " + to_string(e3.classification.type_label)));
  }

  // 8. Charge ratio vs phase equality, |s| <= 6, as a biconditional.
  {
    std::vector<LineBundle> ls;
    std::vector<GaussianRational> z;
    std::vector<ExactPhase> th;
    detail::for_each_lattice_point(2, 6, [&](const Coeffs& c) {
      ls.emplace_back(w.fv, c);
      z.push_back(central_charge(kc, ls.back()).value);
      th.push_back(exact_phase(kc, ls.back()));
    });
    std::size_t literal_bad = 0, positive_bad = 0, mod_pi_bad = 0, pairs = 0;
    std::string first_bad;
    for (std::size_t i = 0; i < ls.size(); ++i) {
      for (std::size_t j = 0; j < ls.size(); ++j) {
        ++pairs;
        auto p = z[i] * z[j].conj();
        const bool im_zero = p.im.is_zero();
        const bool eq2pi = phases_equal_mod_2pi(th[i], th[j]);
        auto q = th[i].ray() * th[j].ray().conj();
        const bool parallel = q.im.is_zero();
        if (im_zero != eq2pi) {
          if (literal_bad++ == 0)
            first_bad = detail::coeffs_str(ls[i].coeffs()) + " vs " + detail::coeffs_str(ls[j].coeffs());
        }
        if ((im_zero && p.re.sign() > 0) != eq2pi) ++positive_bad;
        if (im_zero != parallel) ++mod_pi_bad;
      }
    }
    rep.claims.push_back(detail::make_claim(
        "8", "Im(Z_E conj Z_F) = 0 <=> phases equal mod 2pi, all pairs |s| <= 6", literal_bad == 0,
        std::to_string(pairs) + " pairs, " + std::to_string(literal_bad) + " counterexamples" +
            (literal_bad ? " (first: " + first_bad + ", charges antiparallel: phases differ by pi)" : "")));
    rep.claims.push_back(detail::make_claim(
        "8a", "Z_E conj Z_F real and positive <=> phases equal mod 2pi, all pairs |s| <= 6", positive_bad == 0,
        std::to_string(positive_bad) + " mismatches"));
    rep.claims.push_back(detail::make_claim("8b", "Im(Z_E conj Z_F) = 0 <=> phases equal mod pi, all pairs |s| <= 6",
                                            mod_pi_bad == 0, std::to_string(mod_pi_bad) + " mismatches"));
  }

  // 9. Unstable dHYM family of rank r.
  {
    bool ok = true;
    std::string d;
    for (std::size_t r = 2; r <= 4; ++r) {
      std::vector<Coeffs> parts{{2, 6}};
      for (std::size_t k = 1; k < r; ++k) parts.push_back({3, 4});
      auto E = w.sum(parts);
      auto s = summarize(kc, "C_r" + std::to_string(r), E);
      const Integer expected_h0 = Integer(1 + static_cast<long>((r - 1) * (r - 1)));
      bool all_pi = true;
      for (const auto& L : E.summands()) all_pi = all_pi && exact_phase(kc, L) == ExactPhase::pi();
      // Arg Z = Theta_hat + 3pi/2: the ray of Z is the Theta_hat ray times -i.
      bool charge_ray = s.theta_hat_ray && same_ray(s.charge, GaussianRational{0, -1} * *s.theta_hat_ray);
      bool this_ok = s.classification.stability == Stability::Unstable && s.classification.dhym && all_pi &&
                     s.h0_end == expected_h0 && s.h0_end > 1 && charge_ray;
      ok = ok && this_ok;
      d += "r=" + std::to_string(r) + ": h0(End)=" + s.h0_end.get_str() + (this_ok ? " ok; " : " FAIL; ");
      rep.bundles.push_back(std::move(s));
    }
    rep.claims.push_back(detail::make_claim(
        "9", "(2,6)+(3,4)^(r-1), r=2..4: Unstable, dHYM at pi, h0(End) = 1+(r-1)^2 > 1, Arg Z = Theta_hat + 3pi/2", ok,
        d));
  }

  // 10. Big-cell eigenvalues.
  {
    auto base = bigcell::eigen_ratio_check(2, 6);
    bool ok = base.passed && std::abs(base.numeric[0] - 1) < 1e-4 && std::abs(base.numeric[1] - 2) < 1e-4 &&
              std::abs(base.numeric[2] - 3) < 1e-4;
    double worst = base.max_error;
    std::uniform_int_distribution<long> dist(-10, 10);
    for (int k = 0; k < 50; ++k) {
      auto r = bigcell::eigen_ratio_check(dist(rng), dist(rng));
      ok = ok && r.passed;
      worst = std::max(worst, r.max_error);
    }
    std::ostringstream d;
    d << "(2,6) -> {" << base.numeric[0] << ", " << base.numeric[1] << ", " << base.numeric[2]
      << "}; worst error over 51 checks " << worst;
    rep.claims.push_back(detail::make_claim("10", "finite-difference spectrum at the origin matches {s1/2, s2/2, (s1+s2)/4} within 1e-4", ok,
                                            d.str()));
  }

  // 11. Float/exact phase consistency.
  {
    std::uniform_int_distribution<long> den(1, 12), num(-100, 100), pos(1, 100);
    double worst = 0;
    for (int k = 0; k < 10000; ++k) {
      const long d1 = den(rng), d2 = den(rng);
      KahlerClass om(w.fv, {Rational(pos(rng), den(rng)), Rational(pos(rng), den(rng))});
      Weight xi({Rational(num(rng) * d1 + num(rng) % d1, d1), Rational(num(rng) * d2 + num(rng) % d2, d2)});
      double oracle = 0;
      for (const auto& q : eigenvalues(om, xi)) oracle += std::atan(q.to_double());
      worst = std::max(worst, std::abs(phase_to_float(exact_phase(om, xi)) - oracle));
    }
    std::ostringstream d;
    d << "max |exact - sum atan| = " << worst;
    rep.claims.push_back(detail::make_claim("11", "10^4 random classes: |exact phase - sum atan| < 1e-9", worst < 1e-9, d.str()));
  }

  // 12. Weyl dimensions.
  {
    auto d1 = weyl_dim(w.rs, Weight({1, 0})), d2 = weyl_dim(w.rs, Weight({0, 1})), d3 = weyl_dim(w.rs, Weight({1, 1}));
    rep.claims.push_back(detail::make_claim("12", "dim V(varpi_1) = dim V(varpi_2) = 3, dim V(varpi_1 + varpi_2) = 8",
                                            d1 == 3 && d2 == 3 && d3 == 8,
                                            d1.get_str() + ", " + d2.get_str() + ", " + d3.get_str()));
  }
  return rep;
}

} // namespace dhymlab
