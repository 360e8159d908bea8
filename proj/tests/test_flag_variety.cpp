#include "dhymlab/flag_variety.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace dhymlab;

namespace {

RootSystem a2() { return build_root_system({Family::A, 2}); }

KahlerClass omega0() { return {make_flag(a2(), {}), {2, 2}}; }

LineBundle line(const KahlerClass& kc, std::int64_t s1, std::int64_t s2) { return {kc.flag(), {s1, s2}}; }

std::vector<LieType> some_types() {
  return {{Family::A, 1}, {Family::A, 3}, {Family::B, 2}, {Family::C, 3}, {Family::D, 4}, {Family::G, 2}, {Family::F, 4}};
}

} // namespace

TEST(FlagVariety, FullFlagOfSL3) {
  auto fv = make_flag(a2(), {});
  EXPECT_EQ(fv.dim_c(), 3u);
  EXPECT_TRUE(fv.is_full_flag());
  EXPECT_EQ(fv.delta_P(), Weight({2, 2}));
  ASSERT_EQ(fv.anticanonical_coeffs().size(), 2u);
  EXPECT_EQ(fv.anticanonical_coeffs()[0], 2);
  EXPECT_EQ(fv.anticanonical_coeffs()[1], 2);
  EXPECT_EQ(fv.rho_pairings(), (std::vector<Rational>{1, 1, 2}));
}

TEST(FlagVariety, ProjectivePlane) {
  auto fv = make_flag(a2(), {1});
  EXPECT_EQ(fv.dim_c(), 2u);
  EXPECT_EQ(fv.picard_indices(), std::vector<std::size_t>{0});
  ASSERT_EQ(fv.phi_I_plus().size(), 2u);
  EXPECT_EQ(fv.phi_I_plus()[0].coeffs, (std::vector<int>{1, 0}));
  EXPECT_EQ(fv.phi_I_plus()[1].coeffs, (std::vector<int>{1, 1}));
  EXPECT_EQ(fv.anticanonical_coeffs(), std::vector<Integer>{3});
}

TEST(FlagVariety, ProjectiveLine) {
  auto fv = make_flag(build_root_system({Family::A, 1}), {});
  EXPECT_EQ(fv.dim_c(), 1u);
  EXPECT_EQ(fv.delta_P(), Weight(std::vector<Rational>{2}));
}

TEST(FlagVariety, PointVariety) {
  auto fv = make_flag(a2(), {0, 1});
  EXPECT_TRUE(fv.is_point());
  EXPECT_EQ(fv.picard_rank(), 0u);
  KahlerClass kc(fv, {});
  EXPECT_EQ(volume(kc), 1);
  EXPECT_EQ(degree(kc, LineBundle(fv, {})), 0);
}

TEST(FlagVariety, ParabolicIndexOutOfRange) { EXPECT_THROW(make_flag(a2(), {2}), std::invalid_argument); }

TEST(FlagVariety, AnticanonicalIsOrthogonalToParabolicEverywhere) {
  for (const auto& t : some_types()) {
    auto rs = build_root_system(t);
    for (std::size_t i = 0; i < rs.rank(); ++i) {
      auto fv = make_flag(rs, {i});
      EXPECT_TRUE(fv.delta_P().coords[i].is_zero()) << t.name();
      for (const auto& l : fv.anticanonical_coeffs()) EXPECT_GT(l, 0) << t.name();
    }
  }
}

TEST(KahlerClass, RejectsNonPositiveCoefficients) {
  auto fv = make_flag(a2(), {});
  EXPECT_THROW(KahlerClass(fv, {0, 1}), std::invalid_argument);
  EXPECT_THROW(KahlerClass(fv, {2, Rational(-1, 3)}), std::invalid_argument);
  EXPECT_THROW(KahlerClass(fv, {1}), std::invalid_argument);
}

TEST(Eigenvalues, OmegaZeroExamples) {
  auto kc = omega0();
  EXPECT_EQ(kc.pairings(), (std::vector<Rational>{2, 2, 4}));
  EXPECT_EQ(eigenvalues(kc, Weight({2, 6})), (std::vector<Rational>{1, 3, 2}));
  EXPECT_EQ(contraction(kc, Weight({2, 6})), 6);
  EXPECT_EQ(contraction(kc, Weight({3, 4})), Rational(21, 4));
  EXPECT_EQ(contraction(kc, Weight({2, -1})), Rational(3, 4));
  EXPECT_EQ(contraction(kc, Weight({1, -1})), 0);
}

TEST(Eigenvalues, UnsupportedWeightRejected) {
  auto fv = make_flag(a2(), {1});
  KahlerClass kc(fv, {1});
  EXPECT_THROW(eigenvalues(kc, Weight({1, 1})), std::invalid_argument);
}

TEST(Volume, Examples) {
  EXPECT_EQ(volume(omega0()), 8);
  EXPECT_EQ(volume(KahlerClass(make_flag(build_root_system({Family::A, 1}), {}), {1})), 1);
  EXPECT_EQ(volume(KahlerClass(make_flag(a2(), {1}), {1})), Rational(1, 2));
}

TEST(Degree, Examples) {
  auto kc = omega0();
  EXPECT_EQ(degree(kc, line(kc, 2, -1)), 12);
  EXPECT_EQ(degree(kc, line(kc, 1, -1)), 0);
  EXPECT_EQ(degree(kc, line(kc, 0, 0)), 0);
  EXPECT_EQ(slope(kc, line(kc, 3, -2)), 12);
  EXPECT_EQ(slope(kc, line(kc, 2, 6)), 96);
  EXPECT_EQ(slope(kc, line(kc, 3, 4)), 84);
}

TEST(Degree, HyperplaneOnProjectivePlane) {
  // O(1) on P^2 with omega = hyperplane class: deg = 1.
  auto fv = make_flag(a2(), {1});
  KahlerClass kc(fv, {1});
  EXPECT_EQ(degree(kc, LineBundle(fv, {1})), 1);
  EXPECT_EQ(degree(kc, LineBundle(fv, {-3})), -3);
}

TEST(Degree, AdditiveUnderTensorProduct) {
  auto kc = omega0();
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> d(-50, 50);
  for (int k = 0; k < 200; ++k) {
    auto L = line(kc, d(rng), d(rng));
    auto M = line(kc, d(rng), d(rng));
    EXPECT_EQ(degree(kc, L * M), degree(kc, L) + degree(kc, M));
    EXPECT_EQ(degree(kc, L.dual()), -degree(kc, L));
  }
}

TEST(Volume, HomogeneousOfDegreeN) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> num(1, 9);
  for (const auto& t : some_types()) {
    auto fv = make_flag(build_root_system(t), {});
    auto kc = KahlerClass::from_weight(fv, fv.delta_P());
    Rational s(num(rng), num(rng));
    Rational tn = 1;
    for (std::size_t k = 0; k < fv.dim_c(); ++k) tn *= s;
    EXPECT_EQ(volume(kc.scaled(s)), tn * volume(kc)) << t.name();
  }
}

TEST(Contraction, LinearInTheClass) {
  auto kc = omega0();
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> d(-20, 20);
  for (int k = 0; k < 200; ++k) {
    Weight x({d(rng), d(rng)}), y({d(rng), d(rng)});
    Rational t(d(rng), 7);
    EXPECT_EQ(contraction(kc, x + t * y), contraction(kc, x) + t * contraction(kc, y));
  }
}

TEST(Degree, AnticanonicalIsPositive) {
  for (const auto& t : some_types()) {
    auto rs = build_root_system(t);
    for (std::size_t i = 0; i < rs.rank(); ++i) {
      auto fv = make_flag(rs, {i});
      if (fv.is_point()) continue;
      auto kc = KahlerClass::from_weight(fv, fv.delta_P());
      EXPECT_GT(degree_of_weight(kc, fv.delta_P()), 0) << t.name();
    }
  }
}

TEST(LineBundle, DualAndTensor) {
  auto kc = omega0();
  auto L = line(kc, 2, -1);
  EXPECT_EQ(L * L.dual(), line(kc, 0, 0));
  EXPECT_EQ(L.dual().coeffs(), (std::vector<std::int64_t>{-2, 1}));
  EXPECT_THROW(LineBundle(kc.flag(), {1}), std::invalid_argument);
}
