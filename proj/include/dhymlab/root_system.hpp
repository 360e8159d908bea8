#pragma once

// Root systems of simple Lie algebras built from Cartan matrices.
//
// Conventions (Bourbaki numbering, simple roots indexed 0..rank-1 internally,
// 1..rank at every user-facing boundary):
//   cartan[i][j] = <alpha_j, alpha_i^vee> = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i)
//   (alpha_i, alpha_j) = d_i * cartan[i][j], min d_i = 1
// so simple root alpha_j has fundamental-weight coordinates given by column j.

#include "dhymlab/rational.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace dhymlab {

enum class Family { A, B, C, D, E, F, G };

inline char family_letter(Family f) { return "ABCDEFG"[static_cast<int>(f)]; }

inline Family parse_family(const std::string& s) {
  if (s.size() == 1) {
    char c = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    if (c >= 'A' && c <= 'G') return static_cast<Family>(c - 'A');
  }
  throw std::invalid_argument("unknown Lie family '" + s + "' (expected one of A..G)");
}

struct LieType {
  Family family{Family::A};
  int rank{1};

  /// Throws std::invalid_argument naming the violated constraint.
  void validate() const {
    auto fail = [&](const std::string& rule) {
      throw std::invalid_argument(std::string("inadmissible Lie type ") + family_letter(family) +
                                  std::to_string(rank) + ": " + rule);
    };
    switch (family) {
      case Family::A: if (rank < 1) fail("A_n requires n >= 1"); break;
      case Family::B: if (rank < 2) fail("B_n requires n >= 2"); break;
      case Family::C: if (rank < 3) fail("C_n requires n >= 3"); break;
      case Family::D: if (rank < 4) fail("D_n requires n >= 4"); break;
      case Family::E: if (rank < 6 || rank > 8) fail("E_n requires n in {6,7,8}"); break;
      case Family::F: if (rank != 4) fail("F_n requires n = 4"); break;
      case Family::G: if (rank != 2) fail("G_n requires n = 2"); break;
    }
  }

  std::string name() const { return std::string(1, family_letter(family)) + std::to_string(rank); }
  friend bool operator==(const LieType&, const LieType&) = default;
};

/// Positive root sum_i m_i alpha_i.
struct Root {
  std::vector<int> coeffs;

  int height() const { return std::accumulate(coeffs.begin(), coeffs.end(), 0); }
  bool is_simple() const { return height() == 1; }
  friend bool operator==(const Root&, const Root&) = default;
  friend auto operator<=>(const Root&, const Root&) = default;
};

/// Weight in fundamental-weight coordinates.
struct Weight {
  std::vector<Rational> coords;

  Weight() = default;
  explicit Weight(std::size_t rank) : coords(rank) {}
  explicit Weight(std::vector<Rational> c) : coords(std::move(c)) {}

  static Weight fundamental(std::size_t rank, std::size_t i) {
    Weight w(rank);
    w.coords.at(i) = 1;
    return w;
  }

  std::size_t size() const { return coords.size(); }
  bool is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](const Rational& r) { return r.is_zero(); });
  }

  Weight& operator+=(const Weight& o) {
    check_same(o);
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
    return *this;
  }
  Weight& operator-=(const Weight& o) {
    check_same(o);
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= o.coords[i];
    return *this;
  }
  Weight operator-() const {
    Weight w = *this;
    for (auto& c : w.coords) c = -c;
    return w;
  }
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(const Rational& t, Weight w) {
    for (auto& c : w.coords) c *= t;
    return w;
  }
  friend bool operator==(const Weight&, const Weight&) = default;

private:
  void check_same(const Weight& o) const {
    if (o.size() != size()) throw std::invalid_argument("weight rank mismatch");
  }
};

using CartanMatrix = std::vector<std::vector<int>>;

namespace detail {

struct RootSystemData {
  LieType type;
  CartanMatrix cartan;
  std::vector<Rational> symmetrizer;
  std::vector<Root> positive_roots;
};

// Gram matrix of the simple roots (up to a global positive scale), Bourbaki numbering.
inline std::vector<std::vector<int>> simple_root_gram(const LieType& t) {
  const int n = t.rank;
  std::vector<std::vector<int>> g(n, std::vector<int>(n, 0));
  auto chain = [&](int len2, int off) {
    for (int i = 0; i < n; ++i) g[i][i] = len2;
    for (int i = 0; i + 1 < n; ++i) g[i][i + 1] = g[i + 1][i] = off;
  };
  switch (t.family) {
    case Family::A:
      chain(2, -1);
      break;
    case Family::B:  // alpha_n short
      chain(4, -2);
      g[n - 1][n - 1] = 2;
      break;
    case Family::C:  // alpha_n long
      chain(2, -1);
      g[n - 1][n - 1] = 4;
      g[n - 2][n - 1] = g[n - 1][n - 2] = -2;
      break;
    case Family::D:
      chain(2, -1);
      g[n - 2][n - 1] = g[n - 1][n - 2] = 0;
      g[n - 3][n - 1] = g[n - 1][n - 3] = -1;
      break;
    case Family::E: {
      for (int i = 0; i < n; ++i) g[i][i] = 2;
      // 1-3-4-5-6(-7-8), with 2 attached to 4 (0-based: 0-2-3-4-5..., 1 on 3)
      auto link = [&](int a, int b) { g[a][b] = g[b][a] = -1; };
      link(0, 2);
      link(1, 3);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
      break;
    }
    case Family::F:  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
      g = {{4, -2, 0, 0}, {-2, 4, -2, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}};
      break;
    case Family::G:  // alpha_1 short
      g = {{2, -3}, {-3, 6}};
      break;
  }
  return g;
}

// <beta, alpha_i^vee> for beta = sum_j m_j alpha_j.
inline int simple_coroot_pairing(const CartanMatrix& c, const std::vector<int>& m, std::size_t i) {
  int s = 0;
  for (std::size_t j = 0; j < m.size(); ++j) s += m[j] * c[i][j];
  return s;
}

// Ordering of positive roots: by height, then lexicographically descending
// coefficients (alpha_1 before alpha_2).
inline bool root_order(const Root& a, const Root& b) {
  int ha = a.height(), hb = b.height();
  if (ha != hb) return ha < hb;
  return a.coeffs > b.coeffs;
}

// Root-string closure. For each root beta and simple alpha_i let p be the
// largest k with beta - k alpha_i a root; beta + alpha_i is a root iff
// p - <beta, alpha_i^vee> > 0.
inline std::vector<Root> close_positive_roots(const CartanMatrix& c) {
  const std::size_t n = c.size();
  std::set<std::vector<int>> known;
  std::vector<std::vector<int>> layer;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<int> m(n, 0);
    m[i] = 1;
    known.insert(m);
    layer.push_back(m);
  }
  while (!layer.empty()) {
    std::set<std::vector<int>> next;
    for (const auto& beta : layer) {
      for (std::size_t i = 0; i < n; ++i) {
        int p = 0;
        auto down = beta;
        while (down[i] > 0) {
          --down[i];
          if (!known.count(down)) break;
          ++p;
        }
        if (p - simple_coroot_pairing(c, beta, i) > 0) {
          auto up = beta;
          ++up[i];
          if (!known.count(up)) next.insert(up);
        }
      }
    }
    layer.assign(next.begin(), next.end());
    known.insert(next.begin(), next.end());
  }
  std::vector<Root> roots;
  roots.reserve(known.size());
  for (const auto& m : known) roots.push_back(Root{m});
  std::sort(roots.begin(), roots.end(), root_order);
  return roots;
}

} // namespace detail

/// Immutable root-system handle; copies share the same data.
class RootSystem {
public:
  const LieType& lie_type() const { return d_->type; }
  std::size_t rank() const { return d_->cartan.size(); }
  const CartanMatrix& cartan() const { return d_->cartan; }
  const std::vector<Rational>& symmetrizer() const { return d_->symmetrizer; }
  const std::vector<Root>& positive_roots() const { return d_->positive_roots; }

  /// (beta, beta)/2 in the symmetrizer normalization.
  Rational half_norm(const Root& beta) const {
    Rational s = 0;
    const auto& c = d_->cartan;
    for (std::size_t i = 0; i < rank(); ++i) {
      if (beta.coeffs[i] == 0) continue;
      for (std::size_t j = 0; j < rank(); ++j)
        s += Rational(beta.coeffs[i] * beta.coeffs[j] * c[i][j]) * d_->symmetrizer[i];
    }
    return s / Rational(2);
  }

  Root simple_root(std::size_t i) const {
    Root r{std::vector<int>(rank(), 0)};
    r.coeffs.at(i) = 1;
    return r;
  }

  Root highest_root() const { return d_->positive_roots.back(); }

  friend bool operator==(const RootSystem& a, const RootSystem& b) {
    return a.d_ == b.d_ || a.d_->type == b.d_->type;
  }

private:
  friend RootSystem build_root_system(const LieType&);
  explicit RootSystem(std::shared_ptr<const detail::RootSystemData> d) : d_(std::move(d)) {}
  std::shared_ptr<const detail::RootSystemData> d_;
};

inline RootSystem build_root_system(const LieType& type) {
  type.validate();
  auto gram = detail::simple_root_gram(type);
  const std::size_t n = gram.size();
  auto data = std::make_shared<detail::RootSystemData>();
  data->type = type;
  data->cartan.assign(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) data->cartan[i][j] = 2 * gram[i][j] / gram[i][i];
  int min_len = gram[0][0];
  for (std::size_t i = 0; i < n; ++i) min_len = std::min(min_len, gram[i][i]);
  for (std::size_t i = 0; i < n; ++i) data->symmetrizer.emplace_back(gram[i][i], min_len);
  data->positive_roots = detail::close_positive_roots(data->cartan);
  return RootSystem(std::move(data));
}

/// <lambda, beta^vee> = sum_i k_i m_i d_i / d_beta.
inline Rational pairing(const Weight& lambda, const Root& beta, const RootSystem& rs) {
  if (lambda.size() != rs.rank() || beta.coeffs.size() != rs.rank())
    throw std::invalid_argument("pairing: dimension mismatch with root system rank");
  Rational s = 0;
  for (std::size_t i = 0; i < rs.rank(); ++i)
    if (beta.coeffs[i] != 0) s += lambda.coords[i] * Rational(beta.coeffs[i]) * rs.symmetrizer()[i];
  return s / rs.half_norm(beta);
}

/// Half-sum of positive roots; every fundamental coordinate is 1.
inline Weight rho_plus(const RootSystem& rs) {
  return Weight(std::vector<Rational>(rs.rank(), Rational(1)));
}

inline Weight root_to_weight(const Root& beta, const RootSystem& rs) {
  Weight w(rs.rank());
  for (std::size_t i = 0; i < rs.rank(); ++i)
    w.coords[i] = detail::simple_coroot_pairing(rs.cartan(), beta.coeffs, i);
  return w;
}

} // namespace dhymlab
