#pragma once

// Reference computations that share no code path with the library routines
// they are compared against.

#include "lietab/cartan_weyl.hpp"
#include "lietab/exact.hpp"
#include "lietab/rep_labels.hpp"
#include "lietab/so_pq.hpp"

#include <doctest.h>

#include <algorithm>
#include <tuple>
#include <vector>

namespace oracle {

using lietab::ExactMatrix;
using lietab::GaussianRational;

// Row reduction over the field, no fraction-free tricks.
inline std::size_t field_rank(const std::vector<ExactMatrix>& mats) {
  if (mats.empty()) return 0;
  std::vector<std::vector<GaussianRational>> rows;
  for (const auto& m : mats) rows.emplace_back(m.entries().begin(), m.entries().end());
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (k == r || rows[k][c].is_zero()) continue;
      GaussianRational f = rows[k][c] / rows[r][c];
      for (std::size_t j = c; j < cols; ++j) rows[k][j] -= f * rows[r][j];
    }
    ++r;
  }
  return r;
}

// i (g_ad L_bc + g_bc L_ad - g_ac L_bd - g_bd L_ac), evaluated on matrices.
inline ExactMatrix master_relation(const lietab::GeneratorSet& gs, int a, int b, int c, int d) {
  const auto& g = gs.metric();
  ExactMatrix out(gs.dim());
  auto add = [&](int sign, int x, int y, int u, int v) {
    if (x != y || u == v) return;
    out += (gs(u, v) * GaussianRational(sign * g.g(x)));
  };
  add(1, a, d, b, c);
  add(1, b, c, a, d);
  add(-1, a, c, b, d);
  add(-1, b, d, a, c);
  return out * GaussianRational::imaginary_unit();
}

// Root of e under Cartan pairs using only the formal bracket algebra.
inline std::vector<lietab::Rational> symbolic_root(const lietab::GeneratorSet& gs,
                                                   const std::vector<lietab::IndexPair>& cartan,
                                                   const ExactMatrix& e) {
  auto coeffs = gs.expander().expand(e);
  REQUIRE(coeffs.has_value());
  std::vector<lietab::Rational> root;
  for (auto h : cartan) {
    std::vector<GaussianRational> bracket(gs.size(), GaussianRational(0));
    for (std::size_t k = 0; k < gs.size(); ++k) {
      if ((*coeffs)[k].is_zero()) continue;
      for (const auto& term : lietab::expected_bracket(gs.metric(), h, gs.generators()[k].pair))
        bracket[gs.position(term.pair)] += (*coeffs)[k] * term.coefficient;
    }
    std::optional<GaussianRational> ratio;
    for (std::size_t k = 0; k < gs.size(); ++k) {
      if ((*coeffs)[k].is_zero()) {
        REQUIRE(bracket[k].is_zero());
        continue;
      }
      GaussianRational q = bracket[k] / (*coeffs)[k];
      if (ratio) REQUIRE(*ratio == q);
      ratio = q;
    }
    REQUIRE(ratio.has_value());
    REQUIRE(ratio->is_real());
    root.push_back(ratio->re());
  }
  return root;
}

// 1/2 L_ab L^ab summed over all ordered pairs a != b.
inline ExactMatrix tensor_quadratic_casimir(const lietab::GeneratorSet& gs) {
  const auto& g = gs.metric();
  const int n = g.size();
  ExactMatrix out(gs.dim());
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) {
      if (a == b) continue;
      ExactMatrix lab = gs(a, b);
      out += lab * lab * GaussianRational(g.g(a) * g.g(b));
    }
  return out * GaussianRational(lietab::make_rational(1, 2));
}

// Every (n, l, m, s) with n <= max_n, sorted by the stated key.
inline std::vector<lietab::MadelungKet> brute_madelung(int max_n) {
  std::vector<lietab::MadelungKet> all;
  for (int n = 1; n <= max_n; ++n)
    for (int l = 0; l < n; ++l)
      for (int m = -l; m <= l; ++m)
        for (auto s : {lietab::Spin::minus_half, lietab::Spin::plus_half}) all.push_back({n, l, m, s});
  std::stable_sort(all.begin(), all.end(), [](const auto& x, const auto& y) {
    auto key = [](const lietab::MadelungKet& k) { return std::make_tuple(k.n + k.l, k.n, k.l, k.s, k.m); };
    return key(x) < key(y);
  });
  return all;
}

}  // namespace oracle
