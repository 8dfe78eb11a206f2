#include "lietab/cartan_weyl.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace lietab {

namespace {

ExactMatrix quadratic(const GeneratorSet& gs) {
  ExactMatrix c(gs.dim());
  auto add_square = [&](const char* name, int sign) {
    ExactMatrix m = alias_matrix(gs, name);
    c += GaussianRational(sign) * (m * m);
  };
  for (const char* n : {"L1", "L2", "L3", "A1", "A2", "A3"}) add_square(n, +1);
  for (const char* n : {"B1", "B2", "B3", "Γ1", "Γ2", "Γ3"}) add_square(n, -1);
  add_square("Δ3", +1);
  add_square("Δ1", -1);
  add_square("Δ2", -1);
  return c;
}

// L^{ab} = g^{aa} g^{bb} L_ab for a diagonal metric; zero when a == b.
ExactMatrix raised(const GeneratorSet& gs, int a, int b) {
  if (a == b) return ExactMatrix(gs.dim());
  const auto& g = gs.metric();
  return GaussianRational(g.g(a) * g.g(b)) * gs(a, b);
}

ExactMatrix lowered(const GeneratorSet& gs, int a, int b) {
  if (a == b) return ExactMatrix(gs.dim());
  return gs(a, b);
}

int permutation_sign(const std::array<int, 6>& perm) {
  int sign = 1;
  for (std::size_t x = 0; x < perm.size(); ++x)
    for (std::size_t y = x + 1; y < perm.size(); ++y)
      if (perm[x] > perm[y]) sign = -sign;
  return sign;
}

// (1/48) eps_{abcdef} L^{ab} L^{cd} L^{ef} with eps_{123456} = +1.
ExactMatrix cubic(const GeneratorSet& gs) {
  const int n = gs.metric().size();
  std::vector<std::vector<ExactMatrix>> up;
  for (int a = 1; a <= n; ++a) {
    up.emplace_back();
    for (int b = 1; b <= n; ++b) up.back().push_back(raised(gs, a, b));
  }
  std::array<int, 6> perm{1, 2, 3, 4, 5, 6};
  ExactMatrix sum(gs.dim());
  do {
    const auto& x = up[perm[0] - 1][perm[1] - 1];
    const auto& y = up[perm[2] - 1][perm[3] - 1];
    const auto& z = up[perm[4] - 1][perm[5] - 1];
    sum += GaussianRational(permutation_sign(perm)) * (x * y * z);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return GaussianRational(make_rational(1, 48)) * sum;
}

// L_ab L^bc L_cd L^da = M_ac M_ca with M_ac = sum_b L_ab L^bc.
ExactMatrix quartic(const GeneratorSet& gs) {
  const int n = gs.metric().size();
  std::vector<std::vector<ExactMatrix>> m(n, std::vector<ExactMatrix>(n, ExactMatrix(gs.dim())));
  for (int a = 1; a <= n; ++a)
    for (int c = 1; c <= n; ++c)
      for (int b = 1; b <= n; ++b)
        if (b != a && b != c) m[a - 1][c - 1] += lowered(gs, a, b) * raised(gs, b, c);
  ExactMatrix sum(gs.dim());
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c) sum += m[a][c] * m[c][a];
  return sum;
}

}  // namespace

ExactMatrix casimir(const GeneratorSet& gs, int degree) {
  if (!(gs.metric() == Metric(4, 2))) throw WrongSignature("casimir needs signature 4,2");
  switch (degree) {
    case 2: return quadratic(gs);
    case 3: return cubic(gs);
    case 4: return quartic(gs);
    default: throw std::invalid_argument("unsupported Casimir degree " + std::to_string(degree));
  }
}

}  // namespace lietab
