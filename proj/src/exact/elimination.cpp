// Fraction-free (Bareiss) elimination over the Gaussian integers Z[i].
// Each input row of Gaussian rationals is scaled by the lcm of its
// denominators first, so every intermediate stays in Z[i] and every division
// in the update step is exact.

#include "lietab/exact.hpp"

#include <stdexcept>
#include <utility>

namespace lietab {

namespace {

struct GaussInt {
  mpz_class re{0};
  mpz_class im{0};

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
};

GaussInt mul(const GaussInt& a, const GaussInt& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GaussInt sub(const GaussInt& a, const GaussInt& b) { return {a.re - b.re, a.im - b.im}; }

GaussInt exact_div(const GaussInt& a, const GaussInt& b) {
  mpz_class n = b.re * b.re + b.im * b.im;
  mpz_class re = a.re * b.re + a.im * b.im;
  mpz_class im = a.im * b.re - a.re * b.im;
  if (!mpz_divisible_p(re.get_mpz_t(), n.get_mpz_t()) || !mpz_divisible_p(im.get_mpz_t(), n.get_mpz_t()))
    throw std::logic_error("Bareiss step produced an inexact division");
  mpz_divexact(re.get_mpz_t(), re.get_mpz_t(), n.get_mpz_t());
  mpz_divexact(im.get_mpz_t(), im.get_mpz_t(), n.get_mpz_t());
  return {re, im};
}

using IntRow = std::vector<GaussInt>;

IntRow integral_row(std::span<const GaussianRational> row) {
  mpz_class scale = 1;
  for (const auto& e : row) {
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), e.re().get_den_mpz_t());
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), e.im().get_den_mpz_t());
  }
  IntRow out(row.size());
  for (std::size_t j = 0; j < row.size(); ++j) {
    out[j].re = row[j].re().get_num() * (scale / row[j].re().get_den());
    out[j].im = row[j].im().get_num() * (scale / row[j].im().get_den());
  }
  return out;
}

// Returns the pivot column of each independent row, in elimination order.
std::vector<std::size_t> bareiss_pivots(std::vector<IntRow> m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  GaussInt prev{1, 0};
  std::size_t k = 0;
  for (std::size_t col = 0; col < cols && k < rows; ++col) {
    std::size_t p = k;
    while (p < rows && m[p][col].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[k], m[p]);
    for (std::size_t i = k + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j)
        m[i][j] = exact_div(sub(mul(m[k][col], m[i][j]), mul(m[i][col], m[k][j])), prev);
      m[i][col] = GaussInt{};
    }
    prev = m[k][col];
    pivots.push_back(col);
    ++k;
  }
  return pivots;
}

std::vector<IntRow> flattened_rows(std::span<const ExactMatrix> matrices) {
  std::vector<IntRow> rows;
  rows.reserve(matrices.size());
  for (const auto& m : matrices) {
    if (m.dim() != matrices.front().dim()) throw DimensionMismatch("rank: matrices differ in dimension");
    rows.push_back(integral_row(m.entries()));
  }
  return rows;
}

}  // namespace

std::size_t rank(std::span<const ExactMatrix> matrices) {
  if (matrices.empty()) return 0;
  return bareiss_pivots(flattened_rows(matrices)).size();
}

BasisExpander::BasisExpander(std::vector<ExactMatrix> basis) : basis_(std::move(basis)) {
  if (basis_.empty()) throw std::invalid_argument("BasisExpander: empty basis");
  const std::size_t k = basis_.size();
  pivot_entries_ = bareiss_pivots(flattened_rows(basis_));
  if (pivot_entries_.size() != k) throw std::invalid_argument("BasisExpander: basis is linearly dependent");

  // square[r][c] = entry pivot_entries_[r] of basis c; invert by Gauss-Jordan.
  std::vector<std::vector<GaussianRational>> a(k, std::vector<GaussianRational>(2 * k));
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < k; ++c) a[r][c] = basis_[c].entries()[pivot_entries_[r]];
    a[r][k + r] = 1;
  }
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t p = c;
    while (a[p][c].is_zero()) ++p;
    std::swap(a[c], a[p]);
    GaussianRational inv = GaussianRational(1) / a[c][c];
    for (auto& e : a[c]) e *= inv;
    for (std::size_t r = 0; r < k; ++r) {
      if (r == c || a[r][c].is_zero()) continue;
      GaussianRational f = a[r][c];
      for (std::size_t j = c; j < 2 * k; ++j) a[r][j] -= f * a[c][j];
    }
  }
  inverse_.assign(k, std::vector<GaussianRational>(k));
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c) inverse_[r][c] = a[r][k + c];
}

std::optional<std::vector<GaussianRational>> BasisExpander::expand(const ExactMatrix& x) const {
  if (x.dim() != dim()) throw DimensionMismatch("expand: matrix dimension differs from basis");
  const std::size_t k = basis_.size();
  auto xe = x.entries();
  std::vector<GaussianRational> coeffs(k);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c)
      if (!inverse_[r][c].is_zero()) coeffs[r] += inverse_[r][c] * xe[pivot_entries_[c]];
  ExactMatrix rebuilt(x.dim());
  for (std::size_t c = 0; c < k; ++c)
    if (!coeffs[c].is_zero()) rebuilt += coeffs[c] * basis_[c];
  if (!(rebuilt == x)) return std::nullopt;
  return coeffs;
}

std::optional<std::vector<GaussianRational>> expand_in_basis(const ExactMatrix& x,
                                                             std::span<const ExactMatrix> basis) {
  return BasisExpander(std::vector<ExactMatrix>(basis.begin(), basis.end())).expand(x);
}

}  // namespace lietab
