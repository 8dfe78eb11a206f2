#include "lietab/exact.hpp"

#include <algorithm>

namespace lietab {

namespace {

void require_same_dim(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.dim() != b.dim())
    throw DimensionMismatch("matrix dimensions differ: " + std::to_string(a.dim()) + " vs " +
                            std::to_string(b.dim()));
}

}  // namespace

ExactMatrix::ExactMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {
  if (dim == 0) throw std::invalid_argument("matrix dimension must be positive");
}

ExactMatrix ExactMatrix::identity(std::size_t dim) {
  ExactMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
  return m;
}

bool ExactMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const auto& e) { return e.is_zero(); });
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& o) {
  require_same_dim(*this, o);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& o) {
  require_same_dim(*this, o);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
  return *this;
}

ExactMatrix& ExactMatrix::operator*=(const GaussianRational& s) {
  for (auto& e : entries_) e *= s;
  return *this;
}

ExactMatrix ExactMatrix::operator-() const {
  ExactMatrix out(*this);
  for (auto& e : out.entries_) e = -e;
  return out;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  require_same_dim(a, b);
  const std::size_t n = a.dim();
  ExactMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const auto& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
    }
  return out;
}

ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b) {
  require_same_dim(a, b);
  return a * b - b * a;
}

std::optional<GaussianRational> scalar_multiple_of(const ExactMatrix& a, const ExactMatrix& b) {
  require_same_dim(a, b);
  auto eb = b.entries();
  auto pivot = std::find_if(eb.begin(), eb.end(), [](const auto& e) { return !e.is_zero(); });
  if (pivot == eb.end()) throw std::invalid_argument("scalar_multiple_of: reference matrix is zero");
  auto ea = a.entries();
  GaussianRational lambda = ea[pivot - eb.begin()] / *pivot;
  for (std::size_t i = 0; i < ea.size(); ++i)
    if (!(ea[i] == lambda * eb[i])) return std::nullopt;
  return lambda;
}

}  // namespace lietab
