#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lietab {

using Rational = mpq_class;

/// Builds a canonical rational num/den; throws on a zero denominator.
Rational make_rational(long num, long den = 1);

/// Parses "p", "-p", "+p" or "p/q".
Rational parse_rational(std::string_view text);

/// "p/q", or "n" when q = 1.
std::string rational_to_string(const Rational& value);

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// re + i*im with both parts exact rationals.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long re) : re_(re) {}  // NOLINT: integers embed naturally
  GaussianRational(Rational re, Rational im = 0);

  static GaussianRational imaginary_unit() { return {0, 1}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  Rational norm() const { return re_ * re_ + im_ * im_; }

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  /// Throws std::domain_error on division by zero.
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// "0", "3/2", "-i", "1/2+3i", "-2/3i".
  std::string to_string() const;

 private:
  Rational re_{0};
  Rational im_{0};
};

/// Dense square matrix of Gaussian rationals.
class ExactMatrix {
 public:
  explicit ExactMatrix(std::size_t dim);

  static ExactMatrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  const GaussianRational& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }
  GaussianRational& operator()(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }
  std::span<const GaussianRational> entries() const { return entries_; }

  bool is_zero() const;

  ExactMatrix& operator+=(const ExactMatrix& o);
  ExactMatrix& operator-=(const ExactMatrix& o);
  ExactMatrix& operator*=(const GaussianRational& s);

  friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
  friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
  friend ExactMatrix operator*(ExactMatrix a, const GaussianRational& s) { return a *= s; }
  friend ExactMatrix operator*(const GaussianRational& s, ExactMatrix a) { return a *= s; }
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  ExactMatrix operator-() const;
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) = default;

 private:
  std::size_t dim_;
  std::vector<GaussianRational> entries_;
};

ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b);

/// Dimension of the span of the flattened matrices. Empty input gives 0.
std::size_t rank(std::span<const ExactMatrix> matrices);

/// lambda with a = lambda * b, if any. Throws std::invalid_argument when b is zero.
std::optional<GaussianRational> scalar_multiple_of(const ExactMatrix& a, const ExactMatrix& b);

/// Solves x = sum c_k basis_k for a fixed independent basis. The pivot
/// selection and inverse are computed once, so repeated expansion is cheap.
class BasisExpander {
 public:
  /// Throws std::invalid_argument if the basis is empty or dependent.
  explicit BasisExpander(std::vector<ExactMatrix> basis);

  std::size_t size() const { return basis_.size(); }
  std::size_t dim() const { return basis_.front().dim(); }
  const std::vector<ExactMatrix>& basis() const { return basis_; }

  std::optional<std::vector<GaussianRational>> expand(const ExactMatrix& x) const;

 private:
  std::vector<ExactMatrix> basis_;
  std::vector<std::size_t> pivot_entries_;
  std::vector<std::vector<GaussianRational>> inverse_;
};

std::optional<std::vector<GaussianRational>> expand_in_basis(const ExactMatrix& x,
                                                             std::span<const ExactMatrix> basis);

/// "i L13 - 1/2 L24"; "0" when empty. Zero coefficients are skipped.
std::string format_combination(std::span<const std::pair<GaussianRational, std::string>> terms);

}  // namespace lietab
