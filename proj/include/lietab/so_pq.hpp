#pragma once

#include "lietab/exact.hpp"

#include <compare>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lietab {

/// 1-based index pair (a, b) labelling L_ab.
struct IndexPair {
  int first = 0;
  int second = 0;
  friend auto operator<=>(const IndexPair&, const IndexPair&) = default;
};

/// "L12"; indices above 9 are comma separated ("L3,10").
std::string pair_name(IndexPair pair);

/// diag(+1 x p, -1 x q).
class Metric {
 public:
  Metric(int p, int q);

  int p() const { return p_; }
  int q() const { return q_; }
  int size() const { return p_ + q_; }
  /// Diagonal entry for a 1-based index.
  int g(int index) const;
  ExactMatrix matrix() const;
  /// "4,2"
  std::string to_string() const;
  friend bool operator==(const Metric&, const Metric&) = default;

  /// Parses "p,q".
  static Metric parse(std::string_view text);

 private:
  int p_;
  int q_;
};

struct Generator {
  IndexPair pair;
  std::string name;
  ExactMatrix matrix;
};

/// The L_ab (a < b) of so(p,q) in lexicographic order.
class GeneratorSet {
 public:
  GeneratorSet(Metric metric, std::vector<Generator> generators);

  const Metric& metric() const { return metric_; }
  std::size_t size() const { return generators_.size(); }
  std::size_t dim() const { return static_cast<std::size_t>(metric_.size()); }
  std::span<const Generator> generators() const { return generators_; }
  std::vector<ExactMatrix> matrices() const;

  /// L_ab with L_ba = -L_ab. Throws std::out_of_range for a == b or bad indices.
  ExactMatrix operator()(int a, int b) const;
  /// Position of L_ab (a < b) within generators().
  std::size_t position(IndexPair pair) const;

  /// Expander over the generator basis, built once.
  const BasisExpander& expander() const { return *expander_; }

  /// Copy with one matrix entry of one generator shifted by delta (0-based row/col).
  GeneratorSet with_perturbed_entry(IndexPair pair, std::size_t row, std::size_t col,
                                    const GaussianRational& delta) const;

 private:
  Metric metric_;
  std::vector<Generator> generators_;
  std::shared_ptr<const BasisExpander> expander_;
};

/// (L_ab)_{mn} = i (delta_{ma} g_{bn} - delta_{mb} g_{an}). Requires p + q >= 2.
GeneratorSet build_generators(const Metric& metric);

struct BracketTerm {
  GaussianRational coefficient;
  IndexPair pair;
  friend bool operator==(const BracketTerm&, const BracketTerm&) = default;
};

/// Sum of coefficient * L_pair with pairs normalized (a < b), merged and sorted.
using FormalSum = std::vector<BracketTerm>;

/// "i L13 - 1/2 L24"; "0" for the empty sum.
std::string to_string(const FormalSum& sum);

/// i (g_ad L_bc + g_bc L_ad - g_ac L_bd - g_bd L_ac) for [L_ab, L_cd].
FormalSum expected_bracket(const Metric& metric, IndexPair lhs, IndexPair rhs);

/// Coefficient vector of a formal sum in the generator basis order.
std::vector<GaussianRational> to_coefficients(const GeneratorSet& gs, const FormalSum& sum);
FormalSum from_coefficients(const GeneratorSet& gs, std::span<const GaussianRational> coeffs);

struct CommutationFailure {
  IndexPair lhs;
  IndexPair rhs;
  std::optional<FormalSum> got;  ///< absent when the commutator leaves the span
  FormalSum expected;
};

struct CommutationReport {
  Metric signature;
  std::size_t pair_count = 0;
  std::vector<CommutationFailure> failures;
  bool passed() const { return failures.empty(); }
};

/// Checks every unordered generator pair against expected_bracket.
CommutationReport verify_commutation(const GeneratorSet& gs);

/// Hydrogen-atom names for so(4,2) generators: L_i, A_i, B_i, Γ_i, Δ_i.
struct HydrogenAlias {
  std::string name;
  IndexPair pair;  ///< as written, may have first > second (L2 = L31)
};

std::span<const HydrogenAlias> hydrogen_aliases();

/// Matrix bound to an alias name; throws std::out_of_range for unknown names.
ExactMatrix alias_matrix(const GeneratorSet& gs, std::string_view name);

}  // namespace lietab
