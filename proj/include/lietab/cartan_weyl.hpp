#pragma once

#include "lietab/exact.hpp"
#include "lietab/so_pq.hpp"

#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lietab {

enum class OperatorKind { cartan, weyl, raw };

struct NamedOperator {
  std::string name;
  ExactMatrix matrix;
  OperatorKind kind = OperatorKind::raw;
};

class UnknownOperator : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class WrongSignature : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotARootVector : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// coefficient * operator-name
struct Term {
  GaussianRational coefficient;
  std::string name;
};
using LinearExpr = std::vector<Term>;

/// "J3 + K3", "-L56", "1/2 L12 - i L34"; "0" when empty.
std::string to_string(const LinearExpr& expr);

/// Name -> matrix lookup that remembers insertion order.
class OperatorDictionary {
 public:
  void add(const NamedOperator& op);
  void add(std::span<const NamedOperator> ops);
  bool contains(std::string_view name) const;
  /// Throws UnknownOperator.
  const ExactMatrix& at(std::string_view name) const;
  ExactMatrix evaluate(const LinearExpr& expr) const;
  const std::vector<std::string>& names() const { return order_; }

 private:
  std::map<std::string, ExactMatrix, std::less<>> ops_;
  std::vector<std::string> order_;
};

struct CartanSet {
  std::vector<NamedOperator> members;
  std::size_t rank() const { return members.size(); }
};

/// Largest pairwise-commuting subset of the L_ab basis, lexicographically first among ties.
CartanSet find_cartan(const GeneratorSet& gs);

/// True when no generator outside the set commutes with every member.
bool is_maximal_abelian(const GeneratorSet& gs, const CartanSet& cartan);

/// K1 K2 K3 J1 J2 J3 T1 T2 T0 S1 S2 S0 P1 P2 P0 Q1 Q2 Q0. Requires (4,2).
std::vector<NamedOperator> yao_basis(const GeneratorSet& gs);

struct SplitBasis {
  std::vector<NamedOperator> first;   ///< "1K1" ... "1Q0"
  std::vector<NamedOperator> second;  ///< "2K1" ... "2Q0"
  std::vector<NamedOperator> all() const;
};

/// Requires (4,4).
SplitBasis split_basis_so44(const GeneratorSet& gs);

/// Raw L_ab generators as operators named "L12", ...
std::vector<NamedOperator> raw_operators(const GeneratorSet& gs);

struct EmulationChain {
  std::string label;
  std::vector<LinearExpr> members;  ///< all members must be equal
};

struct ChainLink {
  std::string lhs;
  std::string rhs;
  bool holds = false;
};

struct ChainResult {
  std::string label;
  std::vector<ChainLink> links;
  bool holds() const;
};

struct EmulationReport {
  std::vector<ChainResult> chains;
  std::size_t chains_holding() const;
  bool passed() const { return chains_holding() == chains.size(); }
};

std::vector<EmulationChain> yao_emulation_chains();
std::vector<EmulationChain> split_emulation_chains();

/// Throws UnknownOperator when a chain references a missing name.
EmulationReport emulation_check(const GeneratorSet& gs, std::span<const NamedOperator> basis, std::span<const EmulationChain> chains);

/// E+ = E1 + i E2 and E- = E1 - i E2 for every family present, in order of
/// first appearance. Families are names like "K1", "2Q1", "X1".
std::vector<NamedOperator> ladder_operators(std::span<const NamedOperator> basis);

struct RootVector {
  std::vector<Rational> components;
  RootVector operator-() const;
  bool is_zero() const;
  friend bool operator==(const RootVector&, const RootVector&) = default;
};

/// "(1,-1,0)"
std::string to_string(const RootVector& root);

/// Throws NotARootVector when some [H, e] is not a real multiple of e.
RootVector extract_root(const CartanSet& cartan, const NamedOperator& e);

struct RootEntry {
  std::string name;
  RootVector root;
  friend bool operator==(const RootEntry&, const RootEntry&) = default;
};

struct RootTable {
  std::vector<std::string> cartan;
  std::vector<RootEntry> roots;
  const RootVector& at(std::string_view name) const;
  friend bool operator==(const RootTable&, const RootTable&) = default;
};

/// Rows follow the order of weyl (families K J T S P Q, + before -).
RootTable root_system(const CartanSet& cartan, std::span<const NamedOperator> weyl);

/// Cartan members renamed to the hydrogen labels L3, A3, Δ3 (so(4,2) only).
CartanSet hydrogen_cartan(const GeneratorSet& gs);

/// Requires (4,2); degree 2, 3 or 4, otherwise std::invalid_argument.
ExactMatrix casimir(const GeneratorSet& gs, int degree);

enum class Subalgebra { sl2c, so4, so22_l_delta, so22_a_delta };

Subalgebra parse_subalgebra(std::string_view text);
std::string to_string(Subalgebra which);

struct SubalgebraBasis {
  std::string name;
  std::vector<NamedOperator> components;  ///< X1..X3 Y1..Y3 or K1..K3 J1..J3 etc.
  std::vector<NamedOperator> cartan;      ///< two members
  std::vector<NamedOperator> weyl;        ///< four ladder operators
  std::pair<std::string, std::string> halves;  ///< family letters, e.g. {"X", "Y"}
};

/// Requires (4,2).
SubalgebraBasis subalgebra_basis(const GeneratorSet& gs, Subalgebra which);

}  // namespace lietab
