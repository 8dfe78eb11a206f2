#pragma once

// Commutation tables transcribed as printed, evaluated against the matrix
// realization. A relation that does not hold is reported with the value the
// matrices actually give; nothing is corrected silently.

#include "lietab/cartan_weyl.hpp"

#include <span>
#include <string>
#include <vector>

namespace lietab {

/// [lhs_a, lhs_b] = rhs
struct PrintedRelation {
  std::string source;  ///< table label, e.g. "Com1"
  std::string text;    ///< printed form, e.g. "[L3,L1] = -i L2"
  std::string lhs_a;
  std::string lhs_b;
  LinearExpr rhs;
};

struct RelationResult {
  PrintedRelation relation;
  bool holds = false;
  std::string realized;  ///< "[L3,L1] = -i L2" as computed
};

struct RelationReport {
  std::string source;
  std::vector<RelationResult> results;
  std::size_t holding() const;
  std::vector<RelationResult> deviations() const;
  bool all_hold() const { return holding() == results.size(); }
};

RelationReport check_relations(const OperatorDictionary& dict, std::span<const PrintedRelation> relations);

/// Raw L_ab, hydrogen aliases, Yao basis with ladders, sl(2,C) shell with ladders.
OperatorDictionary so42_dictionary(const GeneratorSet& gs);
/// Raw L_ab and both split halves with ladders.
OperatorDictionary so44_dictionary(const GeneratorSet& gs);

// so(4,2), hydrogen names
std::vector<PrintedRelation> com1_relations();
std::vector<PrintedRelation> hydrogen_epsilon_relations();
// sl(2,C)
std::vector<PrintedRelation> shell_relations();
std::vector<PrintedRelation> per2s_relations();
std::vector<PrintedRelation> per3s_relations();
// so(4)
std::vector<PrintedRelation> so4_epsilon_relations();
std::vector<PrintedRelation> jkcom_relations();
// so(2,2), planes (L3, Δ3) and (A3, Δ3)
std::vector<PrintedRelation> so21_ts_relations();
std::vector<PrintedRelation> so22_ts_relations();
std::vector<PrintedRelation> so21_pq_relations();
std::vector<PrintedRelation> so22_pq_relations();
// so(4,4) split basis
std::vector<PrintedRelation> cb1_relations();
std::vector<PrintedRelation> cb2_relations();
std::vector<PrintedRelation> syb1_relations();
std::vector<PrintedRelation> syb2_relations();

struct PrintedRoot {
  std::string name;
  std::vector<int> components;
};

/// Root vectors over (L3, A3, Δ3) as printed for so(4,2), Cartan members included.
std::vector<PrintedRoot> printed_so42_roots();
/// First-half so(4,4) roots, three components.
std::vector<PrintedRoot> printed_rs1_roots();
/// Second-half so(4,4) roots, three components over unstated axes.
std::vector<PrintedRoot> printed_rs2_roots();

}  // namespace lietab
