#include "oracles.hpp"

#include "lietab/relations.hpp"

using namespace lietab;

namespace {

IndexPair pair_of(const GeneratorSet& gs, const ExactMatrix& m) {
  for (const auto& g : gs.generators())
    if (g.matrix == m) return g.pair;
  FAIL("not a raw generator");
  return {};
}

}  // namespace

TEST_SUITE("cartan_weyl") {
  TEST_CASE("cartan rank is floor(n/2)") {
    for (auto [p, q] : {std::pair{3, 0}, {3, 1}, {2, 2}, {4, 2}, {5, 0}, {4, 4}}) {
      auto gs = build_generators(Metric(p, q));
      auto cartan = find_cartan(gs);
      CHECK(cartan.rank() == static_cast<std::size_t>((p + q) / 2));
      CHECK(is_maximal_abelian(gs, cartan));
    }
  }

  TEST_CASE("non-maximal sets are rejected") {
    auto gs = build_generators(Metric(4, 2));
    CartanSet partial{{{"L12", gs(1, 2), OperatorKind::cartan}}};
    CHECK_FALSE(is_maximal_abelian(gs, partial));
  }

  TEST_CASE("yao basis redundancy") {
    auto gs = build_generators(Metric(4, 2));
    auto yao = yao_basis(gs);
    REQUIRE(yao.size() == 18);
    std::vector<ExactMatrix> mats;
    for (const auto& op : yao) mats.push_back(op.matrix);
    CHECK(oracle::field_rank(mats) == 15);
    auto chains = yao_emulation_chains();
    CHECK(emulation_check(gs, yao, chains).passed());
    CHECK_THROWS_AS(split_basis_so44(gs), WrongSignature);
  }

  TEST_CASE("split basis redundancy") {
    auto gs = build_generators(Metric(4, 4));
    auto all = split_basis_so44(gs).all();
    REQUIRE(all.size() == 36);
    std::vector<ExactMatrix> mats;
    for (const auto& op : all) mats.push_back(op.matrix);
    CHECK(oracle::field_rank(mats) == 28);
    auto chains = split_emulation_chains();
    CHECK(emulation_check(gs, all, chains).passed());
  }

  TEST_CASE("roots agree with the formal bracket algebra") {
    for (auto sig : {Metric(4, 2), Metric(4, 4)}) {
      auto gs = build_generators(sig);
      auto cartan = find_cartan(gs);
      std::vector<IndexPair> pairs;
      for (const auto& h : cartan.members) pairs.push_back(pair_of(gs, h.matrix));
      std::vector<NamedOperator> weyl;
      if (sig == Metric(4, 2)) {
        weyl = ladder_operators(yao_basis(gs));
      } else {
        auto split = split_basis_so44(gs);
        weyl = ladder_operators(split.first);
        for (auto& op : ladder_operators(split.second)) weyl.push_back(op);
      }
      CHECK(weyl.size() == (sig == Metric(4, 2) ? 12u : 24u));
      RootTable table = root_system(cartan, weyl);
      for (const auto& op : weyl) {
        CAPTURE(op.name);
        CHECK(table.at(op.name).components == oracle::symbolic_root(gs, pairs, op.matrix));
      }
      for (std::size_t k = 0; k + 1 < weyl.size(); k += 2) CHECK(table.at(weyl[k].name) == -table.at(weyl[k + 1].name));
    }
  }

  TEST_CASE("root extraction errors") {
    auto gs = build_generators(Metric(4, 2));
    auto cartan = find_cartan(gs);
    CHECK_THROWS_AS(extract_root(cartan, {"L13", gs(1, 3), OperatorKind::raw}), NotARootVector);
    CHECK_THROWS_AS(extract_root(cartan, {"zero", ExactMatrix(6), OperatorKind::raw}), std::invalid_argument);
    CHECK(extract_root(cartan, cartan.members[0]).is_zero());
  }

  TEST_CASE("ladders need both components") {
    auto gs = build_generators(Metric(4, 2));
    auto yao = yao_basis(gs);
    std::vector<NamedOperator> lonely{yao[0]};
    CHECK_THROWS_AS(ladder_operators(lonely), UnknownOperator);
  }

  TEST_CASE("casimirs") {
    auto gs = build_generators(Metric(4, 2));
    ExactMatrix c2 = casimir(gs, 2);
    CHECK(c2 == oracle::tensor_quadratic_casimir(gs));
    for (int degree : {2, 3, 4}) {
      ExactMatrix c = casimir(gs, degree);
      for (const auto& m : gs.matrices()) CHECK(commutator(c, m).is_zero());
    }
    CHECK_THROWS(casimir(gs, 5));
    CHECK_THROWS_AS(casimir(build_generators(Metric(4, 4)), 2), WrongSignature);
  }

  TEST_CASE("subalgebra families commute with each other") {
    auto gs = build_generators(Metric(4, 2));
    for (auto which : {Subalgebra::sl2c, Subalgebra::so4, Subalgebra::so22_l_delta, Subalgebra::so22_a_delta}) {
      auto sub = subalgebra_basis(gs, which);
      REQUIRE(sub.components.size() == 6);
      CHECK(sub.cartan.size() == 2);
      CHECK(sub.weyl.size() == 4);
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 3; j < 6; ++j) CHECK(commutator(sub.components[i].matrix, sub.components[j].matrix).is_zero());
    }
    CHECK(parse_subalgebra("so22_LD") == Subalgebra::so22_l_delta);
    CHECK_THROWS(parse_subalgebra("su3"));
  }

  TEST_CASE("printed tables are evaluated verbatim") {
    auto gs = build_generators(Metric(4, 2));
    auto dict = so42_dictionary(gs);
    auto com1 = com1_relations();
    CHECK(check_relations(dict, com1).all_hold());
    auto eps = hydrogen_epsilon_relations();
    auto report = check_relations(dict, eps);
    CHECK_FALSE(report.all_hold());
    for (const auto& dev : report.deviations()) CHECK_FALSE(dev.realized.empty());
    auto per2s = per2s_relations();
    CHECK(check_relations(dict, per2s).all_hold());
  }

  TEST_CASE("dictionary lookups") {
    OperatorDictionary dict;
    auto gs = build_generators(Metric(3, 0));
    dict.add(raw_operators(gs));
    CHECK(dict.contains("L12"));
    CHECK_THROWS_AS(dict.at("L99"), UnknownOperator);
    CHECK_THROWS(dict.add(raw_operators(gs)));
  }
}
