#include "oracles.hpp"

#include "lietab/periodic.hpp"

#include <set>

using namespace lietab;

TEST_SUITE("periodic") {
  TEST_CASE("madelung order matches a brute-force sort") {
    auto expected = oracle::brute_madelung(8);
    expected.resize(120);
    CHECK(madelung_sequence(120) == expected);
    CHECK(madelung_sequence(0).empty());
    CHECK(madelung_sequence(3).size() == 3);
  }

  TEST_CASE("element table parsing") {
    const auto& table = default_element_table();
    CHECK(table.size() == 120);
    CHECK(table.symbol(26) == "Fe");
    CHECK(table.z_of("Ubn") == 120);
    CHECK_THROWS_AS(table.symbol(0), UnknownElement);
    CHECK_THROWS_WITH_AS(table.z_of("Fx"), doctest::Contains("did you mean"), UnknownElement);
    CHECK_THROWS(ElementTable::parse_csv("z,sym\n1,H\n"));
    CHECK_THROWS(ElementTable::parse_csv("z,symbol\n1,H\n3,Li\n"));
    CHECK_THROWS(ElementTable::parse_csv("z,symbol\n1,H\n2,H\n"));
    CHECK_THROWS(ElementTable::parse_csv("z,symbol\n1,H\n2,He\n"));
  }

  TEST_CASE("assignment is a bijection") {
    auto elements = assign_elements(default_element_table());
    REQUIRE(elements.size() == 120);
    std::set<std::tuple<int, int, int, Spin>> kets;
    for (const auto& e : elements) kets.insert({e.ket.n, e.ket.l, e.ket.m, e.ket.s});
    CHECK(kets.size() == 120);
    CHECK(elements[0].ket.to_string() == "|1,0,0,-1/2⟩");
    CHECK(elements[118].symbol == "Uue");
    CHECK(elements[118].ket.to_string() == "|8,0,0,-1/2⟩");
  }

  TEST_CASE("spin slices partition the table") {
    auto elements = assign_elements(default_element_table());
    auto down = projection_slice(elements, Spin::minus_half);
    auto up = projection_slice(elements, Spin::plus_half);
    CHECK(down.occupied() == 60);
    CHECK(up.occupied() == 60);
    for (const auto& slice : {down, up})
      for (const auto& floor : slice.floors) {
        REQUIRE(floor.subshells.size() == static_cast<std::size_t>(floor.n));
        for (const auto& sub : floor.subshells) CHECK(sub.points.size() == static_cast<std::size_t>(2 * sub.l + 1));
      }
    // every subshell that is complete in the table contributes 2l+1 to each slice
    CHECK(down.floors[3].subshells[3].points.back().element.has_value());
    CHECK_FALSE(down.floors[4].subshells[4].points.front().element.has_value());
  }

  TEST_CASE("mirrors") {
    auto elements = assign_elements(default_element_table());
    auto anti = antimatter_mirror(elements[1]);
    CHECK(anti.symbol == "anti-He");
    CHECK(anti.ket.to_string() == "|-1,0,0,+1/2⟩");
    CHECK(anti.anti);
    CHECK_THROWS_AS(antimatter_mirror(anti), std::invalid_argument);
    auto slice = antimatter_slice(projection_slice(elements, Spin::minus_half));
    CHECK(slice.floors.front().n == -1);
    CHECK(slice.floors.front().subshells[0].points[0].element->symbol == "anti-H");
  }

  TEST_CASE("period lengths") {
    auto lengths = period_lengths(assign_elements(default_element_table()));
    REQUIRE(lengths.size() >= 7);
    std::vector<std::size_t> first(lengths.begin(), lengths.begin() + 7);
    CHECK(first == std::vector<std::size_t>{2, 8, 8, 18, 18, 32, 32});
    std::size_t total = 0;
    for (auto l : first) total += l;
    CHECK(total == 118);
  }

  TEST_CASE("haenzel counts") {
    for (std::uint32_t n = 1; n <= 10; ++n) {
      std::uint64_t rings_sum = 0;
      for (std::uint32_t l = 0; l < n; ++l) rings_sum += 2 * l + 1;
      auto stats = haenzel_stats(n);
      CHECK(stats.points == 2 * rings_sum);
      CHECK(stats.transversals == rings_sum);
      CHECK(stats.rings == n);
    }
    CHECK_THROWS(haenzel_stats(0));
  }

  TEST_CASE("homolog lines connect consecutive floors") {
    auto elements = assign_elements(default_element_table());
    auto steps = homolog_steps(projection_slice(elements, Spin::minus_half));
    const auto& table = default_element_table();
    bool hydrogen_lithium = false;
    for (const auto& s : steps) {
      const auto& lo = elements[s.lower_z - 1].ket;
      const auto& hi = elements[s.upper_z - 1].ket;
      CHECK(hi.n == lo.n + 1);
      CHECK(hi.l == lo.l);
      CHECK(hi.m == lo.m);
      hydrogen_lithium |= table.symbol(s.lower_z) == "H" && table.symbol(s.upper_z) == "Li";
    }
    CHECK(hydrogen_lithium);
  }
}
