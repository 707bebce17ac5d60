#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "discrim/graph.hpp"

using namespace discrim;

namespace {

std::set<std::string> element_strings(const StabilizerGroup& g) {
  std::set<std::string> out;
  for (const auto& e : g.elements()) {
    out.insert(e.str());
  }
  return out;
}

std::vector<GraphSpec> connected_graphs(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> all_edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      all_edges.emplace_back(i, j);
    }
  }
  std::vector<GraphSpec> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << all_edges.size()); ++mask) {
    GraphSpec g{n, {}};
    for (std::size_t e = 0; e < all_edges.size(); ++e) {
      if ((mask >> e) & 1u) {
        g.edges.push_back(all_edges[e]);
      }
    }
    if (g.connected()) {
      out.push_back(std::move(g));
    }
  }
  return out;
}

std::size_t brute_force_weight2(const GraphSpec& g) {
  auto group = StabilizerGroup::from_generators(generators_from_graph(g));
  std::size_t count = 0;
  for (const auto& e : group.elements()) {
    if (e.weight() == 2) {
      ++count;
    }
  }
  return count;
}

}  // namespace

TEST_CASE("star graph generators") {
  auto gens = generators_from_graph(GraphSpec::star(4));
  REQUIRE(gens.size() == 4);
  CHECK(gens[0].str() == "+XZZZ");
  CHECK(gens[1].str() == "+ZXII");
  CHECK(gens[2].str() == "+ZIXI");
  CHECK(gens[3].str() == "+ZIIX");
}

TEST_CASE("single vertex and path generators") {
  auto single = generators_from_graph(GraphSpec{1, {}});
  REQUIRE(single.size() == 1);
  CHECK(single[0].str() == "+X");

  auto path = generators_from_graph(GraphSpec::path(3));
  CHECK(path[0].str() == "+XZI");
  CHECK(path[1].str() == "+ZXZ");
  CHECK(path[2].str() == "+IZX");
}

TEST_CASE("graph validation") {
  CHECK_THROWS_AS((GraphSpec{2, {{0, 0}}}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((GraphSpec{2, {{0, 1}, {1, 0}}}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((GraphSpec{2, {{0, 5}}}.validate()), std::invalid_argument);
}

TEST_CASE("GHZ4 group from computational-basis generators") {
  auto group = StabilizerGroup::from_generators({
      PauliString::parse("XXXX"), PauliString::parse("ZZII"),
      PauliString::parse("IZZI"), PauliString::parse("IIZZ")});
  auto elems = element_strings(group);
  REQUIRE(elems.size() == 16);
  std::set<std::string> expected{
      "+IIII", "+IIZZ", "+IZZI", "+ZZII", "+IZIZ", "+ZIZI", "+ZIIZ", "+ZZZZ",
      "+XXXX", "-XXYY", "-XYXY", "-XYYX", "-YXXY", "-YXYX", "-YYXX", "+YYYY"};
  CHECK(elems == expected);
}

TEST_CASE("C4 group contains the four negative elements") {
  auto group = StabilizerGroup::from_generators({
      PauliString::parse("ZZII"), PauliString::parse("IIZZ"),
      PauliString::parse("XXZI"), PauliString::parse("IZXX")});
  auto elems = element_strings(group);
  REQUIRE(elems.size() == 16);
  std::set<std::string> expected{
      "+IIII", "+IIZZ", "+ZZII", "+ZZZZ",
      "+XYXY", "+XYYX", "+YXXY", "+YXYX",
      "+IZXX", "+ZIXX", "+XXIZ", "+XXZI",
      "-IZYY", "-ZIYY", "-YYIZ", "-YYZI"};
  CHECK(elems == expected);
}

TEST_CASE("single generator group") {
  auto group = StabilizerGroup::from_generators({PauliString::parse("X")});
  CHECK(element_strings(group) == std::set<std::string>{"+I", "+X"});
}

TEST_CASE("generator checks") {
  CHECK_THROWS_AS(StabilizerGroup::from_generators(
                      {PauliString::parse("X"), PauliString::parse("Z")}),
                  std::invalid_argument);
  CHECK_THROWS_AS(StabilizerGroup::from_generators(
                      {PauliString::parse("XX"), PauliString::parse("YY"),
                       PauliString::parse("ZZ")}),
                  std::invalid_argument);  // ZZ = -XX*YY, dependent
}

TEST_CASE("stabilizer states of the named groups") {
  auto ghz_group = StabilizerGroup::from_generators({
      PauliString::parse("XXXX"), PauliString::parse("ZZII"),
      PauliString::parse("IZZI"), PauliString::parse("IIZZ")});
  auto ghz_state = stabilizer_state(ghz_group);
  double s = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(ghz_state.amplitudes()[0] - s) < 1e-10);
  CHECK(std::abs(ghz_state.amplitudes()[15] - s) < 1e-10);
  CHECK(ghz_state.amplitudes().segment(1, 14).norm() < 1e-10);

  auto c4_group = StabilizerGroup::from_generators({
      PauliString::parse("ZZII"), PauliString::parse("IIZZ"),
      PauliString::parse("XXZI"), PauliString::parse("IZXX")});
  auto c4_state = stabilizer_state(c4_group);
  CHECK(std::abs(c4_state.amplitudes()[0b0000] - 0.5) < 1e-10);
  CHECK(std::abs(c4_state.amplitudes()[0b0011] - 0.5) < 1e-10);
  CHECK(std::abs(c4_state.amplitudes()[0b1100] - 0.5) < 1e-10);
  CHECK(std::abs(c4_state.amplitudes()[0b1111] + 0.5) < 1e-10);

  auto zero = stabilizer_state(StabilizerGroup::from_generators({PauliString::parse("Z")}));
  CHECK(std::abs(zero.amplitudes()[0] - 1.0) < 1e-12);
}

TEST_CASE("inconsistent or incomplete groups are rejected") {
  // Too few generators for a full state group: projector is not rank 1.
  auto partial = StabilizerGroup::from_generators({PauliString::parse("ZZ")});
  CHECK_THROWS_AS(stabilizer_state(partial), std::invalid_argument);
}

TEST_CASE("two-point counts for the named graphs") {
  auto star4 = count_two_point(GraphSpec::star(4));
  CHECK(star4.k == 6);
  auto path4 = count_two_point(GraphSpec::path(4));
  CHECK(path4.k == 2);
  auto star3 = count_two_point(GraphSpec::star(3));
  CHECK(star3.k == 3);

  CHECK(brute_force_weight2(GraphSpec::star(4)) == 6);
  CHECK(brute_force_weight2(GraphSpec::path(4)) == 2);
  CHECK(brute_force_weight2(GraphSpec::star(3)) == 3);
}

TEST_CASE("two-point preconditions") {
  CHECK_THROWS_AS(count_two_point(GraphSpec{2, {{0, 1}}}), std::invalid_argument);
  CHECK_THROWS_AS(count_two_point(GraphSpec{4, {{0, 1}, {2, 3}}}),
                  std::invalid_argument);
}

TEST_CASE("two-point discrimination bound") {
  CHECK(two_point_bound(GraphSpec::star(4), GraphSpec::path(4)) ==
        doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(two_point_bound(GraphSpec::star(4), GraphSpec::star(4)) == 0.0);
  CHECK(two_point_bound(GraphSpec::path(4), GraphSpec::star(4)) == 0.0);
}

TEST_CASE("rule-based count equals brute force for all small connected graphs") {
  for (std::size_t n = 3; n <= 5; ++n) {
    for (const auto& g : connected_graphs(n)) {
      auto rules = count_two_point(g);
      CHECK(rules.k == brute_force_weight2(g));
      // All two-point operators of one graph act on pairwise different pairs.
      std::set<std::vector<std::size_t>> supports;
      for (const auto& op : rules.ops) {
        CHECK(op.weight() == 2);
        CHECK(supports.insert(op.support()).second);
      }
    }
  }
}

TEST_CASE("every small graph state satisfies its generators") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& g : connected_graphs(n)) {
      auto gens = generators_from_graph(g);
      auto state = stabilizer_state(StabilizerGroup::from_generators(gens));
      for (const auto& k : gens) {
        Eigen::VectorXcd mapped = to_matrix(k) * state.amplitudes();
        CHECK((mapped - state.amplitudes()).norm() < 1e-12);
      }
    }
  }
}
