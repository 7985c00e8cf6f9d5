#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "strata/curve_system.hpp"
#include "strata/geometry.hpp"
#include "strata/origami.hpp"
#include "strata/winding.hpp"

using namespace strata;

namespace {

std::string layout(const CurveSystem& cs) {
  std::string out;
  for (size_t r = 0; r < cs.rows.size(); ++r) {
    if (r) out += " / ";
    for (size_t k = 0; k < cs.rows[r].size(); ++k) {
      if (k) out += " ";
      out += cs.names[cs.rows[r][k]];
    }
  }
  return out;
}

// Path given by (square name, in, out) triples on the prototype.
CurvePath named(const Prototype& p, std::initializer_list<const char*> sq,
                std::initializer_list<const char*> io) {
  CurvePath out;
  auto it = io.begin();
  for (const char* name : sq) {
    const char* s = *it++;
    out.push_back({p.full2p[p.cs.square(name)], side_from_char(s[0]), side_from_char(s[1])});
  }
  return out;
}

std::vector<long long> unit(int dim, int k) {
  std::vector<long long> e(dim, 0);
  e[k] = 1;
  return e;
}

}  // namespace

TEST_CASE("labeling case table and validation") {
  using P = std::optional<Parity>;
  // Odd gcd: no parity argument allowed, always the first labeling.
  CHECK(labeling_case(3, {1, 1, 1, 1}, P{}) == LabelCase::OneTwo);
  CHECK(labeling_case(4, {3, 3}, P{}) == LabelCase::OneTwo);
  CHECK_THROWS_AS(labeling_case(3, {1, 1, 1, 1}, P{Parity::Even}), std::invalid_argument);
  // Even gcd: parity required and selects the labeling by genus mod 4.
  CHECK_THROWS_AS(labeling_case(3, {2, 2}, P{}), std::invalid_argument);
  CHECK(labeling_case(3, {2, 2}, P{Parity::Even}) == LabelCase::OneTwo);
  CHECK(labeling_case(3, {2, 2}, P{Parity::Odd}) == LabelCase::Three);
  CHECK(labeling_case(4, {2, 2, 2}, P{Parity::Even}) == LabelCase::OneTwo);
  CHECK(labeling_case(4, {6}, P{Parity::Odd}) == LabelCase::Three);
  CHECK(labeling_case(5, {4, 4}, P{Parity::Odd}) == LabelCase::OneTwo);
  CHECK(labeling_case(5, {2, 2, 2, 2}, P{Parity::Even}) == LabelCase::Three);
  CHECK(labeling_case(6, {10}, P{Parity::Odd}) == LabelCase::OneTwo);
  CHECK(labeling_case(6, {10}, P{Parity::Even}) == LabelCase::Three);
  // Partition validation.
  CHECK_THROWS_AS(labeling_case(3, {2, 3}, P{}), std::invalid_argument);
  CHECK_THROWS_AS(labeling_case(3, {4, 0}, P{}), std::invalid_argument);
  CHECK_THROWS_AS(labeling_case(2, {2}, P{Parity::Even}), std::invalid_argument);
}

TEST_CASE("selected auxiliary squares per part") {
  CHECK(selected_b_indices(3, {2, 2}) == std::vector<int>{1, 3});
  CHECK(selected_b_indices(4, {2, 2, 2}) == std::vector<int>{5, 1, 3});
  CHECK(selected_b_indices(4, {6}) == std::vector<int>{3});
  CHECK(selected_b_indices(4, {3, 3}) == std::vector<int>{6, 3});
  // Uniform partitions select the indices congruent to 3 mod r.
  auto sel = selected_b_indices(7, {3, 3, 3, 3});
  std::sort(sel.begin(), sel.end());
  CHECK(sel == std::vector<int>{3, 6, 9, 12});
}

TEST_CASE("reference figure layouts") {
  CHECK(layout(build_curve_system(3, LabelCase::OneTwo)) ==
        "Q1 B1 / P2 B2 Q2 B4 / P3 B3");
  CHECK(layout(build_curve_system(4, LabelCase::OneTwo)) ==
        "Q1 B1 / P2 B2 Q2 B6 / P3 B5 Q3 B3 / P4 B4");
  CHECK(layout(build_curve_system(3, LabelCase::Three)) ==
        "P1 B4 / P2 B2 / L31 B1 L32 B3");
  CHECK(layout(build_curve_system(4, LabelCase::Three)) ==
        "P1 B6 / P2 B2 / L31 B1 L32 B3 Q3 B5 / P4 B4");
  CHECK(layout(build_curve_system(5, LabelCase::Three)) ==
        "P1 B8 / P2 B2 / L31 B1 L32 B3 Q3 B7 / P4 B6 Q4 B4 / P5 B5");
}

TEST_CASE("figures exist for both labelings up to genus 8") {
  for (int g = 3; g <= 8; ++g) {
    for (LabelCase lc : {LabelCase::OneTwo, LabelCase::Three}) {
      CurveSystem cs = build_curve_system(g, lc);
      CHECK(cs.full.n == 4 * g - 4);
      CHECK(is_connected(cs.full));
      CHECK(genus(cs.full) == g);
      CHECK(singularity_profile(cs.full) == std::vector<int>(2 * g - 2, 1));
      CHECK(static_cast<int>(cs.rows.size()) == g);
      CHECK(static_cast<int>(cs.cols.size()) == g - 1);
    }
  }
}

TEST_CASE("prototypes realize the requested zeros") {
  Prototype p = build_prototype(3, {2, 2}, Parity::Even);
  CHECK(p.o.n == 6);
  CHECK(singularity_profile(p.o) == std::vector<int>{2, 2});
  CHECK(p.kept == std::vector<int>{1, 3});
  CHECK(p.is_kept(1));
  CHECK_FALSE(p.is_kept(2));
  for (int s = 0; s < p.o.n; ++s) CHECK(p.full2p[p.p2full[s]] == s);

  CHECK(singularity_profile(build_prototype(4, {2, 2, 2}, Parity::Odd).o) ==
        std::vector<int>(3, 2));
  CHECK(singularity_profile(build_prototype(4, {6}, Parity::Even).o) ==
        std::vector<int>{6});
  CHECK(singularity_profile(build_prototype(4, {1, 2, 3}, std::nullopt).o) ==
        std::vector<int>{1, 2, 3});
  CHECK(singularity_profile(build_prototype(5, {3, 5}, std::nullopt).o) ==
        std::vector<int>{3, 5});
  CHECK_THROWS_AS(build_prototype(3, {2, 2}, std::nullopt), std::invalid_argument);
}

TEST_CASE("straight realizations on the full figure") {
  CurveSystem cs = build_curve_system(3, LabelCase::OneTwo);
  CurvePath b1 = realize_full(cs, "b1");
  REQUIRE(b1.size() == 1);
  CHECK(b1[0].sq == cs.square("B1"));
  CHECK(b1[0].in == Side::B);
  CHECK(b1[0].out == Side::T);
  CHECK(realize_full(cs, "a1").size() == cs.rows[0].size());
  CHECK(realize_full(cs, "a2'").size() == 2);
  CHECK_THROWS_AS(realize_full(cs, "a4"), std::invalid_argument);
  CHECK_THROWS_AS(realize_full(cs, "b0"), std::invalid_argument);
  CHECK_THROWS_AS(realize_full(cs, "c1"), std::invalid_argument);
  for (const std::string& name : {"a1", "a2", "a3", "a1'", "a2'", "b1", "b2", "b3", "b4"})
    CHECK_NOTHROW(validate_path(cs.full, realize_full(cs, name)));
}

TEST_CASE("deleted b-curves reroute around the fused vertex") {
  Prototype p = build_prototype(3, {2, 2}, Parity::Even);
  CurvePath got = realize_on_prototype(p, "b2");
  CurvePath want = named(p, {"P2", "Q1", "B1", "B1", "Q1"},
                         {"BT", "BR", "LB", "TL", "RT"});
  CHECK(got == want);
  CHECK(turning_number(got) == -1);
  // Kept curves stay vertical circles.
  CurvePath b1 = realize_on_prototype(p, "b1");
  REQUIRE(b1.size() == 1);
  CHECK(b1[0].sq == p.full2p[p.cs.square("B1")]);
  // Every network curve and every b-curve validates on the prototype.
  for (int j = 1; j <= 4; ++j)
    CHECK_NOTHROW(validate_path(p.o, realize_on_prototype(p, "b" + std::to_string(j))));
}

TEST_CASE("homology coordinates form the expected symplectic basis") {
  for (auto spin : {Parity::Even, Parity::Odd}) {
    Prototype p = build_prototype(3, {2, 2}, spin);
    const int g = 3;
    // Each b-curve, kept or rerouted, represents the dual of its row.
    for (int j = 1; j <= 2 * g - 2; ++j) {
      CurvePath bj = realize_on_prototype(p, "b" + std::to_string(j));
      CHECK(homology_coords(p, bj) == unit(2 * g, g + p.cs.batt[j - 1] - 1));
    }
    // Duality of rows against their paired b-curves.
    std::vector<std::vector<long long>> arow, bdual;
    for (int i = 1; i <= g; ++i) {
      arow.push_back(homology_coords(p, realize_on_prototype(p, "a" + std::to_string(i))));
      bdual.push_back(homology_coords(
          p, realize_on_prototype(p, "b" + std::to_string(p.dual_b(i)))));
    }
    for (int i = 0; i < g; ++i)
      for (int j = 0; j < g; ++j) {
        CHECK(symplectic_pairing(arow[i], bdual[j]) == (i == j ? 1 : 0));
        CHECK(symplectic_pairing(arow[i], arow[j]) == 0);
        CHECK(symplectic_pairing(bdual[i], bdual[j]) == 0);
      }
  }
}

TEST_CASE("chain boundary oracle at genus 3") {
  CurveSystem cs = build_curve_system(3, LabelCase::OneTwo);
  CurvePath got = chain_boundary_full(cs, 1, 2);
  auto step = [&](const char* name, const char* io) {
    return Step{cs.square(name), side_from_char(io[0]), side_from_char(io[1])};
  };
  CurvePath want = {step("Q1", "LT"), step("P2", "BL"), step("B4", "RL"),
                    step("Q2", "RL"), step("B2", "RL"), step("P2", "RB"),
                    step("Q1", "TR"), step("B1", "LR")};
  CHECK(got == want);
  CHECK(turning_number(got) == 1);
  std::vector<long long> coords = homology_coords_full(cs, got);
  CHECK(coords == std::vector<long long>{1, -1, 0, 0, 0, 0});
  // Index aliasing: c(i,j) = c(2g-j, 2g-i).
  CHECK(chain_boundary_full(cs, 4, 5) == got);
  CHECK_THROWS_AS(chain_boundary_full(cs, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(chain_boundary_full(cs, 0, 2), std::invalid_argument);
  CHECK_THROWS_AS(chain_boundary_full(cs, 2, 7), std::invalid_argument);

  Prototype p = build_prototype(3, {2, 2}, Parity::Even);
  CurvePath proto = chain_boundary_on_prototype(p, 1, 2);
  CurvePath want_proto = named(p, {"Q1", "P2", "Q2", "P2", "Q1", "B1"},
                               {"LT", "BL", "RL", "RB", "TR", "LR"});
  CHECK(proto == want_proto);
  CHECK(homology_coords(p, proto) == std::vector<long long>{1, -1, 0, 0, 0, 0});
}

TEST_CASE("chain boundaries trace on every figure") {
  for (LabelCase lc : {LabelCase::OneTwo, LabelCase::Three}) {
    CurveSystem cs = build_curve_system(4, lc);
    for (int i = 1; i <= 3; ++i)
      for (int j = i + 1; j <= 4; ++j) {
        CurvePath c = chain_boundary_full(cs, i, j);
        CHECK_NOTHROW(validate_path(cs.full, c));
        // A chain neighborhood boundary is null in the a/b-span only when
        // it bounds; its class is a signed sum of row classes.
        auto coords = homology_coords_full(cs, c);
        for (int k = 4; k < 8; ++k) CHECK(coords[k] == 0);
      }
  }
}

TEST_CASE("network catalog and intersection graph") {
  Prototype p = build_prototype(3, {2, 2}, Parity::Even);
  auto names = network_curves(p);
  CHECK(names == std::vector<std::string>{"a1", "a2", "a3", "a1'", "a2'", "b1", "b3"});

  auto j = nlohmann::json::parse(intersection_graph(p, "json"));
  CHECK(j.at("curves").size() == names.size());
  CHECK(j.at("edges").size() == 6);
  for (const auto& e : j.at("edges")) CHECK(e.at("crossings") == 1);

  std::string dot = intersection_graph(p, "dot");
  CHECK(dot.find("graph curve_system") != std::string::npos);
  CHECK(dot.find("a1'") != std::string::npos);
  CHECK_THROWS_AS(intersection_graph(p, "xml"), std::invalid_argument);
}

TEST_CASE("straight-line drawings cross as the graph says") {
  Prototype p = build_prototype(3, {2, 2}, Parity::Even);
  Frac l0 = lane_of(0, 2), l1 = lane_of(1, 2);
  CurvePath a1 = realize_on_prototype(p, "a1");
  CurvePath a2 = realize_on_prototype(p, "a2");
  CurvePath a2c = realize_on_prototype(p, "a2'");
  CurvePath b1 = realize_on_prototype(p, "b1");
  CurvePath bh2 = realize_on_prototype(p, "b2");
  CHECK(chord_crossing_count(a1, l0, a2, l1) == 0);
  CHECK(chord_crossing_count(a2, l0, a2c, l1) == 1);
  CHECK(chord_crossing_count(a1, l0, b1, l1) == 1);
  CHECK(chord_crossing_count(a2, l0, bh2, l1) == 1);
  // The phantom rides through Q1 and B1; each contributes one chord across
  // a1's lane, with opposite signs.
  CHECK(chord_crossing_count(a1, l0, bh2, l1) == 2);
  CHECK(chord_crossing_sum(a1, l0, bh2, l1) == 0);
}