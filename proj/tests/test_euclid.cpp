#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "strata/curve_system.hpp"
#include "strata/euclid.hpp"

using namespace strata;

namespace {

// Independent check of a certificate list: every word must carry its source
// class to its target class, and sources must be certified before use.
void check_certificates(const Prototype& p, const EuclideanTrace& tr) {
  std::set<std::string> known;
  for (const auto& c : tr.certificates) {
    if (c.word.empty() && c.target == c.source) {
      known.insert(c.target);
      continue;
    }
    INFO("certificate for ", c.target, " from ", c.source);
    CHECK(known.count(c.source) == 1);
    CHECK(verify_word(p, c.word, c.source, c.target));
    known.insert(c.target);
  }
  for (int t : tr.targets) CHECK(known.count("b" + std::to_string(t)) == 1);
}

}  // namespace

TEST_CASE("word inversion and json round trip") {
  TwistWord w{{"a1", 1}, {"b3", -2}, {"c(2,4)", 1}};
  TwistWord inv = inverse_word(w);
  REQUIRE(inv.size() == 3);
  CHECK(inv[0].name == "c(2,4)");
  CHECK(inv[0].exp == -1);
  CHECK(inv[2].name == "a1");
  CHECK(inv[2].exp == -1);
  CHECK(inverse_word(inv) == w);

  TwistWord back = word_from_json(word_to_json(w));
  CHECK(back == w);
  CHECK_THROWS_AS(word_from_json("{\"not\":\"a word\"}"), std::invalid_argument);
  CHECK_THROWS_AS(word_from_json("[[\"a1\",0]]"), std::invalid_argument);
}

TEST_CASE("braid words map to chain twists") {
  std::vector<std::string> chain{"a1", "a1'", "a2"};
  BraidWord b{4, {{1, 1}, {2, 1}, {1, -1}}};
  TwistWord w = braid_to_twists(b, chain);
  REQUIRE(w.size() == 3);
  CHECK(w[0].name == "a1");
  CHECK(w[1].name == "a1'");
  CHECK(w[2].name == "a1");
  CHECK(w[2].exp == -1);

  BraidWord bad{3, {{1, 1}}};
  CHECK_THROWS_AS(braid_to_twists(bad, chain), std::invalid_argument);
  BraidWord oob{4, {{4, 1}}};
  CHECK_THROWS_AS(braid_to_twists(oob, chain), std::invalid_argument);
}

TEST_CASE("verify_word on trivial and broken words") {
  Prototype p = build_prototype(7, {5, 7}, std::nullopt);
  CHECK(verify_word(p, {}, "b3", "b3"));
  CHECK_FALSE(verify_word(p, {}, "b3", "b4"));
  CHECK_THROWS_AS(verify_word(p, {}, "zz9", "b3"), std::invalid_argument);

  OneSidedWords os = one_sided_words(p, 1, 2);
  CHECK(verify_word(p, os.to_far, "b1", "b2"));
  TwistWord broken = os.to_far;
  broken.erase(broken.begin());
  CHECK_FALSE(verify_word(p, broken, "b1", "b2"));
}

TEST_CASE("one-sided words on both sides of the surface") {
  Prototype p = build_prototype(7, {5, 7}, std::nullopt);

  OneSidedWords low = one_sided_words(p, 1, 3);
  CHECK(verify_word(p, low.to_chain, "b1", "c(1,3)"));
  CHECK(verify_word(p, low.to_far, "b1", "b3"));
  CHECK(low.ga.size() + 1 == low.to_chain.size());
  CHECK(low.to_chain.back().name == "b3");

  OneSidedWords up = one_sided_words(p, 8, 9);
  CHECK(verify_word(p, up.to_chain, "b8", "c(5,6)"));
  CHECK(verify_word(p, up.to_far, "b8", "b9"));

  // wrap-around pair ending at index 1
  OneSidedWords wrap = one_sided_words(p, 12, 1);
  CHECK(verify_word(p, wrap.to_chain, "b12", "c(1,2)"));
  CHECK(verify_word(p, wrap.to_far, "b12", "b1"));

  CHECK_THROWS_AS(one_sided_words(p, 3, 8), std::invalid_argument);   // crosses g
  CHECK_THROWS_AS(one_sided_words(p, 3, 3), std::invalid_argument);
  CHECK_THROWS_AS(one_sided_words(p, 3, 12), std::invalid_argument);  // difference too large
}

TEST_CASE("crossing words over the special columns") {
  Prototype p = build_prototype(7, {5, 7}, std::nullopt);

  TwistWord mid = two_sided_words(p, 3, 8);  // crosses column g
  CHECK(verify_word(p, mid, "b3", "b8"));

  TwistWord low = two_sided_words(p, 11, 2);  // crosses column 1
  CHECK(verify_word(p, low, "b11", "b2"));

  CHECK_THROWS_AS(two_sided_words(p, 1, 3), std::invalid_argument);  // one-sided
  CHECK_THROWS_AS(three_sided_word(p, 3, 8), std::invalid_argument);
}

TEST_CASE("crossing words on the fused-handle labeling") {
  Prototype p = build_prototype(4, {2, 4}, Parity::Odd);
  REQUIRE(p.cs.lcase == LabelCase::Three);

  TwistWord mid = two_sided_words(p, 3, 5);  // crosses column g
  CHECK(verify_word(p, mid, "b3", "b5"));

  TwistWord outer = two_sided_words(p, 5, 1);  // crosses the last column
  CHECK(verify_word(p, outer, "b5", "b1"));

  // genus 4 with step <= 2 cannot wrap two special columns at once
  CHECK_THROWS_AS(three_sided_word(p, 5, 1), std::invalid_argument);
}

TEST_CASE("three-sided pass at genus 8") {
  Prototype p = build_prototype(8, {2, 6, 6}, Parity::Odd);
  REQUIRE(p.cs.lcase == LabelCase::Three);
  TwistWord w = three_sided_word(p, 11, 3);
  CHECK(verify_word(p, w, "b11", "b3"));
  CHECK_THROWS_AS(two_sided_words(p, 11, 3), std::invalid_argument);
}

TEST_CASE("chain boundary transport") {
  Prototype p = build_prototype(7, {5, 7}, std::nullopt);
  CHECK(cij_transport_word(p, 3, 5, 3, 5).empty());

  TwistWord w = cij_transport_word(p, 3, 5, 4, 6);
  CHECK(!w.empty());
  CHECK(verify_word(p, w, "c(3,5)", "c(4,6)"));

  TwistWord back = cij_transport_word(p, 4, 6, 2, 4);
  CHECK(verify_word(p, back, "c(4,6)", "c(2,4)"));

  CHECK_THROWS_AS(cij_transport_word(p, 3, 5, 3, 6), std::invalid_argument);
  CHECK_THROWS_AS(cij_transport_word(p, 0, 5, 2, 7), std::invalid_argument);
}

TEST_CASE("chain boundary transport across the fused handle") {
  Prototype p = build_prototype(4, {2, 4}, Parity::Odd);

  // 5-curve boundary to the plain chain boundary of the same length class
  TwistWord w = cij_transport_word(p, 1, 2, 2, 4);
  CHECK(verify_word(p, w, "c(1,2)", "c(2,4)"));

  TwistWord v = cij_transport_word(p, 1, 4, 2, 4);
  CHECK(verify_word(p, v, "c(1,4)", "c(2,4)"));

  TwistWord u = cij_transport_word(p, 2, 4, 1, 4);
  CHECK(verify_word(p, u, "c(2,4)", "c(1,4)"));

  // c(1,m) counts as an (m-2)-step boundary here, so this mismatches
  CHECK_THROWS_AS(cij_transport_word(p, 1, 3, 2, 4), std::invalid_argument);
}

TEST_CASE("heuristic words in all three known-pair modes") {
  Prototype p = build_prototype(7, {5, 7}, std::nullopt);

  TwistWord et = heuristic_word(p, 3, 5, 2, 4, KnownPair::EndTwists);
  CHECK(verify_word(p, et, "b3", "c(2,4)"));
  for (const auto& l : et) CHECK(l.name != "c(2,4)");

  TwistWord sb = heuristic_word(p, 3, 5, 2, 4, KnownPair::SourceAndBoundary);
  CHECK(verify_word(p, sb, "b3", "b5"));
  for (const auto& l : sb) CHECK(l.name != "b5");

  TwistWord tb = heuristic_word(p, 3, 5, 2, 4, KnownPair::TargetAndBoundary);
  CHECK(verify_word(p, tb, "b5", "b3"));

  // crossing pair, canonical boundary needs transport
  TwistWord sb2 = heuristic_word(p, 3, 8, 2, 7, KnownPair::SourceAndBoundary);
  CHECK(verify_word(p, sb2, "b3", "b8"));

  CHECK_THROWS_AS(heuristic_word(p, 3, 5, 1, 3, KnownPair::EndTwists),
                  std::invalid_argument);
  CHECK_THROWS_AS(heuristic_word(p, 3, 5, 2, 5, KnownPair::EndTwists),
                  std::invalid_argument);
  CHECK_THROWS_AS(heuristic_word(p, 3, 12, 2, 4, KnownPair::EndTwists),
                  std::invalid_argument);
}

TEST_CASE("addition and subtraction words act on twist generators only") {
  Prototype p = build_prototype(7, {5, 7}, std::nullopt);

  CHECK(addition_word(p, 3, 0).empty());
  CHECK(subtraction_word(p, 3, 0).empty());
  CHECK_THROWS_AS(addition_word(p, 3, 6), std::invalid_argument);
  CHECK_THROWS_AS(subtraction_word(p, 3, 6), std::invalid_argument);

  TwistWord add = addition_word(p, 3, 2);
  CHECK(verify_word(p, add, "b5", "b7"));
  for (const auto& l : add) {
    bool ok = l.name[0] == 'a' || l.name == "b3" || l.name == "b5";
    INFO("letter ", l.name);
    CHECK(ok);
  }

  TwistWord sub = subtraction_word(p, 3, 2);
  CHECK(verify_word(p, sub, "b5", "b3"));
  for (const auto& l : sub) {
    bool ok = l.name[0] == 'a' || l.name == "b5" || l.name == "b7";
    INFO("letter ", l.name);
    CHECK(ok);
  }
}

TEST_CASE("trace preconditions") {
  CHECK_THROWS_AS(euclidean_trace({3, 6, 6}, Parity::Odd), std::invalid_argument);
  CHECK_THROWS_AS(euclidean_trace({4, 2}, std::nullopt), std::invalid_argument);
  CHECK_THROWS_AS(euclidean_trace({2, 2}, Parity::Even), std::domain_error);   // genus 3
  CHECK_THROWS_AS(euclidean_trace({6}, Parity::Even), std::domain_error);      // gcd 2g-2
  CHECK_THROWS_AS(euclidean_trace({3, 3}, std::nullopt), std::domain_error);   // gcd g-1
  // spin must match the gcd parity
  CHECK_THROWS_AS(euclidean_trace({5, 7}, Parity::Even), std::invalid_argument);
  CHECK_THROWS_AS(euclidean_trace({2, 4}, std::nullopt), std::invalid_argument);
}

TEST_CASE("trace for (5,7) reproduces the index recurrences") {
  EuclideanTrace tr = euclidean_trace({5, 7}, std::nullopt);
  CHECK(tr.g == 7);
  CHECK(tr.r_final == 1);
  REQUIRE(tr.stages.size() == 1);
  const EuclidStage& st = tr.stages[0];
  CHECK(st.rj == 5);
  CHECK(st.dj == 1);
  CHECK(st.k_next == 7);
  CHECK(st.Q == std::vector<long long>{1, 2, 2});
  CHECK(st.R == std::vector<long long>{2, 1, 0});
  CHECK(st.y == std::vector<long long>{8, 13, 9, 11});
  CHECK(st.yp == std::vector<long long>{15, 8, 11, 10});

  std::vector<int> all(12);
  for (int t = 1; t <= 12; ++t) all[static_cast<size_t>(t) - 1] = t;
  CHECK(tr.targets == all);

  Prototype p = build_prototype(7, {5, 7}, std::nullopt);
  check_certificates(p, tr);

  // tampering with any certificate word must break verification
  for (const auto& c : tr.certificates) {
    if (c.word.size() < 2) continue;
    TwistWord bad = c.word;
    bad.erase(bad.begin() + static_cast<long>(bad.size() / 2));
    CHECK_FALSE(verify_word(p, bad, c.source, c.target));
    break;
  }
}

TEST_CASE("trace for (2,4) odd ends at the two-step residue class") {
  EuclideanTrace tr = euclidean_trace({2, 4}, Parity::Odd);
  CHECK(tr.g == 4);
  CHECK(tr.r_final == 2);
  REQUIRE(tr.stages.size() == 1);
  const EuclidStage& st = tr.stages[0];
  CHECK(st.Q == std::vector<long long>{2});
  CHECK(st.R == std::vector<long long>{0});
  CHECK(st.y == std::vector<long long>{5, 9});
  CHECK(st.yp == std::vector<long long>{9, 7});
  CHECK(tr.targets == std::vector<int>{1, 3, 5});

  Prototype p = build_prototype(4, {2, 4}, Parity::Odd);
  check_certificates(p, tr);
}

TEST_CASE("trace for (2,4) even uses the split labeling") {
  EuclideanTrace tr = euclidean_trace({2, 4}, Parity::Even);
  CHECK(tr.targets == std::vector<int>{1, 3, 5});
  Prototype p = build_prototype(4, {2, 4}, Parity::Even);
  REQUIRE(p.cs.lcase == LabelCase::OneTwo);
  check_certificates(p, tr);
}

TEST_CASE("trace for (2,6,6) runs two stages for both spins") {
  for (Parity s : {Parity::Even, Parity::Odd}) {
    CAPTURE(static_cast<int>(s));
    EuclideanTrace tr = euclidean_trace({2, 6, 6}, s);
    CHECK(tr.g == 8);
    CHECK(tr.r_final == 2);
    REQUIRE(tr.stages.size() == 2);
    CHECK(tr.stages[0].rj == 2);
    CHECK(tr.stages[0].Q == std::vector<long long>{3});
    CHECK(tr.stages[1].rj == 2);
    CHECK(tr.stages[1].y == std::vector<long long>{11, 17});
    CHECK(tr.targets == std::vector<int>{1, 3, 5, 7, 9, 11, 13});
    Prototype p = build_prototype(8, {2, 6, 6}, s);
    check_certificates(p, tr);
  }
}

TEST_CASE("uniform partitions certify their seed indices with empty words") {
  EuclideanTrace tr = euclidean_trace({2, 2, 2}, Parity::Odd);
  CHECK(tr.stages.empty());
  CHECK(tr.targets == std::vector<int>{1, 3, 5});
  for (const auto& c : tr.certificates) {
    CHECK(c.word.empty());
    CHECK(c.target == c.source);
  }
  CHECK(tr.certificates.size() == 3);
}

TEST_CASE("trace json carries stages and certificates") {
  EuclideanTrace tr = euclidean_trace({2, 4}, Parity::Odd);
  nlohmann::json j = nlohmann::json::parse(trace_to_json(tr));
  CHECK(j["g"] == 4);
  CHECK(j["r"] == 2);
  CHECK(j["spin"] == "odd");
  CHECK(j["stages"].size() == 1);
  CHECK(j["stages"][0]["Q"] == nlohmann::json::array({2}));
  CHECK(j["targets"] == nlohmann::json::array({1, 3, 5}));
  REQUIRE(j["certificates"].is_array());
  for (const auto& c : j["certificates"]) {
    CHECK(c.contains("target"));
    CHECK(c.contains("source"));
    CHECK(c["word"].is_array());
  }
  EuclideanTrace none = euclidean_trace({5, 7}, std::nullopt);
  nlohmann::json j2 = nlohmann::json::parse(trace_to_json(none));
  CHECK(j2["spin"].is_null());
}

TEST_CASE("twist words linearize to symplectic matrices") {
  Prototype p = build_prototype(3, {2, 2}, Parity::Even);
  const size_t n = 6;

  SymplecticMatrix id = symplectic_of(p, {});
  CHECK(id.g == 3);
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b) CHECK(id.rows[a][b] == (a == b ? 1 : 0));

  // A single transvection along a basis curve is elementary: it adds the
  // pairing with the curve onto the curve's own coordinate line.
  std::vector<long long> a1 = homology_coords(p, realize_on_prototype(p, "a1"));
  std::vector<long long> b1 = homology_coords(p, realize_on_prototype(p, "b1"));
  SymplecticMatrix ta1 = symplectic_of(p, {{"a1", 1}});
  std::vector<long long> moved = ta1.apply(b1);
  long long s = symplectic_pairing(b1, a1);
  CHECK((s == 1 || s == -1));
  for (size_t k = 0; k < n; ++k) CHECK(moved[k] == b1[k] + s * a1[k]);
  // It fixes everything the curve misses.
  std::vector<long long> a2 = homology_coords(p, realize_on_prototype(p, "a2"));
  CHECK(ta1.apply(a2) == a2);

  // Once-meeting pair: the braid relation holds at the matrix level.
  SymplecticMatrix lhs = symplectic_of(p, {{"a1", 1}, {"a1'", 1}, {"a1", 1}});
  SymplecticMatrix rhs = symplectic_of(p, {{"a1'", 1}, {"a1", 1}, {"a1'", 1}});
  bool braid = lhs == rhs;
  CHECK(braid);

  // Disjoint pair: the transvections commute.
  SymplecticMatrix ab = symplectic_of(p, {{"a1", 1}, {"a2", 1}});
  SymplecticMatrix ba = symplectic_of(p, {{"a2", 1}, {"a1", 1}});
  bool commute = ab == ba;
  CHECK(commute);

  // Inverse letters cancel.
  SymplecticMatrix cancel = symplectic_of(p, {{"b1", 1}, {"b1", -1}});
  bool trivial = cancel == id;
  CHECK(trivial);
}

TEST_CASE("index shift words act on homology as advertised") {
  Prototype p = build_prototype(7, {5, 7}, std::nullopt);
  TwistWord add = addition_word(p, 3, 2);
  SymplecticMatrix m = symplectic_of(p, add);
  std::vector<long long> b5 = homology_coords(p, realize_on_prototype(p, "b5"));
  std::vector<long long> b7 = homology_coords(p, realize_on_prototype(p, "b7"));
  std::vector<long long> out = m.apply(b5);
  std::vector<long long> neg(out.size());
  for (size_t k = 0; k < out.size(); ++k) neg[k] = -out[k];
  bool hits = (out == b7) || (neg == b7);
  CHECK(hits);
}

TEST_CASE("quadratic form preservation separates admissible twists") {
  Prototype p = build_prototype(3, {2, 2}, Parity::Even);
  SpinStructure q = induced_spin(p, 2);

  SymplecticMatrix id = symplectic_of(p, {});
  CHECK(preserves_quadratic_form(id, q));

  // Transvections along network curves preserve the induced form.
  for (const std::string& name : network_curves(p)) {
    SymplecticMatrix m = symplectic_of(p, {{name, 1}});
    CHECK(preserves_quadratic_form(m, q));
  }

  // A transvection along a class with q = 0 shears the form.
  bool found_breaker = false;
  std::vector<long long> x(6, 0);
  while (true) {
    size_t k = 0;
    while (k < 6 && ++x[k] == 2) x[k++] = 0;
    if (k == 6) break;
    if (q_value(q, x) != 0) continue;
    // Build the elementary transvection along x by hand.
    SymplecticMatrix m;
    m.g = 3;
    m.rows.assign(6, std::vector<long long>(6, 0));
    for (size_t a = 0; a < 6; ++a) m.rows[a][a] = 1;
    for (size_t a = 0; a < 6; ++a)
      for (size_t b = 0; b < 6; ++b) {
        long long omega = (b < 3) ? -x[b + 3] : x[b - 3];
        m.rows[a][b] += x[a] * omega;
      }
    if (!preserves_quadratic_form(m, q)) {
      found_breaker = true;
      break;
    }
  }
  CHECK(found_breaker);

  SpinStructure odd_r{3, 3, std::vector<int>(6, 0)};
  CHECK_THROWS_AS(preserves_quadratic_form(id, odd_r), std::invalid_argument);
}
