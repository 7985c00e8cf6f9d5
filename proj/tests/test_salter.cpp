#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "strata/curve_system.hpp"
#include "strata/geometry.hpp"
#include "strata/salter.hpp"
#include "strata/winding.hpp"

using namespace strata;

namespace {

Prototype uniform_proto(int g, int r, std::optional<Parity> spin) {
  std::vector<int> kappa((2 * g - 2) / r, r);
  return build_prototype(g, kappa, spin);
}

}  // namespace

TEST_CASE("guard rejects unsupported moduli and small genus") {
  Prototype tight = build_prototype(5, {4, 4}, Parity::Odd);
  CHECK_THROWS_AS(salter_conditions_check(tight, 4), std::invalid_argument);

  Prototype small = uniform_proto(4, 1, std::nullopt);
  CHECK_THROWS_AS(salter_conditions_check(small, 1), std::invalid_argument);

  Prototype p = uniform_proto(5, 1, std::nullopt);
  CHECK_THROWS_AS(salter_conditions_check(p, 2), std::invalid_argument);
  CHECK_THROWS_AS(salter_conditions_check(p, 0), std::invalid_argument);
}

TEST_CASE("split labeling fails the cut condition until the auxiliary curve is added") {
  Prototype p = uniform_proto(5, 1, std::nullopt);
  REQUIRE(p.cs.lcase == LabelCase::OneTwo);

  SalterReport bare = salter_conditions_check(p, 1);
  CHECK(bare.network_filling);
  CHECK(bare.vanishing);
  CHECK(bare.d_configuration);
  CHECK(bare.meets_delta);
  CHECK_FALSE(bare.cut_filling);
  CHECK_FALSE(bare.pass());
  CHECK(bare.delta == "b2");
  CHECK(bare.delta_witness == "a2");
  CHECK(bare.companion == "b4");
  CHECK(bare.config_names.size() == 5);

  ExtraCurve aux = braided_auxiliary_curve(p);
  std::vector<ExtraCurve> extras = {aux};
  SalterReport full = salter_conditions_check(p, 1, extras);
  CHECK(full.auxiliary_added);
  CHECK(full.cut_filling);
  CHECK(full.pass());
  CHECK(full.genus_ok);
}

TEST_CASE("auxiliary curve meets the chain only in a1' and the far column") {
  Prototype p = uniform_proto(5, 1, std::nullopt);
  ExtraCurve aux = braided_auxiliary_curve(p);
  auto meets = [&](const std::string& name) {
    CurvePath q = realize_on_prototype(p, name);
    return reduced_crossing_count(aux.path, q);
  };
  CHECK(meets("a1'") == 1);
  CHECK(meets("a4'") == 1);  // g - r = 4
  CHECK(meets("a1") == 0);
  CHECK(meets("a2") == 0);
  CHECK(meets("a2'") == 0);
  CHECK(meets("a3") == 0);
  CHECK(meets("a5") == 0);
  CHECK(meets("b2") == 0);
  CHECK(meets("b3") == 0);
}

TEST_CASE("fused labeling passes without help") {
  Prototype p = uniform_proto(5, 2, Parity::Even);
  REQUIRE(p.cs.lcase == LabelCase::Three);

  SalterReport rep = salter_conditions_check(p, 2);
  CHECK(rep.network_filling);
  CHECK(rep.vanishing);
  CHECK(rep.d_configuration);
  CHECK(rep.meets_delta);
  CHECK(rep.cut_filling);
  CHECK(rep.pass());
  CHECK_FALSE(rep.auxiliary_added);
  CHECK(rep.companion == "b5");
  CHECK(rep.config_names.size() == 7);
  CHECK(rep.genus_floor == 5);

  CHECK_THROWS_AS(braided_auxiliary_curve(p), std::invalid_argument);
}

TEST_CASE("split labeling with even modulus also repairs via the auxiliary curve") {
  Prototype p = uniform_proto(5, 2, Parity::Odd);
  REQUIRE(p.cs.lcase == LabelCase::OneTwo);

  SalterReport bare = salter_conditions_check(p, 2);
  CHECK(bare.vanishing);
  CHECK(bare.d_configuration);
  CHECK_FALSE(bare.cut_filling);

  ExtraCurve aux = braided_auxiliary_curve(p);
  int w = wn_mod(p.o, aux.path, 2);
  CHECK(w == 0);
  CurvePath far = realize_on_prototype(p, "a3'");  // g - r = 3
  int far_count = reduced_crossing_count(aux.path, far);
  CHECK(far_count == 1);

  std::vector<ExtraCurve> extras = {aux};
  SalterReport full = salter_conditions_check(p, 2, extras);
  CHECK(full.pass());
}

TEST_CASE("report serialization carries the verdict and witnesses") {
  Prototype p = uniform_proto(5, 1, std::nullopt);
  ExtraCurve aux = braided_auxiliary_curve(p);
  std::vector<ExtraCurve> extras = {aux};
  SalterReport rep = salter_conditions_check(p, 1, extras);
  std::string j = salter_report_to_json(rep);
  CHECK(j.find("\"pass\"") != std::string::npos);
  CHECK(j.find("\"cut_network\"") != std::string::npos);
  CHECK(j.find("\"one-two\"") != std::string::npos);
  CHECK(j.find("\"b4\"") != std::string::npos);
}
