#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "strata/origami.hpp"
#include "strata/winding.hpp"

using namespace strata;

namespace {

Origami torus() { return make_origami({0}, {0}); }
Origami ell() { return make_origami({1, 0, 2}, {2, 1, 0}); }

}  // namespace

TEST_CASE("octant table") {
  CHECK(octant(Side::L, Side::R) == 0);
  CHECK(octant(Side::B, Side::R) == 1);
  CHECK(octant(Side::L, Side::T) == 1);
  CHECK(octant(Side::B, Side::T) == 2);
  CHECK(octant(Side::R, Side::T) == 3);
  CHECK(octant(Side::B, Side::L) == 3);
  CHECK(octant(Side::R, Side::L) == 4);
  CHECK(octant(Side::R, Side::B) == 5);
  CHECK(octant(Side::T, Side::L) == 5);
  CHECK(octant(Side::T, Side::B) == 6);
  CHECK(octant(Side::L, Side::B) == 7);
  CHECK(octant(Side::T, Side::R) == 7);
  CHECK_THROWS_AS(octant(Side::L, Side::L), std::invalid_argument);
}

TEST_CASE("path validation enforces the edge gluings") {
  Origami t = torus();
  CHECK_NOTHROW(validate_path(t, {{0, Side::L, Side::R}}));
  CHECK_NOTHROW(validate_path(t, {{0, Side::B, Side::T}}));
  // Leaving through the top re-enters through the bottom, not the left.
  CHECK_THROWS_AS(validate_path(t, {{0, Side::T, Side::B}, {0, Side::L, Side::R}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(validate_path(t, {{0, Side::L, Side::L}}), std::invalid_argument);
  Origami o = ell();
  // Right of square 0 is square 1.
  CHECK_NOTHROW(validate_path(o, {{0, Side::L, Side::R}, {1, Side::L, Side::R}}));
  CHECK_THROWS_AS(validate_path(o, {{0, Side::L, Side::R}, {2, Side::L, Side::R}}),
                  std::invalid_argument);
}

TEST_CASE("core curves have turning number zero") {
  Origami t = torus();
  CHECK(turning_number(t, {{0, Side::L, Side::R}}) == 0);
  CHECK(turning_number(t, {{0, Side::B, Side::T}}) == 0);
  Origami o = ell();
  CHECK(turning_number(o, {{0, Side::L, Side::R}, {1, Side::L, Side::R}}) == 0);
  CHECK(turning_number(o, {{0, Side::B, Side::T}, {2, Side::B, Side::T}}) == 0);
  CHECK(wn_mod(o, {{2, Side::L, Side::R}}, 5) == 0);
}

TEST_CASE("loops around vertices count the cone angle") {
  Origami t = torus();
  CurvePath quad = loop_around_vertex(t, {0, CornerKind::TR}, true);
  CHECK(quad.size() == 4);
  CHECK(turning_number(t, quad) == 1);
  CHECK(turning_number(t, loop_around_vertex(t, {0, CornerKind::TR}, false)) == -1);

  // Order-2 cone point: counterclockwise loop turns k + 1 = 3 times.
  Origami o = ell();
  CurvePath loop = loop_around_vertex(o, {1, CornerKind::BL}, true);
  CHECK(loop.size() == 12);
  CHECK(turning_number(o, loop) == 3);
  CHECK(turning_number(o, loop_around_vertex(o, {1, CornerKind::BL}, false)) == -3);
  CHECK(wn_mod(o, loop, 2) == 1);
}

TEST_CASE("wall crossing counts") {
  Origami o = ell();
  CurvePath horiz = {{0, Side::L, Side::R}, {1, Side::L, Side::R}};
  CurvePath vert = {{0, Side::B, Side::T}, {2, Side::B, Side::T}};
  // Crossings of the vertical wall right of square 0.
  CHECK(vwall_cross(o, horiz, {0}) == 1);
  CHECK(vwall_cross(o, vert, {0}) == 0);
  // Crossings of the horizontal wall above the row of square 0.
  CHECK(hwall_cross(o, vert, {0}) == 1);
  CHECK(hwall_cross(o, horiz, {0}) == 0);
  // Orientation: the reversed curve counts negatively.
  CurvePath down = {{2, Side::T, Side::B}, {0, Side::T, Side::B}};
  CHECK(hwall_cross(o, down, {0}) == -1);
}

TEST_CASE("path json round trip") {
  CurvePath p = {{0, Side::B, Side::T}, {2, Side::B, Side::T}};
  auto j = path_to_json(p);
  CHECK(j.size() == 2);
  CHECK(j[0].at("in") == "B");
  CHECK(path_from_json(j) == p);
}

TEST_CASE("twisting reroutes transversal runs around the cylinder") {
  Origami o = ell();
  auto horiz = cylinders(o, Direction::Horizontal);
  const Cylinder& cyl = horiz[0].width == 2 ? horiz[0] : horiz[1];
  REQUIRE(cyl.width == 2);
  CurvePath vert = {{2, Side::B, Side::T}, {0, Side::B, Side::T}};

  CurvePath right = twist_path(o, vert, cyl, +1);
  CurvePath want_right = {{2, Side::B, Side::T},
                          {0, Side::B, Side::R},
                          {1, Side::L, Side::R},
                          {0, Side::L, Side::T}};
  CHECK(right == want_right);
  CHECK(turning_number(o, right) == turning_number(o, vert));

  CurvePath left = twist_path(o, vert, cyl, -1);
  CurvePath want_left = {{2, Side::B, Side::T},
                         {0, Side::B, Side::L},
                         {1, Side::R, Side::L},
                         {0, Side::R, Side::T}};
  CHECK(left == want_left);

  // Twisting a disjoint curve does nothing.
  CurvePath other = {{2, Side::L, Side::R}};
  CHECK(twist_path(o, other, cyl, +1) == other);

  const Cylinder& tall = horiz[0].width == 2 ? horiz[1] : horiz[0];
  Cylinder fake = tall;
  fake.rows.push_back(tall.rows[0]);
  CHECK_THROWS_AS(twist_path(o, vert, fake, +1), std::invalid_argument);
  CHECK_THROWS_AS(twist_path(o, vert, cyl, 2), std::invalid_argument);
}
