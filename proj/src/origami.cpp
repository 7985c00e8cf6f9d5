#include "strata/origami.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "json.hpp"

namespace strata {

Perm::Perm(std::vector<int> images) : fwd_(std::move(images)) {
  const int n = static_cast<int>(fwd_.size());
  bwd_.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    if (fwd_[i] < 0 || fwd_[i] >= n || bwd_[fwd_[i]] != -1)
      throw std::invalid_argument("not a permutation");
    bwd_[fwd_[i]] = i;
  }
}

Perm Perm::identity(int n) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 0);
  return Perm(im);
}

Perm Perm::inverse() const {
  Perm p;
  p.fwd_ = bwd_;
  p.bwd_ = fwd_;
  return p;
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.size() != b.size()) throw std::invalid_argument("size mismatch");
  std::vector<int> im(a.size());
  for (int i = 0; i < a.size(); ++i) im[i] = a(b(i));
  return Perm(std::move(im));
}

std::vector<std::vector<int>> Perm::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(fwd_.size(), 0);
  for (int i = 0; i < size(); ++i) {
    if (seen[i]) continue;
    std::vector<int> cyc;
    for (int j = i; !seen[j]; j = fwd_[j]) {
      seen[j] = 1;
      cyc.push_back(j);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

Origami make_origami(std::vector<int> h, std::vector<int> v) {
  if (h.size() != v.size()) throw std::invalid_argument("h/v size mismatch");
  Origami o;
  o.n = static_cast<int>(h.size());
  if (o.n == 0) throw std::invalid_argument("empty origami");
  o.h = Perm(std::move(h));
  o.v = Perm(std::move(v));
  return o;
}

bool is_connected(const Origami& o) {
  std::vector<char> seen(o.n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int s = stack.back();
    stack.pop_back();
    for (int t : {o.h(s), o.h.inv(s), o.v(s), o.v.inv(s)}) {
      if (!seen[t]) {
        seen[t] = 1;
        ++count;
        stack.push_back(t);
      }
    }
  }
  return count == o.n;
}

std::vector<std::vector<int>> vertex_cycles(const Origami& o) {
  // K = v . h . v^-1 . h^-1 acting on squares (bottom-left corners).
  std::vector<int> im(o.n);
  for (int s = 0; s < o.n; ++s) im[s] = o.v(o.h(o.v.inv(o.h.inv(s))));
  return Perm(std::move(im)).cycles();
}

std::vector<int> singularity_profile(const Origami& o) {
  std::vector<int> orders;
  for (const auto& cyc : vertex_cycles(o)) {
    const int k = static_cast<int>(cyc.size()) - 1;
    if (k > 0) orders.push_back(k);
  }
  std::sort(orders.begin(), orders.end());
  return orders;
}

int genus(const Origami& o) {
  if (!is_connected(o)) throw std::invalid_argument("disconnected origami");
  const auto prof = singularity_profile(o);
  const int total = std::accumulate(prof.begin(), prof.end(), 0);
  if (total % 2 != 0) throw std::logic_error("odd zero-order sum");
  return total / 2 + 1;
}

Corner ccw_next(const Origami& o, Corner c) {
  switch (c.kind) {
    case CornerKind::TR:
      return {o.h(c.sq), CornerKind::TL};
    case CornerKind::TL:
      return {o.v(c.sq), CornerKind::BL};
    case CornerKind::BL:
      return {o.h.inv(c.sq), CornerKind::BR};
    case CornerKind::BR:
      return {o.v.inv(c.sq), CornerKind::TR};
  }
  throw std::logic_error("bad corner");
}

Corner cw_next(const Origami& o, Corner c) {
  switch (c.kind) {
    case CornerKind::TR:
      return {o.v(c.sq), CornerKind::BR};
    case CornerKind::BR:
      return {o.h(c.sq), CornerKind::BL};
    case CornerKind::BL:
      return {o.v.inv(c.sq), CornerKind::TL};
    case CornerKind::TL:
      return {o.h.inv(c.sq), CornerKind::TR};
  }
  throw std::logic_error("bad corner");
}

std::vector<Corner> sectors_around(const Origami& o, Corner c) {
  std::vector<Corner> out{c};
  for (Corner cur = ccw_next(o, c); !(cur == c); cur = ccw_next(o, cur))
    out.push_back(cur);
  return out;
}

namespace {

// True when no cone point lies on the interface between row and the row
// above it: every top-edge vertex of the row is regular. The vertex at the
// top-right corner of s is regular iff its sector count is 4.
bool seam_above_is_regular(const Origami& o, const std::vector<int>& row) {
  for (int s : row)
    if (sectors_around(o, {s, CornerKind::TR}).size() != 4) return false;
  return true;
}

std::vector<Cylinder> horizontal_cylinders(const Origami& o) {
  auto rows = o.h.cycles();
  // Row containing each square, and each row ordered along h.
  std::vector<int> row_of(o.n, -1);
  for (size_t i = 0; i < rows.size(); ++i)
    for (int s : rows[i]) row_of[s] = static_cast<int>(i);

  std::vector<char> used(rows.size(), 0);
  std::vector<Cylinder> out;
  for (size_t i = 0; i < rows.size(); ++i) {
    if (used[i]) continue;
    // Grow downward to the bottom of the maximal stack, then collect upward.
    size_t bottom = i;
    while (true) {
      const std::vector<int>& brow = rows[bottom];
      size_t below = row_of[o.v.inv(brow[0])];
      if (below == i && bottom != i) break;  // wrapped around the stack
      if (!seam_above_is_regular(o, rows[below])) break;
      if (below == bottom) break;  // self-glued torus row
      bottom = below;
      if (bottom == i) break;  // full wrap: every seam regular
    }
    Cylinder cyl;
    cyl.dir = Direction::Horizontal;
    cyl.width = static_cast<int>(rows[bottom].size());
    size_t cur = bottom;
    while (true) {
      used[cur] = 1;
      // Order the row starting from the square above the previous row's
      // first square so that vertically aligned squares line up.
      std::vector<int> ordered;
      int start = cyl.rows.empty() ? rows[cur][0] : o.v(cyl.rows.back()[0]);
      for (int s = start, k = 0; k < cyl.width; s = o.h(s), ++k)
        ordered.push_back(s);
      cyl.rows.push_back(std::move(ordered));
      if (!seam_above_is_regular(o, rows[cur])) break;
      size_t above = row_of[o.v(rows[cur][0])];
      if (above == cur || used[above]) break;
      cur = above;
    }
    out.push_back(std::move(cyl));
  }
  return out;
}

// Rotate the square complex a quarter turn clockwise: up becomes right.
Origami rotated_cw(const Origami& o) {
  Origami r;
  r.n = o.n;
  r.h = o.v;
  r.v = o.h.inverse();
  return r;
}

}  // namespace

std::vector<Cylinder> cylinders(const Origami& o, Direction dir) {
  if (dir == Direction::Horizontal) return horizontal_cylinders(o);
  auto cyls = horizontal_cylinders(rotated_cw(o));
  for (auto& c : cyls) c.dir = Direction::Vertical;
  return cyls;
}

std::vector<Cylinder> all_cylinders(const Origami& o) {
  auto out = cylinders(o, Direction::Horizontal);
  auto vert = cylinders(o, Direction::Vertical);
  out.insert(out.end(), vert.begin(), vert.end());
  return out;
}

ShearResult shear_cylinder(const Origami& o, const Cylinder& cyl) {
  // A full-period shear displaces the top interface by the circumference,
  // which reglues every seam identically: the tiling is unchanged and the
  // marking absorbs one inverse twist about the core.
  return ShearResult{o, cyl, -1};
}

std::optional<std::vector<int>> isomorphism(const Origami& a, const Origami& b) {
  if (a.n != b.n) return std::nullopt;
  if (a.n == 0) return std::vector<int>{};
  // A relabeling intertwining both permutations is determined by the image
  // of one square of each connected component; origamis here are connected,
  // so anchor square 0 of a at every square of b and propagate.
  for (int anchor = 0; anchor < b.n; ++anchor) {
    std::vector<int> pi(a.n, -1);
    std::vector<char> hit(b.n, 0);
    pi[0] = anchor;
    hit[anchor] = 1;
    std::vector<int> stack{0};
    bool ok = true;
    while (ok && !stack.empty()) {
      int s = stack.back();
      stack.pop_back();
      const std::pair<int, int> moves[] = {
          {a.h(s), b.h(pi[s])},
          {a.h.inv(s), b.h.inv(pi[s])},
          {a.v(s), b.v(pi[s])},
          {a.v.inv(s), b.v.inv(pi[s])},
      };
      for (auto [sa, sb] : moves) {
        if (pi[sa] == -1) {
          if (hit[sb]) {
            ok = false;
            break;
          }
          pi[sa] = sb;
          hit[sb] = 1;
          stack.push_back(sa);
        } else if (pi[sa] != sb) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) continue;
    if (std::count(pi.begin(), pi.end(), -1) != 0) continue;  // disconnected a
    return pi;
  }
  return std::nullopt;
}

std::string origami_to_json(const Origami& o) {
  nlohmann::json j;
  j["n"] = o.n;
  j["h"] = o.h.images();
  j["v"] = o.v.images();
  return j.dump();
}

Origami origami_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (!j.is_object() || !j.contains("n") || !j.contains("h") || !j.contains("v"))
    throw std::invalid_argument("origami json needs n, h, v");
  auto h = j.at("h").get<std::vector<int>>();
  auto v = j.at("v").get<std::vector<int>>();
  if (static_cast<int>(h.size()) != j.at("n").get<int>())
    throw std::invalid_argument("origami json: n mismatch");
  return make_origami(std::move(h), std::move(v));
}

}  // namespace strata
