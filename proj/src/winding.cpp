#include "strata/winding.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace strata {

using nlohmann::json;

char side_char(Side s) {
  switch (s) {
    case Side::L: return 'L';
    case Side::R: return 'R';
    case Side::B: return 'B';
    case Side::T: return 'T';
  }
  throw std::invalid_argument("bad side");
}

Side side_from_char(char c) {
  switch (c) {
    case 'L': return Side::L;
    case 'R': return Side::R;
    case 'B': return Side::B;
    case 'T': return Side::T;
    default: throw std::invalid_argument(std::string("bad side letter: ") + c);
  }
}

void validate_path(const Origami& o, const CurvePath& p) {
  if (p.empty()) throw std::invalid_argument("empty path");
  for (const Step& st : p) {
    if (st.sq < 0 || st.sq >= o.n) throw std::invalid_argument("step square out of range");
    if (st.in == st.out) throw std::invalid_argument("step enters and leaves the same side");
  }
  for (size_t i = 0; i < p.size(); ++i) {
    const Step& a = p[i];
    const Step& b = p[(i + 1) % p.size()];
    int expect_sq;
    Side expect_in;
    switch (a.out) {
      case Side::R: expect_sq = o.right(a.sq); expect_in = Side::L; break;
      case Side::L: expect_sq = o.left(a.sq); expect_in = Side::R; break;
      case Side::T: expect_sq = o.up(a.sq); expect_in = Side::B; break;
      case Side::B: expect_sq = o.down(a.sq); expect_in = Side::T; break;
      default: throw std::invalid_argument("bad side");
    }
    if (b.sq != expect_sq || b.in != expect_in)
      throw std::invalid_argument("steps " + std::to_string(i) + " -> " +
                                  std::to_string((i + 1) % p.size()) +
                                  " do not match across the gluing");
  }
}

int octant(Side in, Side out) {
  if (in == out) throw std::invalid_argument("step enters and leaves the same side");
  auto key = [](Side a, Side b) { return static_cast<int>(a) * 4 + static_cast<int>(b); };
  switch (key(in, out)) {
    case 0 * 4 + 1: return 0;  // L->R  E
    case 2 * 4 + 1: return 1;  // B->R  NE
    case 0 * 4 + 3: return 1;  // L->T  NE
    case 2 * 4 + 3: return 2;  // B->T  N
    case 1 * 4 + 3: return 3;  // R->T  NW
    case 2 * 4 + 0: return 3;  // B->L  NW
    case 1 * 4 + 0: return 4;  // R->L  W
    case 1 * 4 + 2: return 5;  // R->B  SW
    case 3 * 4 + 0: return 5;  // T->L  SW
    case 3 * 4 + 2: return 6;  // T->B  S
    case 0 * 4 + 2: return 7;  // L->B  SE
    case 3 * 4 + 1: return 7;  // T->R  SE
    default: throw std::invalid_argument("bad side pair");
  }
}

int turning_number(const CurvePath& p) {
  if (p.empty()) throw std::invalid_argument("empty path");
  long long eighths = 0;
  int prev = octant(p.back().in, p.back().out);
  for (const Step& st : p) {
    int cur = octant(st.in, st.out);
    int d = ((cur - prev) % 8 + 8) % 8;  // 0..7
    if (d > 4) d -= 8;                   // -3..4
    if (d == 4)
      throw std::invalid_argument("u-turn between consecutive steps (octant jump of 4)");
    eighths += d;
    prev = cur;
  }
  if (eighths % 8 != 0) throw std::logic_error("closed path turning not a multiple of 8 eighths");
  return static_cast<int>(eighths / 8);
}

int wn_mod(const Origami& o, const CurvePath& p, int r) {
  if (r <= 0) throw std::invalid_argument("modulus must be positive");
  validate_path(o, p);
  int t = turning_number(p) % r;
  return (t % r + r) % r;
}

std::string path_to_json(const CurvePath& p) {
  json arr = json::array();
  for (const Step& st : p)
    arr.push_back({{"sq", st.sq},
                   {"in", std::string(1, side_char(st.in))},
                   {"out", std::string(1, side_char(st.out))}});
  return arr.dump();
}

CurvePath path_from_json(const std::string& text) {
  json arr = json::parse(text);
  if (!arr.is_array()) throw std::invalid_argument("path JSON must be an array");
  CurvePath p;
  for (const auto& e : arr) {
    std::string in = e.at("in").get<std::string>();
    std::string out = e.at("out").get<std::string>();
    if (in.size() != 1 || out.size() != 1)
      throw std::invalid_argument("side must be a single letter");
    p.push_back({e.at("sq").get<int>(), side_from_char(in[0]), side_from_char(out[0])});
  }
  return p;
}

int vwall_cross(const Origami& o, const CurvePath& p, const std::vector<int>& squares) {
  std::vector<char> left(o.n, 0), right(o.n, 0);
  for (int s : squares) {
    left.at(s) = 1;            // crossing exits R of s
    right.at(o.right(s)) = 1;  // or exits L of h(s)
  }
  int c = 0;
  for (const Step& st : p) {
    if (st.out == Side::R && left[st.sq]) ++c;
    if (st.out == Side::L && right[st.sq]) --c;
  }
  return c;
}

int hwall_cross(const Origami& o, const CurvePath& p, const std::vector<int>& squares) {
  std::vector<char> below(o.n, 0), above(o.n, 0);
  for (int s : squares) {
    below.at(s) = 1;         // crossing exits T of s
    above.at(o.up(s)) = 1;   // or exits B of v(s)
  }
  int c = 0;
  for (const Step& st : p) {
    if (st.out == Side::T && below[st.sq]) ++c;
    if (st.out == Side::B && above[st.sq]) --c;
  }
  return c;
}

Step corner_chord(Corner c) {
  switch (c.kind) {
    case CornerKind::TR: return {c.sq, Side::T, Side::R};
    case CornerKind::TL: return {c.sq, Side::L, Side::T};
    case CornerKind::BL: return {c.sq, Side::B, Side::L};
    case CornerKind::BR: return {c.sq, Side::R, Side::B};
  }
  throw std::invalid_argument("bad corner");
}

CurvePath loop_around_vertex(const Origami& o, Corner c, bool ccw) {
  std::vector<Corner> secs = sectors_around(o, c);
  CurvePath p;
  for (const Corner& s : secs) p.push_back(corner_chord(s));
  if (!ccw) {
    std::reverse(p.begin(), p.end());
    for (Step& st : p) std::swap(st.in, st.out);
  }
  validate_path(o, p);
  return p;
}

namespace {

// One full loop of transit steps around a height-1 cylinder, starting and
// ending at `start`: the returned steps begin with the step that leaves
// `start` rerouted into the loop and end entering `start` again. dir_pos is
// true for the positive core direction (E for horizontal, N for vertical).
// in0/out_last are the entry side of the first step and nothing else.
CurvePath reroute_loop(const Origami& o, const Cylinder& cyl, int start, Side entry,
                       bool dir_pos, Side final_out) {
  CurvePath out;
  const bool horiz = cyl.dir == Direction::Horizontal;
  auto fwd = [&](int s) { return horiz ? o.right(s) : o.up(s); };
  auto bwd = [&](int s) { return horiz ? o.left(s) : o.down(s); };
  Side leave = horiz ? (dir_pos ? Side::R : Side::L) : (dir_pos ? Side::T : Side::B);
  Side enter = horiz ? (dir_pos ? Side::L : Side::R) : (dir_pos ? Side::B : Side::T);
  out.push_back({start, entry, leave});
  int cur = dir_pos ? fwd(start) : bwd(start);
  while (cur != start) {
    out.push_back({cur, enter, leave});
    cur = dir_pos ? fwd(cur) : bwd(cur);
  }
  out.push_back({start, enter, final_out});
  return out;
}

// A rerouted strand can poke into a square and retreat through the same
// side (the loop re-enters the start square exactly where the original run
// left it). Such a step is an isotopy artifact: drop it and let the strand
// pass straight through the square it bounced off.
void cancel_bounces(CurvePath& q) {
  bool again = true;
  while (again && q.size() >= 3) {
    again = false;
    const size_t n = q.size();
    for (size_t i = 0; i < n; ++i) {
      if (q[i].in != q[i].out) continue;
      size_t prev = (i + n - 1) % n;
      size_t next = (i + 1) % n;
      CurvePath merged;
      for (size_t k = (next + 1) % n; k != prev; k = (k + 1) % n) merged.push_back(q[k]);
      merged.push_back({q[prev].sq, q[prev].in, q[next].out});
      q = std::move(merged);
      again = true;
      break;
    }
  }
}

}  // namespace

CurvePath twist_path(const Origami& o, const CurvePath& p, const Cylinder& cyl,
                     int chirality) {
  validate_path(o, p);
  if (chirality != 1 && chirality != -1)
    throw std::invalid_argument("chirality must be +1 or -1");
  if (cyl.rows.size() != 1)
    throw std::invalid_argument("twist_path supports height-1 cylinders only");
  std::vector<char> inside(o.n, 0);
  for (int s : cyl.rows[0]) inside.at(s) = 1;

  const bool horiz = cyl.dir == Direction::Horizontal;
  // Side through which a transversal crossing enters travelling positively
  // across the cylinder (up for horizontal cylinders, east for vertical).
  const Side pos_in = horiz ? Side::B : Side::L;
  const Side pos_out = horiz ? Side::T : Side::R;

  // Rotate p so it starts outside the cylinder; a path entirely inside is a
  // core power and twists to itself.
  size_t n = p.size(), first_out = n;
  for (size_t i = 0; i < n; ++i)
    if (!inside[p[i].sq]) { first_out = i; break; }
  if (first_out == n) return p;

  CurvePath q;
  for (size_t k = 0; k < n; ++k) {
    const Step& st = p[(first_out + k) % n];
    if (!inside[st.sq]) { q.push_back(st); continue; }
    // Collect the maximal run inside the cylinder.
    CurvePath run;
    while (k < n) {
      const Step& cur = p[(first_out + k) % n];
      if (!inside[cur.sq]) break;
      run.push_back(cur);
      ++k;
    }
    --k;
    Side in0 = run.front().in, out1 = run.back().out;
    bool up = in0 == pos_in && out1 == pos_out;
    bool down = in0 == pos_out && out1 == pos_in;
    if (!up && !down) {  // bounce: no net crossing, leave untouched
      for (const Step& s2 : run) q.push_back(s2);
      continue;
    }
    // Right-handed twist (+1): strands turn right when they hit the
    // cylinder, so upward crossings of a horizontal core drag east while
    // eastward crossings of a vertical core drag south.
    bool dir_pos = horiz ? ((chirality > 0) == up) : ((chirality > 0) != up);
    CurvePath loop = reroute_loop(o, cyl, run.front().sq, in0, dir_pos, run.front().out);
    for (const Step& s2 : loop) q.push_back(s2);
    for (size_t j = 1; j < run.size(); ++j) q.push_back(run[j]);
  }
  cancel_bounces(q);
  validate_path(o, q);
  return q;
}

}  // namespace strata
