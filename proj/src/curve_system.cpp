#include "strata/curve_system.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "strata/fatgraph.hpp"

namespace strata {

namespace {

// --- mini models: the crossing squares alone ---------------------------

struct Mini {
  std::vector<std::string> names;
  std::map<std::string, int> idx;
  std::vector<std::vector<std::string>> rows;                // g rows
  std::vector<std::pair<std::string, std::string>> vpairs;   // g-1 columns
};

void finish(Mini& m) {
  for (size_t k = 0; k < m.names.size(); ++k) m.idx[m.names[k]] = static_cast<int>(k);
}

Mini mini_chain(int g) {
  Mini m;
  auto P = [](int i) { return "P" + std::to_string(i); };
  auto Q = [](int i) { return "Q" + std::to_string(i); };
  m.names.push_back(Q(1));
  for (int i = 2; i < g; ++i) { m.names.push_back(P(i)); m.names.push_back(Q(i)); }
  m.names.push_back(P(g));
  m.rows.push_back({Q(1)});
  for (int i = 2; i < g; ++i) m.rows.push_back({P(i), Q(i)});
  m.rows.push_back({P(g)});
  m.vpairs.emplace_back(Q(1), P(2));
  for (int i = 2; i < g; ++i) m.vpairs.emplace_back(Q(i), P(i + 1));
  finish(m);
  return m;
}

Mini mini_case3(int g) {
  Mini m;
  auto P = [](int i) { return "P" + std::to_string(i); };
  auto Q = [](int i) { return "Q" + std::to_string(i); };
  m.names = {"P1", "P2", "L31", "L32"};
  if (g >= 4) m.names.push_back(Q(3));
  for (int i = 4; i < g; ++i) { m.names.push_back(P(i)); m.names.push_back(Q(i)); }
  if (g >= 4) m.names.push_back(P(g));
  m.rows.push_back({"P1"});
  m.rows.push_back({"P2"});
  std::vector<std::string> r3 = {"L31", "L32"};
  if (g >= 4) r3.push_back(Q(3));
  m.rows.push_back(r3);
  for (int i = 4; i < g; ++i) m.rows.push_back({P(i), Q(i)});
  if (g >= 4) m.rows.push_back({P(g)});
  m.vpairs.emplace_back("P1", "L31");
  m.vpairs.emplace_back("P2", "L32");
  if (g >= 4) m.vpairs.emplace_back(Q(3), P(4));
  for (int i = 4; i < g; ++i) m.vpairs.emplace_back(Q(i), P(i + 1));
  finish(m);
  return m;
}

// Row (1-based) that must host b_j.
int att_target(int g, LabelCase lc, int j) {
  if (lc == LabelCase::OneTwo) return j <= g ? j : 2 * g - j;
  if (g == 3) {
    switch (j) {
      case 1: return 3;
      case 2: return 2;
      case 3: return 3;
      case 4: return 1;
    }
    throw std::logic_error("bad b index");
  }
  if (j == 1) return 3;
  if (j == 2) return 2;
  if (j == 2 * g - 3) return 3;
  if (j == 2 * g - 2) return 1;
  if (j <= g) return j;
  return 2 * g - j;
}

std::vector<int> perm_images(int n, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 0);
  for (const auto& c : cycles)
    for (size_t k = 0; k < c.size(); ++k) im[c[k]] = c[(k + 1) % c.size()];
  return im;
}

}  // namespace

LabelCase labeling_case(int g, const std::vector<int>& kappa,
                        const std::optional<Parity>& spin) {
  if (g < 3) throw std::invalid_argument("genus must be at least 3");
  if (kappa.empty()) throw std::invalid_argument("kappa must be nonempty");
  int sum = 0, d = 0;
  for (int k : kappa) {
    if (k < 1) throw std::invalid_argument("kappa parts must be positive");
    sum += k;
    d = std::gcd(d, k);
  }
  if (sum != 2 * g - 2)
    throw std::invalid_argument("kappa parts must sum to 2g-2");
  if (d % 2 == 1) {
    if (spin)
      throw std::invalid_argument("spin parity applies only when gcd(kappa) is even");
    return LabelCase::OneTwo;
  }
  if (!spin)
    throw std::invalid_argument("spin parity required when gcd(kappa) is even");
  bool odd = *spin == Parity::Odd;
  int gm = g % 4;
  bool onetwo = (gm == 1 || gm == 2) ? odd : !odd;
  return onetwo ? LabelCase::OneTwo : LabelCase::Three;
}

std::vector<int> selected_b_indices(int g, const std::vector<int>& kappa) {
  int m = 2 * g - 2;
  std::vector<int> out;
  int s = 0;
  for (int k : kappa) {
    s += k;
    out.push_back((2 + s) % m + 1);
  }
  return out;
}

int CurveSystem::square(const std::string& name) const {
  for (size_t k = 0; k < names.size(); ++k)
    if (names[k] == name) return static_cast<int>(k);
  throw std::invalid_argument("unknown square name: " + name);
}

int CurveSystem::crossing_square(int row, int col) const {
  if (row < 1 || row > g || col < 1 || col > g - 1)
    throw std::invalid_argument("row/column index out of range");
  int found = -1;
  for (int s : {cols[col - 1][0], cols[col - 1][1]}) {
    if (std::find(rows[row - 1].begin(), rows[row - 1].end(), s) == rows[row - 1].end())
      continue;
    if (found != -1) throw std::logic_error("row and column cross twice");
    found = s;
  }
  if (found == -1) throw std::invalid_argument("row and column are disjoint");
  return found;
}

std::array<int, 2> CurveSystem::column_rows(int col) const {
  if (col < 1 || col > g - 1) throw std::invalid_argument("column index out of range");
  std::array<int, 2> out{0, 0};
  int found = 0;
  for (int r = 1; r <= g; ++r)
    for (int s : {cols[col - 1][0], cols[col - 1][1]})
      if (std::find(rows[r - 1].begin(), rows[r - 1].end(), s) != rows[r - 1].end()) {
        if (found == 2) throw std::logic_error("column meets more than two rows");
        out[found++] = r;
      }
  if (found != 2) throw std::logic_error("column meets fewer than two rows");
  return out;
}

CurveSystem build_curve_system(int g, LabelCase lc) {
  if (g < 3) throw std::invalid_argument("genus must be at least 3");
  Mini m = lc == LabelCase::OneTwo ? mini_chain(g) : mini_case3(g);
  const int n0 = 2 * g - 2;
  if (static_cast<int>(m.names.size()) != n0) throw std::logic_error("mini model size");

  std::vector<int> row_of(n0, 0);
  for (size_t r = 0; r < m.rows.size(); ++r)
    for (const auto& nm : m.rows[r]) row_of[m.idx[nm]] = static_cast<int>(r) + 1;

  std::vector<std::vector<int>> hcycles, vcycles;
  for (const auto& row : m.rows) {
    std::vector<int> c;
    for (const auto& nm : row) c.push_back(m.idx[nm]);
    hcycles.push_back(c);
  }
  for (const auto& [x, y] : m.vpairs) vcycles.push_back({m.idx[x], m.idx[y]});
  std::vector<int> h0 = perm_images(n0, hcycles), v0 = perm_images(n0, vcycles);
  std::vector<int> hi0(n0), vi0(n0);
  for (int s = 0; s < n0; ++s) { hi0[h0[s]] = s; vi0[v0[s]] = s; }

  // Boundary walk: cycles of s -> h^-1 v^-1 h v (s), two cycles of length
  // g-1, each traversal emitting two vertical seam edges per square.
  std::vector<int> Kt(n0);
  for (int s = 0; s < n0; ++s) Kt[s] = hi0[vi0[h0[v0[s]]]];
  std::vector<std::vector<int>> walks;
  std::vector<char> used(n0, 0);
  for (int s = 0; s < n0; ++s) {
    if (used[s]) continue;
    std::vector<int> cyc;
    int t = s;
    while (!used[t]) { used[t] = 1; cyc.push_back(t); t = Kt[t]; }
    walks.push_back(cyc);
  }
  if (walks.size() != 2 || static_cast<int>(walks[0].size()) != g - 1 ||
      static_cast<int>(walks[1].size()) != g - 1)
    throw std::logic_error("boundary walk structure unexpected");

  // Anchor search: the seams along one boundary walk alternate between the
  // seam right of the visited square and the seam right of its v-image, but
  // the walk direction and the interleave offset between the two families
  // depend on the figure. Try every combination and every rotation; slot j
  // must land in the row that hosts b_j and a labeling-specific anchor edge
  // pins one solution.
  std::vector<std::array<int, 2>> edge_of(n0 + 1);  // 1-based
  std::set<std::vector<std::array<int, 2>>> found;
  for (const auto& cyc : walks) {
    int len = static_cast<int>(cyc.size());
    for (int dir = 0; dir < 2; ++dir) {
      std::vector<int> w = cyc;
      if (dir) std::reverse(w.begin() + 1, w.end());
      for (int off = 0; off < 2; ++off) {
        std::vector<std::array<int, 2>> seq;
        for (int k = 0; k < len; ++k) {
          int s = w[k];
          seq.push_back({s, h0[s]});
          int a = v0[w[(k + off) % len]];
          seq.push_back({a, h0[a]});
        }
        for (int rot = 0; rot < n0; ++rot) {
          std::vector<std::array<int, 2>> edges;
          for (int j = 0; j < n0; ++j) edges.push_back(seq[(rot + j) % n0]);
          bool ok = true;
          for (int j = 1; j <= n0 && ok; ++j)
            ok = row_of[edges[j - 1][0]] == att_target(g, lc, j);
          if (!ok) continue;
          if (lc == LabelCase::OneTwo)
            ok = edges[1] == std::array<int, 2>{m.idx["P2"], m.idx["Q2"]};
          else
            ok = edges[0] == std::array<int, 2>{m.idx["L31"], m.idx["L32"]};
          if (!ok) continue;
          found.insert(edges);
        }
      }
    }
  }
  if (found.size() != 1) throw std::logic_error("seam anchoring not unique");
  for (int j = 1; j <= n0; ++j) edge_of[j] = (*found.begin())[j - 1];

  std::vector<int> ins(n0, 0);  // b index inserted right of each mini square
  for (int j = 1; j <= n0; ++j) {
    if (ins[edge_of[j][0]] != 0) throw std::logic_error("two insertions at one seam");
    ins[edge_of[j][0]] = j;
  }

  // Assemble the full figure: every mini square is followed by its b square.
  CurveSystem cs;
  cs.g = g;
  cs.lcase = lc;
  std::map<std::string, int> id;
  std::vector<std::vector<int>> big_rows;
  cs.bsq.assign(n0, -1);
  cs.batt.assign(n0, 0);
  for (const auto& row : m.rows) {
    std::vector<int> br;
    for (const auto& nm : row) {
      int sq = static_cast<int>(cs.names.size());
      cs.names.push_back(nm);
      id[nm] = sq;
      br.push_back(sq);
      int j = ins[m.idx[nm]];
      int bq = static_cast<int>(cs.names.size());
      std::string bn = "B" + std::to_string(j);
      cs.names.push_back(bn);
      id[bn] = bq;
      br.push_back(bq);
      cs.bsq[j - 1] = bq;
      cs.batt[j - 1] = row_of[m.idx[nm]];
    }
    big_rows.push_back(br);
  }
  const int n = 2 * n0;
  std::vector<std::vector<int>> bigv;
  for (const auto& [x, y] : m.vpairs) bigv.push_back({id[x], id[y]});
  Origami full = make_origami(perm_images(n, big_rows), perm_images(n, bigv));
  cs.full = full;
  cs.rows = big_rows;
  for (const auto& [x, y] : m.vpairs) cs.cols.push_back({id[x], id[y]});

  if (!is_connected(cs.full)) throw std::logic_error("full figure disconnected");
  std::vector<int> prof = singularity_profile(cs.full);
  if (static_cast<int>(prof.size()) != n0 ||
      std::any_of(prof.begin(), prof.end(), [](int k) { return k != 1; }))
    throw std::logic_error("full figure profile unexpected");
  return cs;
}

bool Prototype::is_kept(int b_index) const {
  return std::find(kept.begin(), kept.end(), b_index) != kept.end();
}

int Prototype::dual_b(int i) const {
  if (i < 1 || i > g()) throw std::invalid_argument("basis index out of range");
  if (cs.lcase == LabelCase::Three && i == 1) return 2 * g() - 2;
  return i;
}

Prototype build_prototype(int g, std::vector<int> kappa, std::optional<Parity> spin) {
  LabelCase lc = labeling_case(g, kappa, spin);
  Prototype p;
  p.cs = build_curve_system(g, lc);
  p.kappa = kappa;
  p.spin = spin;
  p.kept = selected_b_indices(g, kappa);

  const int n = p.cs.full.n;
  std::vector<char> alive(n, 1);
  for (int j = 1; j <= 2 * g - 2; ++j)
    if (!p.is_kept(j)) alive[p.cs.bsq[j - 1]] = 0;
  p.full2p.assign(n, -1);
  for (int s = 0; s < n; ++s)
    if (alive[s]) {
      p.full2p[s] = static_cast<int>(p.p2full.size());
      p.p2full.push_back(s);
    }
  int np = static_cast<int>(p.p2full.size());
  std::vector<int> h(np), v(np);
  for (int s = 0; s < n; ++s) {
    if (!alive[s]) continue;
    int t = p.cs.full.right(s);
    while (!alive[t]) t = p.cs.full.right(t);
    h[p.full2p[s]] = p.full2p[t];
    int u = p.cs.full.up(s);
    if (!alive[u]) throw std::logic_error("vertical gluing hit a deleted square");
    v[p.full2p[s]] = p.full2p[u];
  }
  p.o = make_origami(h, v);

  std::vector<int> want = kappa;
  std::sort(want.begin(), want.end());
  if (singularity_profile(p.o) != want)
    throw std::logic_error("prototype profile does not match kappa");
  return p;
}

// --- curve realization -------------------------------------------------

namespace {

enum class CurveKind { Row, Col, B };

std::pair<CurveKind, int> parse_curve(const CurveSystem& cs, const std::string& name) {
  if (name.size() < 2 || (name[0] != 'a' && name[0] != 'b'))
    throw std::invalid_argument("unknown curve name: " + name);
  bool prime = name.back() == '\'';
  std::string digits = name.substr(1, name.size() - 1 - (prime ? 1 : 0));
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(),
                                     [](char c) { return c >= '0' && c <= '9'; }))
    throw std::invalid_argument("unknown curve name: " + name);
  int i = std::stoi(digits);
  if (name[0] == 'b') {
    if (prime || i < 1 || i > 2 * cs.g - 2)
      throw std::invalid_argument("unknown curve name: " + name);
    return {CurveKind::B, i};
  }
  if (prime) {
    if (i < 1 || i > cs.g - 1) throw std::invalid_argument("unknown curve name: " + name);
    return {CurveKind::Col, i};
  }
  if (i < 1 || i > cs.g) throw std::invalid_argument("unknown curve name: " + name);
  return {CurveKind::Row, i};
}

CurvePath row_path(const std::vector<int>& squares) {
  CurvePath p;
  for (int s : squares) p.push_back({s, Side::L, Side::R});
  return p;
}

}  // namespace

CurvePath realize_full(const CurveSystem& cs, const std::string& name) {
  auto [kind, i] = parse_curve(cs, name);
  CurvePath p;
  switch (kind) {
    case CurveKind::Row:
      p = row_path(cs.rows[i - 1]);
      break;
    case CurveKind::Col:
      p = {{cs.cols[i - 1][0], Side::B, Side::T}, {cs.cols[i - 1][1], Side::B, Side::T}};
      break;
    case CurveKind::B:
      p = {{cs.bsq[i - 1], Side::B, Side::T}};
      break;
  }
  validate_path(cs.full, p);
  return p;
}

CurvePath realize_on_prototype(const Prototype& p, const std::string& name) {
  auto [kind, i] = parse_curve(p.cs, name);
  CurvePath path;
  if (kind == CurveKind::Row) {
    std::vector<int> sq;
    for (int s : p.cs.rows[i - 1])
      if (p.full2p[s] >= 0) sq.push_back(p.full2p[s]);
    path = row_path(sq);
  } else if (kind == CurveKind::Col) {
    path = {{p.full2p[p.cs.cols[i - 1][0]], Side::B, Side::T},
            {p.full2p[p.cs.cols[i - 1][1]], Side::B, Side::T}};
  } else if (p.is_kept(i)) {
    path = {{p.full2p[p.cs.bsq[i - 1]], Side::B, Side::T}};
  } else {
    // Rerouted b-curve: ride up through the surviving left neighbor of the
    // deleted square, then round the fused vertex at its top-right corner
    // clockwise back to the starting edge.
    int x = p.full2p[p.cs.full.left(p.cs.bsq[i - 1])];
    if (x < 0) throw std::logic_error("left neighbor of a deleted square missing");
    path.push_back({x, Side::B, Side::T});
    Corner c{p.o.up(x), CornerKind::BR};
    int guard = 4 * p.o.n + 1;
    while (!(c.sq == x && c.kind == CornerKind::BR)) {
      if (--guard < 0) throw std::logic_error("vertex rounding did not close");
      Step st = corner_chord(c);
      std::swap(st.in, st.out);
      path.push_back(st);
      c = cw_next(p.o, c);
    }
  }
  validate_path(p.o, path);
  return path;
}

// --- chain boundaries ---------------------------------------------------

CurvePath chain_boundary_full(const CurveSystem& cs, int i, int j) {
  const int g = cs.g;
  if (j > g) { int ni = 2 * g - j, nj = 2 * g - i; i = ni; j = nj; }
  if (i < 1 || i >= j || j > g)
    throw std::invalid_argument("no chain joins these indices");

  // Path from row i to row j in the row/column attachment tree.
  std::vector<std::vector<std::pair<int, int>>> adj(g + 1);  // row -> (row, col)
  for (int c = 1; c <= g - 1; ++c) {
    auto [r1, r2] = cs.column_rows(c);
    adj[r1].push_back({r2, c});
    adj[r2].push_back({r1, c});
  }
  std::vector<int> prev_row(g + 1, 0), prev_col(g + 1, 0);
  std::vector<int> queue{i};
  std::vector<char> seen(g + 1, 0);
  seen[i] = 1;
  for (size_t q = 0; q < queue.size(); ++q)
    for (auto [r2, c] : adj[queue[q]])
      if (!seen[r2]) {
        seen[r2] = 1;
        prev_row[r2] = queue[q];
        prev_col[r2] = c;
        queue.push_back(r2);
      }
  if (!seen[j]) throw std::logic_error("attachment tree disconnected");
  std::vector<int> chain_rows, chain_cols;
  for (int r = j; r != i; r = prev_row[r]) {
    chain_rows.push_back(r);
    chain_cols.push_back(prev_col[r]);
  }
  chain_rows.push_back(i);
  std::reverse(chain_rows.begin(), chain_rows.end());
  std::reverse(chain_cols.begin(), chain_cols.end());

  // Ribbon graph of the chain: curves are the rows then the columns, one
  // crossing per (column, attached row) in that row's crossing square.
  const int nr = static_cast<int>(chain_rows.size());
  const int ncv = nr + static_cast<int>(chain_cols.size());
  auto row_curve = [&](int row) {
    return static_cast<int>(std::find(chain_rows.begin(), chain_rows.end(), row) -
                            chain_rows.begin());
  };
  struct Ev { int square; int other; };  // along each curve, in order
  std::vector<std::vector<std::pair<int, int>>> row_events(nr);  // (pos in row, col curve)
  std::vector<RibbonCrossing> crossings;
  std::vector<int> events(ncv, 0);
  std::vector<std::vector<int>> ev_square(ncv);
  for (size_t k = 0; k < chain_cols.size(); ++k) {
    int c = chain_cols[k];
    int ccurve = nr + static_cast<int>(k);
    for (int pos = 0; pos < 2; ++pos) {
      int sq = cs.cols[c - 1][pos];
      int row = 0;
      for (int r = 1; r <= g; ++r)
        if (std::find(cs.rows[r - 1].begin(), cs.rows[r - 1].end(), sq) !=
            cs.rows[r - 1].end())
          row = r;
      int rcurve = row_curve(row);
      if (rcurve >= nr) throw std::logic_error("column leaves the chain");
      int rowpos = static_cast<int>(
          std::find(cs.rows[row - 1].begin(), cs.rows[row - 1].end(), sq) -
          cs.rows[row - 1].begin());
      row_events[rcurve].push_back({rowpos, ccurve * 4 + pos});
    }
  }
  // Sort row events along each row cycle and emit crossings with ranks.
  for (int rc = 0; rc < nr; ++rc) {
    auto& evs = row_events[rc];
    std::sort(evs.begin(), evs.end());
    events[rc] = static_cast<int>(evs.size());
    ev_square[rc].resize(evs.size());
    for (size_t r = 0; r < evs.size(); ++r) {
      int ccurve = evs[r].second / 4, pos = evs[r].second % 4;
      int col = chain_cols[ccurve - nr];
      int sq = cs.cols[col - 1][pos];
      ev_square[rc][r] = sq;
      crossings.push_back({rc, static_cast<int>(r), ccurve, pos, +1});
      if (static_cast<int>(ev_square[ccurve].size()) < 2) ev_square[ccurve].resize(2);
      ev_square[ccurve][pos] = sq;
      events[ccurve] = 2;
    }
  }

  std::vector<RibbonFace> faces = trace_ribbon_faces(events, crossings);

  // Top circle: the face holding the left side of row i's strand arriving
  // at its crossing with the chain's first column.
  int anchor_sq = cs.crossing_square(i, chain_cols[0]);
  int rc0 = row_curve(i);
  int rank0 = -1;
  for (size_t r = 0; r < ev_square[rc0].size(); ++r)
    if (ev_square[rc0][r] == anchor_sq) rank0 = static_cast<int>(r);
  if (rank0 < 0) throw std::logic_error("anchor crossing missing");
  StrandSide want{rc0, (rank0 - 1 + events[rc0]) % events[rc0], +1};
  const RibbonFace* top = nullptr;
  for (const auto& f : faces)
    for (const auto& s : f)
      if (s == want) top = &f;
  if (!top) throw std::logic_error("top face not found");

  // Convert the face walk to a step path. Carrier cycles: rows use their
  // full square cycle, columns their two squares.
  auto carrier = [&](int curve) -> std::vector<int> {
    if (curve < nr) return cs.rows[chain_rows[curve] - 1];
    int col = chain_cols[curve - nr];
    return {cs.cols[col - 1][0], cs.cols[col - 1][1]};
  };
  auto entry_rank = [&](const StrandSide& s) {
    return s.side > 0 ? s.arc : (s.arc + 1) % events[s.curve];
  };
  auto exit_rank = [&](const StrandSide& s) {
    return s.side > 0 ? (s.arc + 1) % events[s.curve] : s.arc;
  };
  CurvePath path;
  const auto& face = *top;
  for (size_t k = 0; k < face.size(); ++k) {
    const StrandSide& pr = face[k];
    const StrandSide& cur = face[(k + 1) % face.size()];
    int sq = ev_square[pr.curve][exit_rank(pr)];
    if (ev_square[cur.curve][entry_rank(cur)] != sq)
      throw std::logic_error("face corner mismatch");
    bool pr_row = pr.curve < nr, cur_row = cur.curve < nr;
    Side in = pr_row ? (pr.side > 0 ? Side::L : Side::R)
                     : (pr.side > 0 ? Side::B : Side::T);
    Side out = cur_row ? (cur.side > 0 ? Side::R : Side::L)
                       : (cur.side > 0 ? Side::T : Side::B);
    path.push_back({sq, in, out});
    // Transit squares of cur's arc, from its entry square to its exit.
    std::vector<int> cyc = carrier(cur.curve);
    int w = static_cast<int>(cyc.size());
    int from = static_cast<int>(std::find(cyc.begin(), cyc.end(), sq) - cyc.begin());
    int to = static_cast<int>(
        std::find(cyc.begin(), cyc.end(), ev_square[cur.curve][exit_rank(cur)]) -
        cyc.begin());
    int dir = cur.side > 0 ? 1 : -1;
    Side tin = cur_row ? (dir > 0 ? Side::L : Side::R) : (dir > 0 ? Side::B : Side::T);
    Side tout = cur_row ? (dir > 0 ? Side::R : Side::L) : (dir > 0 ? Side::T : Side::B);
    for (int pos = (from + dir + w) % w; pos != to; pos = (pos + dir + w) % w)
      path.push_back({cyc[pos], tin, tout});
  }
  validate_path(cs.full, path);
  return path;
}

CurvePath transfer_to_prototype(const Prototype& p, const CurvePath& path) {
  CurvePath out;
  for (const Step& st : path) {
    int sq = p.full2p[st.sq];
    if (sq < 0) {
      bool transit = (st.in == Side::L && st.out == Side::R) ||
                     (st.in == Side::R && st.out == Side::L);
      if (!transit)
        throw std::invalid_argument("path meets a deleted square non-transversally");
      continue;
    }
    out.push_back({sq, st.in, st.out});
  }
  validate_path(p.o, out);
  return out;
}

CurvePath chain_boundary_on_prototype(const Prototype& p, int i, int j) {
  return transfer_to_prototype(p, chain_boundary_full(p.cs, i, j));
}

// --- homology ----------------------------------------------------------

namespace {

std::vector<long long> coords_impl(const Origami& o, const CurvePath& path,
                                   const std::vector<int>& seam_left,
                                   const std::vector<std::vector<int>>& rows) {
  validate_path(o, path);
  const int g = static_cast<int>(rows.size());
  std::vector<long long> out(2 * g, 0);
  for (int i = 0; i < g; ++i) {
    out[i] = vwall_cross(o, path, {seam_left[i]});
    out[g + i] = hwall_cross(o, path, rows[i]);
  }
  return out;
}

}  // namespace

std::vector<long long> homology_coords(const Prototype& p, const CurvePath& path) {
  const int g = p.g();
  std::vector<int> seam_left(g);
  std::vector<std::vector<int>> rows(g);
  for (int i = 1; i <= g; ++i) {
    int bs = p.cs.bsq[p.dual_b(i) - 1];
    seam_left[i - 1] = p.full2p[p.cs.full.left(bs)];
    if (seam_left[i - 1] < 0) throw std::logic_error("seam square deleted");
    for (int s : p.cs.rows[i - 1])
      if (p.full2p[s] >= 0) rows[i - 1].push_back(p.full2p[s]);
  }
  return coords_impl(p.o, path, seam_left, rows);
}

std::vector<long long> homology_coords_full(const CurveSystem& cs, const CurvePath& path) {
  const int g = cs.g;
  std::vector<int> seam_left(g);
  std::vector<std::vector<int>> rows(g);
  for (int i = 1; i <= g; ++i) {
    int dual = (cs.lcase == LabelCase::Three && i == 1) ? 2 * g - 2 : i;
    seam_left[i - 1] = cs.full.left(cs.bsq[dual - 1]);
    rows[i - 1] = cs.rows[i - 1];
  }
  return coords_impl(cs.full, path, seam_left, rows);
}

long long symplectic_pairing(const std::vector<long long>& x, const std::vector<long long>& y) {
  if (x.size() != y.size() || x.size() % 2 != 0)
    throw std::invalid_argument("coordinate vectors must have equal even length");
  size_t g = x.size() / 2;
  long long s = 0;
  for (size_t i = 0; i < g; ++i) s += x[i] * y[g + i] - x[g + i] * y[i];
  return s;
}

// --- catalog and intersection graph -------------------------------------

std::vector<std::string> network_curves(const Prototype& p) {
  std::vector<std::string> out;
  for (int i = 1; i <= p.g(); ++i) out.push_back("a" + std::to_string(i));
  for (int i = 1; i <= p.g() - 1; ++i) out.push_back("a" + std::to_string(i) + "'");
  for (int j : p.kept) out.push_back("b" + std::to_string(j));
  return out;
}

std::string intersection_graph(const Prototype& p, const std::string& format) {
  std::vector<std::string> curves = network_curves(p);
  struct Edge { std::string u, v; int count; };
  std::vector<Edge> edges;
  for (int c = 1; c <= p.g() - 1; ++c) {
    auto [r1, r2] = p.cs.column_rows(c);
    for (int r : {r1, r2})
      edges.push_back({"a" + std::to_string(r), "a" + std::to_string(c) + "'", 1});
  }
  for (int j : p.kept)
    edges.push_back(
        {"a" + std::to_string(p.cs.batt[j - 1]), "b" + std::to_string(j), 1});

  if (format == "json") {
    nlohmann::json out;
    out["curves"] = curves;
    out["edges"] = nlohmann::json::array();
    for (const Edge& e : edges)
      out["edges"].push_back({{"u", e.u}, {"v", e.v}, {"crossings", e.count}});
    return out.dump();
  }
  if (format == "dot") {
    std::ostringstream os;
    os << "graph curve_system {\n";
    for (const auto& c : curves) os << "  \"" << c << "\";\n";
    for (const Edge& e : edges)
      os << "  \"" << e.u << "\" -- \"" << e.v << "\" [label=\"" << e.count << "\"];\n";
    os << "}\n";
    return os.str();
  }
  throw std::invalid_argument("format must be json or dot");
}

}  // namespace strata
