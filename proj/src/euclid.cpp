// euclid.cpp: synthesis and verification of twist words along the Euclidean
// reduction of a partition.
//
// Words are found, not hard-coded: each lemma-shaped construction yields a
// small family of candidate words (run direction, chirality, block ends),
// and the first candidate whose transvection transport carries the source
// class to the target class, up to sign, is accepted. Transport tracks both
// the framed class mod gcd(kappa) and the integral homology class, so a
// dropped or misplaced letter is caught immediately.
#include "strata/euclid.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "strata/framed.hpp"

namespace strata {

TwistWord inverse_word(const TwistWord& w) {
  TwistWord out(w.rbegin(), w.rend());
  for (auto& l : out) l.exp = -l.exp;
  return out;
}

std::string word_to_json(const TwistWord& w) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& l : w) j.push_back(nlohmann::json::array({l.name, l.exp}));
  return j.dump();
}

TwistWord word_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (!j.is_array()) throw std::invalid_argument("twist word: expected an array");
  TwistWord out;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() ||
        !e[1].is_number_integer())
      throw std::invalid_argument("twist word: each letter is [name, exp]");
    Letter l{e[0].get<std::string>(), e[1].get<int>()};
    if (l.exp == 0) throw std::invalid_argument("twist word: zero exponent");
    out.push_back(std::move(l));
  }
  return out;
}

TwistWord braid_to_twists(const BraidWord& b, const std::vector<std::string>& chain) {
  if (b.strands != static_cast<int>(chain.size()) + 1)
    throw std::invalid_argument("braid_to_twists: strands must be chain length + 1");
  TwistWord out;
  for (auto [k, e] : b.letters) {
    if (k < 1 || k >= b.strands)
      throw std::invalid_argument("braid_to_twists: generator index out of range");
    if (e == 0) throw std::invalid_argument("braid_to_twists: zero exponent");
    out.push_back({chain[static_cast<size_t>(k) - 1], e});
  }
  return out;
}

namespace {

std::string an(int k) { return "a" + std::to_string(k); }
std::string apn(int k) { return "a" + std::to_string(k) + "'"; }
std::string bn(int t) { return "b" + std::to_string(t); }
std::string cn(int k, int l) {
  return "c(" + std::to_string(k) + "," + std::to_string(l) + ")";
}

constexpr long long kIntCap = 1'000'000'000'000LL;

// Integral transvection x -> x + e <x,t> t with magnitude guard.
std::vector<long long> transvect_int(const std::vector<long long>& x,
                                     const std::vector<long long>& t, int e) {
  long long s = symplectic_pairing(x, t);
  if (std::llabs(s) > kIntCap) throw std::overflow_error("twist transport overflow");
  long long c = static_cast<long long>(e) * s;
  std::vector<long long> out(x.size());
  for (size_t k = 0; k < x.size(); ++k) {
    out[k] = x[k] + c * t[k];
    if (std::llabs(out[k]) > kIntCap) throw std::overflow_error("twist transport overflow");
  }
  return out;
}

struct CurveClass {
  FramedClass fc;
  std::vector<long long> iv;
};

FramedClass neg_framed(const FramedClass& f, int r) {
  FramedClass out = f;
  for (auto& c : out.coords) c = (r - c % r) % r;
  out.mu = (r - out.mu % r) % r;
  return out;
}

std::vector<long long> neg_int(const std::vector<long long>& v) {
  std::vector<long long> out(v.size());
  for (size_t k = 0; k < v.size(); ++k) out[k] = -v[k];
  return out;
}

using Cands = std::vector<TwistWord>;

// The word synthesis engine for one prototype: caches curve classes and
// searches the candidate families.
class Engine {
 public:
  explicit Engine(const Prototype& p)
      : p_(p), g_(p.g()), m_(2 * p.g() - 2),
        three_(p.cs.lcase == LabelCase::Three) {
    r_ = 0;
    for (int k : p.kappa) r_ = std::gcd(r_, k);
  }

  int g() const { return g_; }
  int m() const { return m_; }
  int r() const { return r_; }

  int idx(long long v) const {
    long long t = (v - 1) % m_;
    if (t < 0) t += m_;
    return static_cast<int>(t) + 1;
  }
  int residue(long long d) const {
    long long t = d % m_;
    if (t < 0) t += m_;
    return static_cast<int>(t);
  }

  const CurveClass& cls(const std::string& name) {
    auto it = cache_.find(name);
    if (it != cache_.end()) return it->second;
    CurvePath path;
    if (name.size() > 2 && name[0] == 'c' && name[1] == '(') {
      int k = 0, l = 0;
      char comma = 0, close = 0;
      std::istringstream in(name.substr(2));
      if (!(in >> k >> comma >> l >> close) || comma != ',' || close != ')')
        throw std::invalid_argument("unknown curve name: " + name);
      path = chain_boundary_on_prototype(p_, k, l);
    } else {
      path = realize_on_prototype(p_, name);
    }
    CurveClass cc{framed_class_of_path(p_, path, r_), homology_coords(p_, path)};
    return cache_.emplace(name, std::move(cc)).first->second;
  }

  CurveClass tv(const CurveClass& x, const CurveClass& t, int e) const {
    return {twist_transvection(x.fc, t.fc, r_, e), transvect_int(x.iv, t.iv, e)};
  }

  CurveClass transport(CurveClass x, const TwistWord& w) {
    for (const auto& l : w) x = tv(x, cls(l.name), l.exp);
    return x;
  }

  bool match(const CurveClass& got, const CurveClass& want) const {
    if (got.iv == want.iv && got.fc == want.fc) return true;
    return got.iv == neg_int(want.iv) && got.fc == neg_framed(want.fc, r_);
  }

  // ---- candidate families -----------------------------------------------

  static TwistWord run_word(const std::vector<std::string>& chain, int lo, int hi,
                            bool asc, int e) {
    TwistWord w;
    if (asc)
      for (int k = lo; k <= hi; ++k) w.push_back({chain[static_cast<size_t>(k) - 1], e});
    else
      for (int k = hi; k >= lo; --k) w.push_back({chain[static_cast<size_t>(k) - 1], e});
    return w;
  }

  static void add_runs(Cands& out, const std::vector<std::string>& chain, int lo, int hi) {
    if (lo < 1 || hi > static_cast<int>(chain.size()) || lo > hi)
      throw std::logic_error("run span out of range");
    std::vector<std::pair<int, int>> spans = {{lo, hi}};
    if (lo + 1 <= hi) spans.push_back({lo + 1, hi});
    if (lo <= hi - 1) spans.push_back({lo, hi - 1});
    for (auto [a, b] : spans)
      for (bool asc : {true, false})
        for (int e : {1, -1}) out.push_back(run_word(chain, a, b, asc, e));
  }

  // Block crossing: X = [x0,x1] passes across the adjacent block Y = [y0,y1].
  // x_moves_left means Y sits just left of X and X lands left of Y.
  static TwistWord block_word(const std::vector<std::string>& chain, int x0, int x1,
                              int y0, int y1, bool x_moves_left, int e) {
    TwistWord w;
    int n = static_cast<int>(chain.size());
    if (x0 > x1 || y0 > y1) return w;
    int lx = x1 - x0 + 1, ly = y1 - y0 + 1;
    for (int t = 0; t < lx; ++t) {
      if (x_moves_left) {
        for (int k = x0 - 1 + t; k >= x0 - ly + t; --k) {
          if (k < 1 || k > n) throw std::logic_error("block braid out of range");
          w.push_back({chain[static_cast<size_t>(k) - 1], e});
        }
      } else {
        for (int k = x1 - t; k <= y1 - 1 - t; ++k) {
          if (k < 1 || k > n) throw std::logic_error("block braid out of range");
          w.push_back({chain[static_cast<size_t>(k) - 1], e});
        }
      }
    }
    return w;
  }

  static void add_block(Cands& out, const std::vector<std::string>& chain, int x0,
                        int x1, int y0, int y1, bool x_moves_left) {
    if (x0 > x1 || y0 > y1) {
      out.push_back({});
      return;
    }
    for (int e : {1, -1}) {
      TwistWord w = block_word(chain, x0, x1, y0, y1, x_moves_left, e);
      out.push_back(w);
      std::reverse(w.begin(), w.end());
      out.push_back(w);
    }
  }

  TwistWord pick(const Cands& cands, const CurveClass& src,
                 const std::vector<CurveClass>& accept, const std::string& what,
                 int* which = nullptr) {
    for (const auto& w : cands) {
      CurveClass got = transport(src, w);
      for (size_t a = 0; a < accept.size(); ++a) {
        if (match(got, accept[a])) {
          if (which) *which = static_cast<int>(a);
          return w;
        }
      }
    }
    throw std::runtime_error("no verified word candidate: " + what);
  }

  // ---- chains -------------------------------------------------------------

  std::vector<std::string> chainA() const {
    std::vector<std::string> c;
    for (int k = 1; k < g_; ++k) {
      c.push_back(an(k));
      c.push_back(apn(k));
    }
    c.push_back(an(g_));
    return c;
  }
  std::vector<std::string> chainA1() const {
    std::vector<std::string> c;
    for (int k = 2; k < g_; ++k) {
      c.push_back(an(k));
      c.push_back(apn(k));
    }
    c.push_back(an(g_));
    return c;
  }
  std::vector<std::string> chainA2() const {
    std::vector<std::string> c{an(1), apn(1)};
    for (int k = 3; k < g_; ++k) {
      c.push_back(an(k));
      c.push_back(apn(k));
    }
    c.push_back(an(g_));
    return c;
  }
  std::vector<std::string> chainA3() const { return {an(1), apn(1), an(3), apn(2), an(2)}; }
  // Prefix of the row-1 chain extended past the branch row; used for the
  // transport between the fused-handle boundary c(1,2) and c(2,4).
  std::vector<std::string> chainP() const { return {an(1), apn(1), an(3), apn(3), an(4)}; }

  static int posA(int u) { return 2 * u - 1; }
  static int posA1(int u) { return 2 * u - 3; }
  static int posA2(int u) { return u == 1 ? 1 : 2 * u - 3; }

  // ---- regimes ------------------------------------------------------------

  enum class Regime { OneSided, CrossG, Cross1, CrossTop, Cross2Low };

  bool separates(int z, int i, int x) const {
    int d = residue(z - i);
    return d > 0 && d < x;
  }

  Regime classify(int i, int x) const {
    if (!three_) {
      if (separates(g_, i, x)) return Regime::CrossG;
      if (separates(1, i, x)) return Regime::Cross1;
      return Regime::OneSided;
    }
    bool s2 = separates(2, i, x), sg = separates(g_, i, x), st = separates(m_, i, x);
    if (sg) {
      if (s2 || st) throw std::logic_error("impossible separator pattern");
      return Regime::CrossG;
    }
    if (st) return Regime::CrossTop;
    if (s2) {
      if (i == 1) return Regime::Cross2Low;
      if (i == m_) return Regime::CrossTop;  // degenerate outer pass
      throw std::logic_error("impossible separator pattern");
    }
    return Regime::OneSided;
  }

  int separator_count(int i, int x) const {
    if (!three_) return separates(g_, i, x) + separates(1, i, x);
    return separates(2, i, x) + separates(g_, i, x) + separates(m_, i, x);
  }

  // ---- one-sided ----------------------------------------------------------

  struct ZoneInfo {
    std::vector<std::string> chain;
    int lo = 0, hi = 0;
    int ck = 0, cl = 0;  // the pair's chain boundary c(ck, cl)
  };

  ZoneInfo one_sided_zone(int i, int j) const {
    if (!three_) {
      if (i < j && j <= g_) return {chainA(), posA(i), posA(j), i, j};
      int jj = (j == 1 ? 2 * g_ - 1 : j);
      if (i >= g_ && jj > i && jj <= 2 * g_ - 1) {
        int rlo = 2 * g_ - jj, rhi = 2 * g_ - i;
        return {chainA(), posA(rlo), posA(rhi), rlo, rhi};
      }
      throw std::invalid_argument("pair is not one-sided");
    }
    if (2 <= i && i < j && j <= g_) return {chainA1(), posA1(i), posA1(j), i, j};
    if (i >= g_ && j > i && j <= m_) {
      int rlo = (j == m_ ? 1 : 2 * g_ - j), rhi = 2 * g_ - i;
      return {chainA2(), posA2(rlo), posA2(rhi), rlo, rhi};
    }
    if (i == m_ && j == 1) return {chainA3(), 1, 3, 1, 3};
    if (i == 1 && j == 2) return {chainA3(), 3, 5, 2, 3};
    if (i == m_ && j == 2) return {chainA3(), 1, 5, 1, 2};
    throw std::invalid_argument("pair is not one-sided");
  }

  struct OneSidedBuild {
    OneSidedWords words;
    int ck = 0, cl = 0;
  };

  OneSidedBuild build_one_sided(int i, int j) {
    ZoneInfo z = one_sided_zone(i, j);
    std::string cname = cn(z.ck, z.cl);
    const CurveClass& src = cls(bn(i));
    const CurveClass tc = cls(cname);
    const CurveClass tb = cls(bn(j));
    Cands runs;
    add_runs(runs, z.chain, z.lo, z.hi);
    Cands cc, cf;
    for (const auto& run : runs)
      for (int s : {1, -1}) {
        TwistWord w = run;
        w.push_back({bn(j), s});
        cc.push_back(std::move(w));
        w = run;
        w.push_back({cname, s});
        cf.push_back(std::move(w));
      }
    std::string tag = " (" + std::to_string(i) + "," + std::to_string(j) + ")";
    OneSidedBuild out;
    out.ck = z.ck;
    out.cl = z.cl;
    out.words.to_chain = pick(cc, src, {tc}, "one-sided chain word" + tag);
    out.words.to_far = pick(cf, src, {tb}, "one-sided far word" + tag);
    out.words.ga = out.words.to_chain;
    out.words.ga.pop_back();
    return out;
  }

  // ---- crossing regimes ---------------------------------------------------

  struct CrossBuild {
    TwistWord pre;       // b_i class -> T(c_nat)^eps T(pivot)^epsp (inner)
    TwistWord leftpass;  // T(pivot)^epsp(inner) class -> +-b_j
    int eps = 1, epsp = 1;
    int nat_k = 0, nat_l = 0;  // c_nat = c(nat_k, nat_l)
    std::string pivot, inner;
  };

  // Word mapping T(b_2)^s(c(2,j)) to +-b_j along the branch-free chain.
  Cands gamma_cands(int j) {
    Cands out;
    add_runs(out, three_ ? chainA1() : chainA(), three_ ? posA1(2) : posA(2),
             three_ ? posA1(j) : posA(j));
    return out;
  }

  CrossBuild build_crossing(int i, int j, Regime rg) {
    int x = residue(j - i);
    CrossBuild cb;
    Cands pre_cands;
    std::vector<std::string> chain;
    switch (rg) {
      case Regime::CrossG: {
        chain = three_ ? chainA1() : chainA();
        auto pos = [&](int u) { return three_ ? posA1(u) : posA(u); };
        cb.nat_k = g_ - x;
        cb.nat_l = g_;
        int rlo = 2 * g_ - j;
        cb.inner = cn(rlo, g_);
        cb.pivot = bn(g_);
        int ly = 2 * (j - g_) + 1;
        int x0 = pos(i) + 1, x1 = pos(g_);
        add_block(pre_cands, chain, x0, x1, x0 - ly, x0 - 1, true);
        break;
      }
      case Regime::Cross1: {
        chain = chainA();
        cb.nat_k = 1;
        cb.nat_l = x + 1;
        cb.inner = cn(1, j);
        cb.pivot = bn(1);
        add_block(pre_cands, chain, 1, 2 * j - 2, 2 * j - 1,
                  4 * g_ - 2 * i + 2 * j - 3, false);
        break;
      }
      case Regime::CrossTop: {
        chain = chainA2();
        int h = i - j;
        cb.nat_k = 1;
        cb.nat_l = x + 2;
        cb.inner = cn(1, j + 2);
        cb.pivot = bn(m_);
        add_block(pre_cands, chain, 2, 4 * g_ - 2 * i - 3, 4 * g_ - 2 * i - 2,
                  4 * g_ - 2 * h - 2, false);
        break;
      }
      case Regime::Cross2Low: {
        chain = chainA1();
        cb.nat_k = 2;
        cb.nat_l = j + 1;
        cb.inner = cn(2, j);
        cb.pivot = bn(2);
        add_block(pre_cands, chain, 3, 4, 1, 2, true);
        for (int yend : {2 * j - 1, 2 * j, 2 * j + 1, 2 * j + 2})
          if (yend >= 3 && yend <= static_cast<int>(chain.size()) + 1)
            add_block(pre_cands, chain, 1, 2, 3, yend, false);
        add_runs(pre_cands, chain, 1, 2 * j - 1);
        break;
      }
      default:
        throw std::logic_error("build_crossing: not a crossing regime");
    }

    std::string tag = " (" + std::to_string(i) + "," + std::to_string(j) + ")";
    const CurveClass& inner_c = cls(cb.inner);
    const CurveClass& pivot_c = cls(cb.pivot);
    const CurveClass& nat_c = cls(cn(cb.nat_k, cb.nat_l));

    std::vector<CurveClass> targets;
    std::vector<std::pair<int, int>> signs;
    for (int e1 : {1, -1})
      for (int e2 : {1, -1}) {
        targets.push_back(tv(tv(inner_c, pivot_c, e2), nat_c, e1));
        signs.push_back({e1, e2});
      }
    int which = 0;
    cb.pre = pick(pre_cands, cls(bn(i)), targets, "crossing outer word" + tag, &which);
    cb.eps = signs[static_cast<size_t>(which)].first;
    cb.epsp = signs[static_cast<size_t>(which)].second;

    CurveClass z1 = tv(inner_c, pivot_c, cb.epsp);
    if (std::llabs(symplectic_pairing(z1.iv, nat_c.iv)) != 1)
      throw std::logic_error("crossing pass: inner class does not meet outer once" + tag);

    const CurveClass& tb = cls(bn(j));
    if (rg == Regime::CrossTop) {
      if (j == 1) {
        Cands lp;
        add_runs(lp, chainA3(), 1, 3);
        add_runs(lp, chainA3(), 1, 5);
        cb.leftpass = pick(lp, z1, {tb}, "outer pass close" + tag);
      } else if (j == 2) {
        Cands c1, c2;
        c1.push_back({});
        for (int yend : {5, 6, 7})
          if (yend <= static_cast<int>(chainA1().size()) + 1)
            add_block(c1, chainA1(), 1, 2, 3, yend, false);
        c2.push_back({});
        add_block(c2, chainA3(), 5, 6, 1, 4, true);
        Cands lp;
        for (const auto& w1 : c1)
          for (const auto& w2 : c2)
            for (int tail : {0, 1, -1}) {
              TwistWord w = w1;
              w.insert(w.end(), w2.begin(), w2.end());
              if (tail != 0) w.push_back({an(2), tail});
              lp.push_back(std::move(w));
            }
        cb.leftpass = pick(lp, z1, {tb}, "outer pass close" + tag);
      } else {
        Cands c1, c2, c3;
        for (int yend : {2 * j + 1, 2 * j + 2, 2 * j + 3})
          if (yend <= static_cast<int>(chainA1().size()) + 1)
            add_block(c1, chainA1(), 1, 2, 3, yend, false);
        add_block(c2, chainA3(), 5, 6, 1, 4, true);
        for (int yend : {2 * j - 1, 2 * j, 2 * j + 1})
          if (yend <= static_cast<int>(chainA2().size()) + 1)
            add_block(c3, chainA2(), 3, 4, 5, yend, false);
        Cands mids;
        for (const auto& w1 : c1)
          for (const auto& w2 : c2)
            for (const auto& w3 : c3) {
              TwistWord w = w1;
              w.insert(w.end(), w2.begin(), w2.end());
              w.insert(w.end(), w3.begin(), w3.end());
              mids.push_back(std::move(w));
            }
        std::vector<CurveClass> midt;
        for (int s : {1, -1}) midt.push_back(tv(cls(cn(2, j)), cls(bn(2)), s));
        int mw = 0;
        TwistWord mid = pick(mids, z1, midt, "three-surface pass" + tag, &mw);
        CurveClass zmid = midt[static_cast<size_t>(mw)];
        TwistWord gam = pick(gamma_cands(j), zmid, {tb}, "branch-free close" + tag);
        cb.leftpass = mid;
        cb.leftpass.insert(cb.leftpass.end(), gam.begin(), gam.end());
      }
    } else if (rg == Regime::Cross2Low) {
      cb.leftpass = pick(gamma_cands(j), z1, {tb}, "branch-free close" + tag);
    } else if (rg == Regime::Cross1) {
      Cands lp;
      add_runs(lp, chainA(), 1, 2 * j - 1);
      cb.leftpass = pick(lp, z1, {tb}, "low pass close" + tag);
    } else {
      Cands lp;
      int rlo = 2 * g_ - j;
      add_runs(lp, chain, three_ ? posA1(rlo) : posA(rlo), three_ ? posA1(g_) : posA(g_));
      cb.leftpass = pick(lp, z1, {tb}, "middle pass close" + tag);
    }
    return cb;
  }

  // ---- chain boundary transport ------------------------------------------

  // Verified one-step shift of the interval [i..j] to [i+dir .. j+dir].
  TwistWord unit_shift(std::pair<int, int> cur, int dir) {
    const std::vector<std::string> chain = three_ ? chainA1() : chainA();
    auto pos = [&](int u) { return three_ ? posA1(u) : posA(u); };
    int y0 = pos(cur.first), y1 = pos(cur.second) + 1;
    Cands cands;
    if (dir > 0)
      add_block(cands, chain, y1 + 1, y1 + 2, y0, y1, true);
    else
      add_block(cands, chain, y0 - 2, y0 - 1, y0, y1, false);
    std::pair<int, int> next{cur.first + dir, cur.second + dir};
    return pick(cands, cls(cn(cur.first, cur.second)),
                {cls(cn(next.first, next.second))},
                "chain shift " + cn(cur.first, cur.second));
  }

  TwistWord plain_walk(std::pair<int, int> from, std::pair<int, int> to) {
    if (from.second - from.first != to.second - to.first)
      throw std::logic_error("chain transport: mismatched spans");
    TwistWord w;
    while (from != to) {
      int dir = to.first > from.first ? 1 : -1;
      TwistWord u = unit_shift(from, dir);
      w.insert(w.end(), u.begin(), u.end());
      from = {from.first + dir, from.second + dir};
    }
    return w;
  }

  // Word carrying the fused-handle boundary c(1,m) to a branch-free chain
  // boundary: c(2,m) for m >= 3, c(2,4) for the 5-curve boundary c(1,2).
  TwistWord bridge_from_c1(int msize, std::pair<int, int>* landing) {
    if (msize == 2) {
      Cands pre;
      pre.push_back({});
      add_block(pre, chainA3(), 5, 6, 1, 4, true);
      add_block(pre, chainA3(), 1, 2, 3, 6, false);
      Cands cands;
      for (const auto& w0 : pre) {
        Cands mains;
        add_block(mains, chainP(), 5, 6, 1, 4, true);
        add_block(mains, chainP(), 1, 2, 3, 6, false);
        for (const auto& w1 : mains) {
          TwistWord w = w0;
          w.insert(w.end(), w1.begin(), w1.end());
          cands.push_back(std::move(w));
        }
      }
      *landing = {2, 4};
      return pick(cands, cls(cn(1, 2)), {cls(cn(2, 4))}, "handle bridge c(1,2)");
    }
    Cands cands;
    add_block(cands, chainA3(), 5, 6, 1, 4, true);
    add_block(cands, chainA3(), 1, 2, 3, 6, false);
    *landing = {2, msize};
    try {
      return pick(cands, cls(cn(1, msize)), {cls(cn(2, msize))},
                  "handle bridge " + cn(1, msize));
    } catch (const std::runtime_error&) {
      if (msize + 1 > g_) throw;
      // Fallback: slide the whole footprint right along the chain through
      // the branch row instead of swapping the left end.
      Cands alt;
      add_block(alt, chainA2(), 2 * msize - 1, 2 * msize, 1, 2 * msize - 2, true);
      *landing = {3, msize + 1};
      return pick(alt, cls(cn(1, msize)), {cls(cn(3, msize + 1))},
                  "handle bridge " + cn(1, msize));
    }
  }

  TwistWord transport_chain_boundary(std::pair<int, int> from, std::pair<int, int> to) {
    if (from == to) return {};
    bool f1 = three_ && from.first == 1;
    bool t1 = three_ && to.first == 1;
    if (!f1 && !t1) return plain_walk(from, to);
    if (f1 && !t1) {
      std::pair<int, int> land;
      TwistWord w = bridge_from_c1(from.second, &land);
      TwistWord rest = plain_walk(land, to);
      w.insert(w.end(), rest.begin(), rest.end());
      return w;
    }
    if (!f1) {  // t1: run the bridge backwards
      std::pair<int, int> land;
      TwistWord br = bridge_from_c1(to.second, &land);
      TwistWord w = plain_walk(from, land);
      TwistWord back = inverse_word(br);
      w.insert(w.end(), back.begin(), back.end());
      return w;
    }
    std::pair<int, int> land1, land2;
    TwistWord w = bridge_from_c1(from.second, &land1);
    TwistWord br2 = bridge_from_c1(to.second, &land2);
    TwistWord mid = plain_walk(land1, land2);
    TwistWord back = inverse_word(br2);
    w.insert(w.end(), mid.begin(), mid.end());
    w.insert(w.end(), back.begin(), back.end());
    return w;
  }

  int eff_diff(std::pair<int, int> c) const {
    if (three_ && c.first == 1) return c.second - 2;
    return c.second - c.first;
  }

  // ---- the heuristic ------------------------------------------------------

  static TwistWord conj_letter(const TwistWord& tau, const std::string& name, int e) {
    TwistWord w = inverse_word(tau);
    w.push_back({name, e});
    w.insert(w.end(), tau.begin(), tau.end());
    return w;
  }

  static TwistWord substitute(const TwistWord& w, const std::string& from,
                              const TwistWord& tau, const std::string& to) {
    TwistWord out;
    for (const auto& l : w) {
      if (l.name == from) {
        TwistWord rep = conj_letter(tau, to, l.exp);
        out.insert(out.end(), rep.begin(), rep.end());
      } else {
        out.push_back(l);
      }
    }
    return out;
  }

  TwistWord heuristic(int i, int j, int k, int l, KnownPair have) {
    if (i < 1 || i > m_ || j < 1 || j > m_ || i == j)
      throw std::invalid_argument("heuristic: indices must be distinct in 1..2g-2");
    int x = residue(j - i);
    if (x < 1 || x > g_ - 2)
      throw std::invalid_argument("heuristic: index difference must be in 1..g-2");
    if (!(2 <= k && k < l && l <= g_) || l - k != x)
      throw std::invalid_argument("heuristic: chain boundary must be c(k,l) with 2<=k<l<=g and l-k the index difference");

    Regime rg = classify(i, x);
    TwistWord sb, et;
    if (rg == Regime::OneSided) {
      OneSidedBuild os = build_one_sided(i, j);
      TwistWord tau = transport_chain_boundary({k, l}, {os.ck, os.cl});
      et = os.words.to_chain;
      TwistWord back = inverse_word(tau);
      et.insert(et.end(), back.begin(), back.end());
      sb = substitute(os.words.to_far, cn(os.ck, os.cl), tau, cn(k, l));
    } else {
      CrossBuild cb = build_crossing(i, j, rg);
      TwistWord tau = transport_chain_boundary({k, l}, {cb.nat_k, cb.nat_l});
      sb = cb.pre;
      TwistWord strip = conj_letter(tau, cn(k, l), -cb.eps);
      sb.insert(sb.end(), strip.begin(), strip.end());
      sb.insert(sb.end(), cb.leftpass.begin(), cb.leftpass.end());

      et = cb.pre;
      et.insert(et.end(), cb.leftpass.begin(), cb.leftpass.end());
      et.push_back({bn(j), cb.eps});
      TwistWord lpb = inverse_word(cb.leftpass);
      et.insert(et.end(), lpb.begin(), lpb.end());
      TwistWord back = inverse_word(tau);
      et.insert(et.end(), back.begin(), back.end());
    }

    std::string tag = " (" + std::to_string(i) + "," + std::to_string(j) + ")";
    if (have == KnownPair::EndTwists) {
      if (!match(transport(cls(bn(i)), et), cls(cn(k, l))))
        throw std::runtime_error("heuristic word failed verification" + tag);
      return et;
    }
    if (!match(transport(cls(bn(i)), sb), cls(bn(j))))
      throw std::runtime_error("heuristic word failed verification" + tag);
    if (have == KnownPair::SourceAndBoundary) return sb;
    return inverse_word(sb);
  }

 private:
  const Prototype& p_;
  int g_, m_, r_;
  bool three_;
  std::map<std::string, CurveClass> cache_;
};

void append(TwistWord& w, const TwistWord& t) { w.insert(w.end(), t.begin(), t.end()); }

}  // namespace

TwistWord cij_transport_word(const Prototype& p, int i, int j, int k, int l) {
  Engine eng(p);
  auto normalize = [&](int a, int b) -> std::pair<int, int> {
    int g = p.g();
    if (b > g) {
      int na = 2 * g - b, nb = 2 * g - a;
      a = na;
      b = nb;
    }
    if (!(1 <= a && a < b && b <= g))
      throw std::invalid_argument("chain boundary indices out of range");
    return {a, b};
  };
  auto from = normalize(i, j), to = normalize(k, l);
  if (eng.eff_diff(from) != eng.eff_diff(to))
    throw std::invalid_argument("chain transport: boundaries of different length class");
  return eng.transport_chain_boundary(from, to);
}

OneSidedWords one_sided_words(const Prototype& p, int i, int j) {
  Engine eng(p);
  int x = eng.residue(j - i);
  if (i == j || x < 1 || x > p.g() - 2)
    throw std::invalid_argument("one_sided_words: index difference must be in 1..g-2");
  if (eng.classify(i, x) != Engine::Regime::OneSided)
    throw std::invalid_argument("one_sided_words: pair is not one-sided");
  return eng.build_one_sided(i, j).words;
}

TwistWord two_sided_words(const Prototype& p, int i, int j) {
  Engine eng(p);
  int x = eng.residue(j - i);
  if (i == j || x < 1 || x > p.g() - 2)
    throw std::invalid_argument("two_sided_words: index difference must be in 1..g-2");
  Engine::Regime rg = eng.classify(i, x);
  if (rg == Engine::Regime::OneSided || eng.separator_count(i, x) != 1)
    throw std::invalid_argument("two_sided_words: pair does not cross exactly one special column");
  auto cb = eng.build_crossing(i, j, rg);
  TwistWord w = cb.pre;
  w.push_back({cn(cb.nat_k, cb.nat_l), -cb.eps});
  append(w, cb.leftpass);
  if (!eng.match(eng.transport(eng.cls(bn(i)), w), eng.cls(bn(j))))
    throw std::runtime_error("two_sided_words: verification failed");
  return w;
}

TwistWord three_sided_word(const Prototype& p, int i, int j) {
  Engine eng(p);
  int x = eng.residue(j - i);
  if (i == j || x < 1 || x > p.g() - 2)
    throw std::invalid_argument("three_sided_word: index difference must be in 1..g-2");
  if (p.cs.lcase != LabelCase::Three || eng.separator_count(i, x) != 2)
    throw std::invalid_argument("three_sided_word: pair does not cross two special columns");
  auto cb = eng.build_crossing(i, j, Engine::Regime::CrossTop);
  TwistWord w = cb.pre;
  w.push_back({cn(cb.nat_k, cb.nat_l), -cb.eps});
  append(w, cb.leftpass);
  if (!eng.match(eng.transport(eng.cls(bn(i)), w), eng.cls(bn(j))))
    throw std::runtime_error("three_sided_word: verification failed");
  return w;
}

TwistWord heuristic_word(const Prototype& p, int i, int j, int k, int l,
                         KnownPair have) {
  Engine eng(p);
  return eng.heuristic(i, j, k, l, have);
}

namespace {

// Replace every c-letter by its conjugated expansion through word U1, which
// maps base to the c-curve: T(c)^e = U1 T(base)^e U1^{-1}.
TwistWord expand_c(const TwistWord& w, const std::string& cname, const TwistWord& u1,
                   const std::string& base) {
  TwistWord out;
  TwistWord u1b = inverse_word(u1);
  for (const auto& l : w) {
    if (l.name == cname) {
      append(out, u1b);
      out.push_back({base, l.exp});
      append(out, u1);
    } else {
      out.push_back(l);
    }
  }
  return out;
}

}  // namespace

TwistWord addition_word(const Prototype& p, int i, int x) {
  if (x == 0) return {};
  Engine eng(p);
  if (x < 0 || x > p.g() - 2)
    throw std::invalid_argument("addition_word: step must be in 0..g-2");
  int j1 = eng.idx(i + x), j2 = eng.idx(i + 2 * x);
  TwistWord u1 = eng.heuristic(i, j1, 2, 2 + x, KnownPair::EndTwists);
  TwistWord u2 = eng.heuristic(j1, j2, 2, 2 + x, KnownPair::SourceAndBoundary);
  TwistWord flat = expand_c(u2, cn(2, 2 + x), u1, bn(i));
  if (!eng.match(eng.transport(eng.cls(bn(j1)), flat), eng.cls(bn(j2))))
    throw std::runtime_error("addition_word: verification failed");
  return flat;
}

TwistWord subtraction_word(const Prototype& p, int i, int x) {
  if (x == 0) return {};
  Engine eng(p);
  if (x < 0 || x > p.g() - 2)
    throw std::invalid_argument("subtraction_word: step must be in 0..g-2");
  int j1 = eng.idx(i + x), j2 = eng.idx(i + 2 * x);
  TwistWord u1 = eng.heuristic(j1, j2, 2, 2 + x, KnownPair::EndTwists);
  TwistWord u2 = eng.heuristic(i, j1, 2, 2 + x, KnownPair::SourceAndBoundary);
  TwistWord flat = expand_c(u2, cn(2, 2 + x), u1, bn(j1));
  TwistWord out = inverse_word(flat);
  if (!eng.match(eng.transport(eng.cls(bn(j1)), out), eng.cls(bn(i))))
    throw std::runtime_error("subtraction_word: verification failed");
  return out;
}

EuclideanTrace euclidean_trace(const std::vector<int>& kappa,
                               std::optional<Parity> spin) {
  if (kappa.empty()) throw std::invalid_argument("empty partition");
  for (size_t k = 0; k + 1 < kappa.size(); ++k)
    if (kappa[k] > kappa[k + 1])
      throw std::invalid_argument("partition parts must be ascending");
  long long total = 0;
  int r = 0;
  for (int k : kappa) {
    if (k <= 0) throw std::invalid_argument("partition parts must be positive");
    total += k;
    r = std::gcd(r, k);
  }
  if (total % 2 != 0) throw std::invalid_argument("partition must sum to 2g-2");
  int g = static_cast<int>(total / 2) + 1;
  if (g < 4) throw std::domain_error("index reduction needs genus at least 4");
  int m = 2 * g - 2;
  if (r == m || r == g - 1)
    throw std::domain_error(
        "gcd " + std::to_string(r) +
        " is excluded: the moduli 2g-2 and g-1 carry the split (hyperelliptic) "
        "components and have no single-cylinder reduction here");

  Prototype p = build_prototype(g, kappa, spin);
  Engine eng(p);

  EuclideanTrace tr;
  tr.g = g;
  tr.kappa = kappa;
  tr.spin = spin;
  tr.r_final = r;

  std::set<int> certified(p.kept.begin(), p.kept.end());
  for (int t : certified) tr.certificates.push_back({bn(t), bn(t), {}});

  std::set<std::string> have_c;
  // Certify the shared chain boundary for step size x from the certified
  // pair (ia, ia+x), then certify the target index.
  auto ensure_c = [&](int x, int ia) {
    std::string name = cn(2, 2 + x);
    if (have_c.count(name)) return;
    int ja = eng.idx(ia + x);
    TwistWord u1 = eng.heuristic(ia, ja, 2, 2 + x, KnownPair::EndTwists);
    tr.certificates.push_back({name, bn(ia), u1});
    have_c.insert(name);
  };
  auto do_add = [&](long long i, int x) {
    int tgt = eng.idx(i + 2 * x);
    int ia = eng.idx(i), ja = eng.idx(i + x);
    if (!certified.count(ia) || !certified.count(ja))
      throw std::logic_error("trade from uncertified pair");
    if (certified.count(tgt)) return;
    ensure_c(x, ia);
    TwistWord u2 = eng.heuristic(ja, tgt, 2, 2 + x, KnownPair::SourceAndBoundary);
    tr.certificates.push_back({bn(tgt), bn(ja), u2});
    certified.insert(tgt);
  };
  auto do_sub = [&](long long i, int x) {
    int tgt = eng.idx(i);
    int ja = eng.idx(i + x), jb = eng.idx(i + 2 * x);
    if (!certified.count(ja) || !certified.count(jb))
      throw std::logic_error("trade from uncertified pair");
    if (certified.count(tgt)) return;
    ensure_c(x, ja);
    TwistWord u2 = eng.heuristic(tgt, ja, 2, 2 + x, KnownPair::SourceAndBoundary);
    tr.certificates.push_back({bn(tgt), bn(ja), inverse_word(u2)});
    certified.insert(tgt);
  };

  bool uniform = true;
  for (int k : kappa) uniform = uniform && (k == kappa[0]);
  if (!uniform) {
    long long cur_r = kappa[0], partial = kappa[0];
    for (size_t jstage = 1; jstage < kappa.size(); ++jstage) {
      long long kn = kappa[jstage];
      EuclidStage st;
      st.j = static_cast<int>(jstage);
      st.rj = cur_r;
      st.dj = partial / cur_r;
      st.k_next = kn;
      long long dividend = kn, divisor = cur_r;
      while (true) {
        st.Q.push_back(dividend / divisor);
        long long rem = dividend % divisor;
        st.R.push_back(rem);
        if (rem == 0) break;
        dividend = divisor;
        divisor = rem;
      }
      st.y.push_back(3 + partial);
      st.yp.push_back(3 + partial + kn);
      for (size_t l = 1; l <= st.Q.size(); ++l) {
        long long xl = (l == 1 ? cur_r : st.R[l - 2]);
        long long sgn = (l % 2 == 1) ? 1 : -1;
        st.y.push_back(st.y[l - 1] + sgn * st.Q[l - 1] * xl);
        st.yp.push_back(st.y[l - 1] + sgn * (st.Q[l - 1] - 1) * xl);
      }
      // Run the trade phases.
      for (size_t l = 1; l <= st.Q.size(); ++l) {
        long long xl = (l == 1 ? cur_r : st.R[l - 2]);
        long long anchor = (l == 1 ? st.y[0] - cur_r : st.yp[l - 2]);
        long long lo = std::min(st.y[l - 1], anchor);
        long long hi = std::max(st.y[l - 1], anchor);
        if (l % 2 == 1) {
          for (long long t = 1; t <= st.Q[l - 1]; ++t)
            do_add(hi + (t - 2) * xl, static_cast<int>(xl));
        } else {
          for (long long t = 1; t <= st.Q[l - 1]; ++t)
            do_sub(lo - t * xl, static_cast<int>(xl));
        }
      }
      long long new_r = std::gcd(cur_r, kn);
      partial += kn;
      long long d_next = partial / new_r;
      std::vector<long long> ps;
      for (long long q = 0; q <= d_next; ++q) ps.push_back(3 + q * new_r);
      for (int pass = 0; pass < 4; ++pass) {
        for (size_t q = 2; q < ps.size(); ++q)
          if (!certified.count(eng.idx(ps[q])) && certified.count(eng.idx(ps[q - 1])) &&
              certified.count(eng.idx(ps[q - 2])))
            do_add(ps[q - 2], static_cast<int>(new_r));
        for (size_t q = ps.size(); q-- > 0;)
          if (q + 2 < ps.size() && !certified.count(eng.idx(ps[q])) &&
              certified.count(eng.idx(ps[q + 1])) && certified.count(eng.idx(ps[q + 2])))
            do_sub(ps[q], static_cast<int>(new_r));
      }
      for (long long v : ps)
        if (!certified.count(eng.idx(v)))
          throw std::logic_error("reduction sweep left index " +
                                 std::to_string(eng.idx(v)) + " uncertified");
      tr.stages.push_back(std::move(st));
      cur_r = new_r;
    }
  }

  for (int t = 1; t <= m; ++t)
    if ((t - 3) % r == 0 || (3 - t) % r == 0) tr.targets.push_back(t);
  std::set<int> want(tr.targets.begin(), tr.targets.end());
  if (want != certified)
    throw std::logic_error("certified index set does not match the residue class");
  return tr;
}

std::string trace_to_json(const EuclideanTrace& t) {
  nlohmann::json j;
  j["g"] = t.g;
  j["kappa"] = t.kappa;
  if (t.spin)
    j["spin"] = (*t.spin == Parity::Even) ? "even" : "odd";
  else
    j["spin"] = nullptr;
  j["r"] = t.r_final;
  j["stages"] = nlohmann::json::array();
  for (const auto& st : t.stages) {
    nlohmann::json s;
    s["j"] = st.j;
    s["rj"] = st.rj;
    s["dj"] = st.dj;
    s["k_next"] = st.k_next;
    s["Q"] = st.Q;
    s["R"] = st.R;
    s["y"] = st.y;
    s["yp"] = st.yp;
    j["stages"].push_back(std::move(s));
  }
  j["targets"] = t.targets;
  j["certificates"] = nlohmann::json::array();
  for (const auto& c : t.certificates) {
    nlohmann::json e;
    e["target"] = c.target;
    e["source"] = c.source;
    e["word"] = nlohmann::json::parse(word_to_json(c.word));
    j["certificates"].push_back(std::move(e));
  }
  return j.dump(2);
}

bool verify_word(const Prototype& p, const TwistWord& w, const std::string& source,
                 const std::string& target) {
  Engine eng(p);
  const CurveClass& src = eng.cls(source);
  const CurveClass& tgt = eng.cls(target);
  return eng.match(eng.transport(src, w), tgt);
}

std::vector<long long> SymplecticMatrix::apply(const std::vector<long long>& x) const {
  if (x.size() != rows.size())
    throw std::invalid_argument("symplectic apply: dimension mismatch");
  std::vector<long long> out(rows.size(), 0);
  for (size_t a = 0; a < rows.size(); ++a)
    for (size_t b = 0; b < rows.size(); ++b) out[a] += rows[a][b] * x[b];
  return out;
}

SymplecticMatrix symplectic_of(const Prototype& p, const TwistWord& w) {
  Engine eng(p);
  int g = p.g();
  size_t n = 2 * static_cast<size_t>(g);
  SymplecticMatrix m;
  m.g = g;
  m.rows.assign(n, std::vector<long long>(n, 0));
  for (size_t k = 0; k < n; ++k) m.rows[k][k] = 1;
  for (const auto& l : w) {
    const std::vector<long long>& c = eng.cls(l.name).iv;
    // transvection matrix t = id + e * c * omega(c)^T applied on the left
    std::vector<long long> omega(n);
    for (int i = 0; i < g; ++i) {
      omega[static_cast<size_t>(i)] = c[static_cast<size_t>(g + i)];
      omega[static_cast<size_t>(g + i)] = -c[static_cast<size_t>(i)];
    }
    // (t*m)[a][b] = m[a][b] + e c[a] s[b] with s[b] = sum_k omega[k] m[k][b]
    std::vector<std::vector<long long>> next(n, std::vector<long long>(n, 0));
    std::vector<long long> s(n, 0);
    for (size_t k = 0; k < n; ++k)
      for (size_t b = 0; b < n; ++b) s[b] += omega[k] * m.rows[k][b];
    for (size_t a = 0; a < n; ++a)
      for (size_t b = 0; b < n; ++b)
        next[a][b] = m.rows[a][b] + l.exp * c[a] * s[b];
    m.rows = std::move(next);
  }
  // sanity: the pairing <m e_a, m e_b> must equal <e_a, e_b>
  auto pairing = [&](const std::vector<long long>& x, const std::vector<long long>& y) {
    long long v = 0;
    for (int i = 0; i < g; ++i)
      v += x[static_cast<size_t>(i)] * y[static_cast<size_t>(g + i)] -
           x[static_cast<size_t>(g + i)] * y[static_cast<size_t>(i)];
    return v;
  };
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b) {
      std::vector<long long> ca(n), cbv(n);
      for (size_t k = 0; k < n; ++k) {
        ca[k] = m.rows[k][a];
        cbv[k] = m.rows[k][b];
      }
      long long want = 0;
      if (b == a + static_cast<size_t>(g)) want = 1;
      if (a == b + static_cast<size_t>(g)) want = -1;
      if (pairing(ca, cbv) != want)
        throw std::logic_error("twist word image is not symplectic");
    }
  return m;
}

bool preserves_quadratic_form(const SymplecticMatrix& m, const SpinStructure& q) {
  if (q.r % 2 != 0) throw std::invalid_argument("quadratic refinement needs even modulus");
  size_t n = 2 * static_cast<size_t>(q.g);
  if (m.rows.size() != n)
    throw std::invalid_argument("matrix and framing genus mismatch");
  std::vector<long long> x(n, 0);
  while (true) {
    std::vector<long long> y = m.apply(x);
    for (auto& v : y) v = ((v % 2) + 2) % 2;
    if (q_value(q, y) != q_value(q, x)) return false;
    size_t k = 0;
    while (k < n && ++x[k] == 2) x[k++] = 0;
    if (k == n) break;
  }
  return true;
}

}  // namespace strata
