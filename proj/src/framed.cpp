#include "strata/framed.hpp"

#include <deque>
#include <stdexcept>

#include "strata/winding.hpp"

namespace strata {

namespace {

int norm(long long v, int r) { return static_cast<int>(((v % r) + r) % r); }

void check_class(const FramedClass& x, int r) {
  if (r < 1 || x.coords.empty() || x.coords.size() % 2 != 0)
    throw std::invalid_argument("malformed framed class");
}

}  // namespace

FramedClass framed_class_of_path(const Prototype& p, const CurvePath& path, int r) {
  if (r < 1) throw std::invalid_argument("modulus must be positive");
  FramedClass out;
  for (long long c : homology_coords(p, path)) out.coords.push_back(norm(c, r));
  out.mu = wn_mod(p.o, path, r);
  return out;
}

int framed_pairing(const FramedClass& x, const FramedClass& t, int r) {
  check_class(x, r);
  if (x.coords.size() != t.coords.size())
    throw std::invalid_argument("framed class size mismatch");
  size_t g = x.coords.size() / 2;
  long long s = 0;
  for (size_t i = 0; i < g; ++i)
    s += static_cast<long long>(x.coords[i]) * t.coords[g + i] -
         static_cast<long long>(x.coords[g + i]) * t.coords[i];
  return norm(s, r);
}

int spin_value(const SpinStructure& phi, const SpinStructure& ref, const FramedClass& t) {
  if (phi.r != ref.r || phi.g != ref.g)
    throw std::invalid_argument("framings live on different surfaces");
  check_class(t, phi.r);
  if (static_cast<int>(t.coords.size()) != 2 * phi.g)
    throw std::invalid_argument("framed class size mismatch");
  long long v = t.mu;
  for (int k = 0; k < 2 * phi.g; ++k)
    v += static_cast<long long>(t.coords[k]) * (phi.vals[k] - ref.vals[k]);
  return norm(v, phi.r);
}

FramedClass twist_transvection(const FramedClass& x, const FramedClass& t, int r, int e) {
  check_class(x, r);
  check_class(t, r);
  int c = norm(static_cast<long long>(e) * framed_pairing(x, t, r), r);
  FramedClass out = x;
  for (size_t k = 0; k < x.coords.size(); ++k)
    out.coords[k] = norm(x.coords[k] + static_cast<long long>(c) * t.coords[k], r);
  out.mu = norm(x.mu + static_cast<long long>(c) * t.mu, r);
  return out;
}

SpinStructure twist_pullback(const SpinStructure& phi, const SpinStructure& ref,
                             const FramedClass& t, int e) {
  int r = phi.r;
  int val_t = spin_value(phi, ref, t);
  SpinStructure out = phi;
  size_t g = phi.g;
  // <e_k, t>: basis vectors pair with t through the symplectic form,
  // <a_i, t> = t_{g+i} and <b*_i, t> = -t_i.
  for (size_t i = 0; i < g; ++i) {
    out.vals[i] = norm(phi.vals[i] +
                           static_cast<long long>(e) * t.coords[g + i] * val_t,
                       r);
    out.vals[g + i] = norm(phi.vals[g + i] -
                               static_cast<long long>(e) * t.coords[i] * val_t,
                           r);
  }
  return out;
}

std::vector<FramedClass> twist_generators(const Prototype& p, int r) {
  std::vector<FramedClass> out;
  for (const std::string& nm : twist_generator_names(p))
    out.push_back(framed_class_of_path(p, realize_on_prototype(p, nm), r));
  return out;
}

std::vector<std::string> twist_generator_names(const Prototype& p) {
  std::vector<std::string> names;
  for (int i = 1; i <= p.g(); ++i) names.push_back("a" + std::to_string(i));
  for (int i = 1; i <= p.g() - 1; ++i) names.push_back("a" + std::to_string(i) + "'");
  for (int j = 1; j <= 2 * p.g() - 2; ++j) names.push_back("b" + std::to_string(j));
  return names;
}

OrbitResult spin_twist_orbit(const Prototype& ref, int r, const SpinStructure& start,
                             long long cap) {
  SpinStructure base = induced_spin(ref, r);
  if (start.r != r || start.g != ref.g())
    throw std::invalid_argument("start framing does not match the reference");
  std::vector<FramedClass> gens = twist_generators(ref, r);

  std::set<std::vector<int>> seen;
  std::deque<SpinStructure> queue;
  seen.insert(start.vals);
  queue.push_back(start);
  OrbitResult res;
  while (!queue.empty()) {
    SpinStructure cur = queue.front();
    queue.pop_front();
    for (const FramedClass& t : gens)
      for (int e : {1, -1}) {
        SpinStructure nxt = twist_pullback(cur, base, t, e);
        if (seen.insert(nxt.vals).second) {
          if (cap >= 0 && static_cast<long long>(seen.size()) > cap) {
            res.capped = true;
            res.size = static_cast<long long>(seen.size());
            return res;
          }
          queue.push_back(nxt);
        }
      }
  }
  res.size = static_cast<long long>(seen.size());
  return res;
}

FramedClass johnson_lift(const std::vector<int>& x, const std::vector<int>& y) {
  if (x.size() != y.size() || x.size() % 2 != 0)
    throw std::invalid_argument("johnson_lift: classes must have equal even size");
  size_t g = x.size() / 2;
  auto mu2 = [g](const std::vector<int>& v) {
    int m = 0;
    for (size_t i = 0; i < g; ++i) m += (v[i] & 1) * (v[g + i] & 1);
    return m & 1;
  };
  int pair = 0;
  for (size_t i = 0; i < g; ++i)
    pair += (x[i] & 1) * (y[g + i] & 1) + (x[g + i] & 1) * (y[i] & 1);
  FramedClass out;
  out.coords.resize(x.size());
  for (size_t k = 0; k < x.size(); ++k) out.coords[k] = (x[k] + y[k]) & 1;
  out.mu = (mu2(x) + mu2(y) + pair) & 1;
  return out;
}

std::set<std::vector<int>> transvection_orbit(const std::vector<FramedClass>& gens,
                                              const std::vector<int>& start, int r,
                                              long long cap, bool* capped) {
  if (capped) *capped = false;
  std::set<std::vector<int>> seen;
  std::deque<FramedClass> queue;
  FramedClass s0{start, 0};
  seen.insert(start);
  queue.push_back(s0);
  while (!queue.empty()) {
    FramedClass cur = queue.front();
    queue.pop_front();
    for (const FramedClass& t : gens)
      for (int e : {1, -1}) {
        FramedClass nxt = twist_transvection(cur, t, r, e);
        if (seen.insert(nxt.coords).second) {
          if (cap >= 0 && static_cast<long long>(seen.size()) > cap) {
            if (capped) *capped = true;
            return seen;
          }
          queue.push_back(nxt);
        }
      }
  }
  return seen;
}

}  // namespace strata
