#include "orbitduality/infchar.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>

#include "orbitduality/sommers.hpp"

namespace orbitduality {

Rational Weight::norm2() const {
  long long s = 0;
  for (int t : twice) s += static_cast<long long>(t) * t;
  return Rational(s, 4);
}

Weight canonical(const Weight& w) {
  Weight c{w.kind, {}};
  bool negative = false, zero = false;
  for (int t : w.twice) {
    c.twice.push_back(std::abs(t));
    if (t < 0) negative = !negative;
    if (t == 0) zero = true;
  }
  std::sort(c.twice.begin(), c.twice.end(), std::greater<>());
  if (w.kind == Kind::D && negative && !zero) c.twice.back() = -c.twice.back();
  return c;
}

bool w_equivalent(const Weight& a, const Weight& b) {
  if (a.kind != b.kind || a.rank() != b.rank()) throw DomainError("weights of different kind or rank");
  return canonical(a) == canonical(b);
}

bool single_coset(const Weight& w) {
  for (int t : w.twice)
    if ((std::abs(t) - std::abs(w.twice.front())) % 2) return false;
  return true;
}

Weight rho_plus(const Partition& q, int target, Kind kind) {
  Weight w{kind, {}};
  for (int x : q.parts())
    for (int t = x - 1; t > 0; t -= 2) w.twice.push_back(t);
  if (static_cast<int>(w.twice.size()) > target) throw DomainError("rho+ target length too small");
  w.twice.resize(target, 0);
  std::sort(w.twice.begin(), w.twice.end(), std::greater<>());
  return w;
}

Weight rho_plus(const Partition& q, Kind kind) { return rho_plus(q, q.total() / 2, kind); }

namespace {

// Move a box down inside every pair (q_i, q_{i+1}) with i of the given parity
// and a gap of at least two; rows past the end are zero.
std::vector<int> balance_pairs(std::vector<int> v, int first) {
  v.push_back(0);
  for (std::size_t i = first; i + 1 < v.size(); i += 2)
    if (v[i] >= v[i + 1] + 2) {
      --v[i];
      ++v[i + 1];
    }
  return v;
}

}  // namespace

Partition f0(const Partition& q) { return Partition::sorted(balance_pairs(q.parts(), 0)); }

Partition f1(const Partition& q) {
  if (q.empty()) return Partition{1};
  std::vector<int> v = balance_pairs(q.parts(), 1);
  ++v[0];
  return Partition::sorted(v);
}

Partition f_map(int eps, const Partition& q) { return eps ? f1(q) : f0(q); }

XYG xy_g(const Partition& q) {
  XYG r;
  std::vector<int> x, y, g;
  for (int v : q.distinct()) {
    const int m = multiplicity(q, v);
    if (m > 2) throw DomainError("xy_g needs multiplicities at most 2");
    if (m == 1) {
      x.push_back(v);
    } else {
      y.insert(y.end(), {v, v});
      g.insert(g.end(), {v + 1, v - 1});
    }
  }
  r.x = Partition(x);
  r.y = Partition(y);
  r.g = Partition::sorted(g);
  return r;
}

Weight gamma_rigid_cover(const Orbit& o) {
  const XYG s = xy_g(transpose(o.partition));
  const Partition arg = unite(s.g, f_map(epsilon(o.kind), s.x));
  return rho_plus(arg, rank_of(o.kind, o.ambient()), o.kind);
}

Weight gamma_distinguished(const MarkedPartition& core) {
  const CZero z = c_zero(core);
  const Kind g = dual_kind(core.kind);
  return rho_plus(unite(uparrow(z.nu0), z.eta0), rank_of(core.kind, core.lambda.total()), g);
}

Weight gamma_la(const MarkedPartition& d) {
  const SatInverse s = sat_inverse(d);
  Weight w = gamma_distinguished(s.core);
  for (int a : s.gl_sizes)
    for (int j = 0; j < a; ++j) w.twice.push_back(std::abs(a - 1 - 2 * j));
  return canonical(w);
}

std::string half_string(int twice) {
  if (twice % 2 == 0) return std::to_string(twice / 2);
  return std::to_string(twice) + "/2";
}

std::string to_string(const Weight& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.twice.size(); ++i) {
    if (i) s += ",";
    s += half_string(w.twice[i]);
  }
  return s + ")";
}

}  // namespace orbitduality
