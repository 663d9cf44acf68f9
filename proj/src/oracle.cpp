#include "orbitduality/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>

namespace orbitduality {

namespace {

long long sq_sum(const std::vector<int>& v) {
  long long s = 0;
  for (int x : v) s += static_cast<long long>(x) * x;
  return s;
}

// Coset of the nu side: 1/2 + Z (odd doubled) for B and D, Z for C.
bool nu_coset(Kind k, int twice) { return (std::abs(twice) % 2 == 1) == (k != Kind::C); }

Kind nu_kind(Kind k) { return k == Kind::C ? Kind::C : Kind::D; }

}  // namespace

Partition richardson_zero(Kind k, int size, const std::vector<int>& twice) {
  if (k == Kind::A) throw DomainError("richardson_zero needs type B, C or D");
  if (static_cast<int>(twice.size()) != rank_of(k, size))
    throw DomainError("weight length does not match the rank of the factor");
  for (int x : twice)
    if ((std::abs(x) % 2) != (std::abs(twice.front()) % 2)) throw DomainError("weight coordinates mix cosets");
  std::map<int, int> blocks;
  int zeros = 0;
  for (int x : twice) {
    if (x == 0) ++zeros;
    else ++blocks[std::abs(x)];
  }
  std::vector<int> cols;
  const int residual = 2 * zeros + (size - 2 * rank_of(k, size));
  if (residual > 0) cols.push_back(residual);
  for (auto [v, m] : blocks) cols.insert(cols.end(), {m, m});
  return collapse(transpose(Partition::sorted(cols)), k);
}

MSLift richardson_pair(Kind k, const Weight& gamma) {
  std::vector<int> a, b;
  for (int x : gamma.twice) (nu_coset(k, x) ? a : b).push_back(x);
  const int size_a = 2 * static_cast<int>(a.size());
  const int size_b = 2 * static_cast<int>(b.size()) + (k == Kind::B ? 1 : 0);
  MSLift r;
  r.first = Factor{nu_kind(k), size_a, richardson_zero(nu_kind(k), size_a, a)};
  r.second = Factor{k, size_b, richardson_zero(k, size_b, b)};
  return r;
}

bool in_S(const Weight& gamma, const MarkedPartition& d) {
  if (!classify_marked(d).distinguished) throw DomainError("in_S needs a distinguished datum");
  if (gamma.rank() != rank_of(d.kind, d.lambda.total())) return false;
  const MSLift rich = richardson_pair(d.kind, gamma);
  for (const auto& lift : lifts_of(d)) {
    const Partition nu = lift.nu, eta = lift.eta();
    if (rich.first.partition == nu && rich.second.partition == eta && rich.first.size == nu.total()) return true;
    // C and D: the roles of the two factors may be exchanged.
    if (d.kind != Kind::B && rich.first.partition == eta && rich.second.partition == nu &&
        rich.first.size == eta.total())
      return true;
  }
  return false;
}

std::vector<std::vector<int>> shell(int n, long long bound) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, long long)> rec = [&](int cap, long long left) {
    if (static_cast<int>(cur.size()) == n) {
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= cap && static_cast<long long>(v) * v <= left; ++v) {
      cur.push_back(v);
      rec(v, left - static_cast<long long>(v) * v);
      cur.pop_back();
    }
  };
  int top = 0;
  while (static_cast<long long>(top + 1) * (top + 1) <= bound) ++top;
  rec(top, bound);
  return out;
}

std::vector<std::vector<int>> shell_naive(int n, long long bound) {
  int top = 0;
  while (static_cast<long long>(top + 1) * (top + 1) <= bound) ++top;
  std::set<std::vector<int>> seen;
  std::vector<int> v(n, -top);
  while (true) {
    if (sq_sum(v) <= bound) {
      std::vector<int> a;
      for (int x : v) a.push_back(std::abs(x));
      std::sort(a.begin(), a.end(), std::greater<>());
      seen.insert(a);
    }
    int i = 0;
    while (i < n && v[i] == top) v[i++] = -top;
    if (i == n) break;
    ++v[i];
  }
  return {seen.begin(), seen.end()};
}

MinCertificate verify_min(const MarkedPartition& d) {
  const MarkedFlags f = classify_marked(d);
  if (!f.distinguished || !f.special) throw DomainError("verify_min needs a special distinguished datum");
  MinCertificate c;
  c.datum = d;
  c.candidate = gamma_distinguished(d);
  const Kind k = d.kind;
  Weight cand_abs = c.candidate;
  for (int& x : cand_abs.twice) x = std::abs(x);
  const long long bound = sq_sum(c.candidate.twice);
  c.member = in_S(cand_abs, d);
  int orbits_at_min = 0;
  for (auto& v : shell(c.candidate.rank(), bound)) {
    ++c.shell_size;
    Weight w{c.candidate.kind, v};
    if (!in_S(w, d)) continue;
    ++c.members_found;
    // In type D a point with no zero coordinate stands for two W-orbits.
    const bool split = k == Kind::D && !v.empty() && v.back() != 0;
    if (sq_sum(v) < bound) {
      c.smaller_members.push_back(w);
    } else {
      orbits_at_min += split ? 2 : 1;
      if (v != cand_abs.twice || split) c.rival_members.push_back(w);
    }
  }
  c.unique_min_orbit = orbits_at_min == 1 && c.rival_members.empty();
  c.pass = c.member && c.smaller_members.empty() && c.unique_min_orbit;
  return c;
}

}  // namespace orbitduality
