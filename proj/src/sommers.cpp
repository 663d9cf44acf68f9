#include "orbitduality/sommers.hpp"

#include <algorithm>
#include <bit>
#include <functional>

namespace orbitduality {

namespace {

using Witness = std::vector<std::pair<std::string, Partition>>;

Partition general_formula(const MarkedPartition& m, Witness* w) {
  const Partition eta = m.eta();
  auto note = [&](const char* name, const Partition& p) {
    if (w) w->emplace_back(name, p);
  };
  note("eta", eta);
  switch (m.kind) {
    case Kind::C: {
      Partition e = collapse(plus(eta), Kind::B);
      note("(eta^+)_B", e);
      Partition u = unite(m.nu, e);
      note("nu u (eta^+)_B", u);
      return collapse(transpose(u), Kind::B);
    }
    case Kind::B: {
      Partition e = collapse(lower(eta), Kind::C);
      note("l(eta)_C", e);
      Partition u = unite(m.nu, e);
      note("nu u l(eta)_C", u);
      return collapse(transpose(u), Kind::C);
    }
    case Kind::D: {
      Partition e = transpose(collapse(transpose(eta), Kind::D));
      note("((eta^t)_D)^t", e);
      Partition u = unite(m.nu, e);
      note("nu u ((eta^t)_D)^t", u);
      return collapse(transpose(u), Kind::D);
    }
    default: throw DomainError("Sommers duality needs type B, C or D");
  }
}

Partition distinguished_formula(const MarkedPartition& m, Witness* w) {
  const CZero z = c_zero(m);
  if (w) {
    w->emplace_back("nu0", z.nu0);
    w->emplace_back("eta0", z.eta0);
  }
  Partition side;
  switch (m.kind) {
    case Kind::B: side = collapse(lower(z.eta0), Kind::C); break;
    case Kind::C: side = collapse(plus(z.eta0), Kind::B); break;
    case Kind::D: side = uparrow(z.eta0); break;
    default: throw DomainError("Sommers duality needs type B, C or D");
  }
  if (w) w->emplace_back("eta0 side", side);
  return transpose(unite(z.nu0, side));
}

Partition blocks_formula(const MarkedPartition& m, Witness* w) {
  const auto blocks = block_decompose(m);
  Partition acc;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    Partition d = general_formula(blocks[i], nullptr);
    if (m.kind == Kind::C && i + 1 < blocks.size()) d = minus(d);
    if (w) {
      w->emplace_back("block " + std::to_string(i + 1) + " " + to_string(blocks[i].nu), blocks[i].lambda);
      w->emplace_back("block " + std::to_string(i + 1) + " dual", d);
    }
    acc = join(acc, d);
  }
  return acc;
}

Kind block_kind(Kind input, std::size_t index) {
  if (index == 0 || input == Kind::C) return input;
  return Kind::D;
}

}  // namespace

bool is_basic_block(const MarkedPartition& b) {
  const Partition& lam = b.lambda;
  if (lam.empty()) return false;
  const bool want_odd_height = b.kind == Kind::B;
  int largest = 0;
  for (int x : lam.distinct())
    if ((height(lam, x) % 2 == 1) == want_odd_height) {
      largest = x;
      break;
    }
  if (largest == 0) return false;
  // Type C also allows the singleton, read as {largest, 0}.
  if (b.kind == Kind::C && b.nu == Partition{largest}) return true;
  const int smallest = lam.parts().back();
  if (largest == smallest) return false;
  return b.nu == Partition{largest, smallest};
}

std::vector<MarkedPartition> block_decompose(const MarkedPartition& m) {
  const std::vector<int>& L = m.lambda.parts();
  const int r = static_cast<int>(L.size());
  if (r == 0) return {m};
  const Kind X = m.kind;
  const int sup_parity = X == Kind::C ? 1 : 0;
  const int cuts = r - 1;

  std::vector<unsigned> masks;
  for (unsigned s = 0; s < (1u << cuts); ++s) masks.push_back(s);
  std::stable_sort(masks.begin(), masks.end(),
                   [](unsigned a, unsigned b) { return std::popcount(a) < std::popcount(b); });

  for (unsigned mask : masks) {
    std::vector<std::vector<int>> parts(1);
    for (int i = 0; i < r; ++i) {
      parts.back().push_back(L[i]);
      if (i < cuts && (mask >> i & 1)) parts.emplace_back();
    }
    const std::size_t k = parts.size();
    bool ok = true;
    for (std::size_t i = 0; ok && i + 1 < k; ++i) {
      const int lo = parts[i].back(), hi = parts[i + 1].front();
      if (lo == hi && ((lo % 2 + 2) % 2) != sup_parity) ok = false;
      if (X == Kind::C && parts[i].size() % 2) ok = false;
    }
    if (!ok) continue;
    std::vector<Partition> lams;
    for (std::size_t i = 0; i < k; ++i) {
      Partition p(parts[i]);
      if (!is_type(p, block_kind(X, i))) {
        ok = false;
        break;
      }
      lams.push_back(p);
    }
    if (!ok) continue;

    // Place each marked value into one block containing it.
    const std::vector<int> marks = m.nu.parts();
    std::vector<std::vector<int>> nus(k);
    std::vector<MarkedPartition> found;
    std::function<bool(std::size_t)> place = [&](std::size_t j) -> bool {
      if (j == marks.size()) {
        std::vector<MarkedPartition> blocks;
        for (std::size_t i = 0; i < k; ++i) {
          Partition nu(nus[i]);
          MarkedPartition b{block_kind(X, i), lams[i], nu, Decoration::None};
          if (!marking_problem(b.kind, b.lambda, b.nu).empty()) return false;
          if (!nu.empty() && !is_basic_block(b)) return false;
          if (X == Kind::C && nu.length() % 2 == 1 && i + 1 != k) return false;
          blocks.push_back(b);
        }
        found = std::move(blocks);
        return true;
      }
      for (std::size_t i = 0; i < k; ++i) {
        if (multiplicity(lams[i], marks[j]) == 0) continue;
        nus[i].push_back(marks[j]);
        if (place(j + 1)) return true;
        nus[i].pop_back();
      }
      return false;
    };
    if (place(0)) {
      found.front().decoration = m.decoration;
      return found;
    }
  }
  throw DomainError("no block decomposition found for " + to_string(m));
}

DualResult sommers_dual_detailed(const MarkedPartition& m, Route route) {
  if (m.kind == Kind::A) throw DomainError("Sommers duality needs type B, C or D");
  const std::string why = marking_problem(m.kind, m.lambda, m.nu);
  if (!why.empty()) throw DomainError(why);
  DualResult r;
  Partition p;
  switch (route) {
    case Route::General: p = general_formula(m, &r.witness); break;
    case Route::Distinguished: p = distinguished_formula(m, &r.witness); break;
    case Route::Blocks: p = blocks_formula(m, &r.witness); break;
  }
  const Kind out = dual_kind(m.kind);
  if (m.nu.empty()) {
    // Agrees with BVLS duality, which also knows the decoration rule.
    Orbit d = bvls_dual(m.orbit());
    if (d.partition != p) throw std::logic_error("Sommers dual with empty marking disagrees with d");
    r.orbit = d;
  } else {
    r.orbit = make_orbit(out, p);
  }
  r.decoration_unknown = out == Kind::D && is_very_even(p) && r.orbit.decoration == Decoration::None;
  return r;
}

Orbit sommers_dual(const MarkedPartition& m, Route route) { return sommers_dual_detailed(m, route).orbit; }

MarkedPartition sat_la(const LeviShape& levi, const std::vector<Partition>& gl_orbits, const MarkedPartition& core) {
  if (gl_orbits.size() != levi.gl_sizes.size()) throw DomainError("one gl orbit per gl block expected");
  if (core.lambda.total() != levi.residual) throw DomainError("core does not live on the residual factor");
  Partition lam = core.lambda;
  for (std::size_t j = 0; j < gl_orbits.size(); ++j) {
    if (gl_orbits[j].total() != levi.gl_sizes[j]) throw DomainError("gl orbit size mismatch");
    lam = unite(lam, unite(gl_orbits[j], gl_orbits[j]));
  }
  return make_marked(core.kind, lam, core.nu, Decoration::None);
}

SatInverse sat_inverse(const MarkedPartition& d) {
  SatInverse s;
  std::vector<int> core;
  for (int x : d.lambda.distinct()) {
    const int m = multiplicity(d.lambda, x);
    int keep = 0;
    if (x % 2 != epsilon(d.kind)) {
      const int marked = multiplicity(d.nu, x);
      keep = marked + (m - marked) % 2;
    }
    for (int i = 0; i < keep; ++i) core.push_back(x);
    for (int i = 0; i < (m - keep) / 2; ++i) s.gl_sizes.push_back(x);
  }
  std::sort(s.gl_sizes.begin(), s.gl_sizes.end(), std::greater<>());
  s.core = MarkedPartition{d.kind, Partition(core), d.nu, Decoration::None};
  if (d.kind == Kind::D && is_very_even(s.core.lambda)) s.core.decoration = d.decoration;
  return s;
}

std::string to_string(Route r) {
  switch (r) {
    case Route::General: return "general";
    case Route::Distinguished: return "distinguished";
    case Route::Blocks: return "blocks";
  }
  return "";
}

Route route_from_string(const std::string& s) {
  if (s == "general") return Route::General;
  if (s == "distinguished") return Route::Distinguished;
  if (s == "blocks") return Route::Blocks;
  throw ParseError("unknown route '" + s + "'");
}

}  // namespace orbitduality
