#include "orbitduality/component_groups.hpp"

#include <algorithm>

namespace orbitduality {

namespace {

std::vector<int> eps_values(Kind k, const Partition& lam) {
  std::vector<int> v;
  for (int x : lam.distinct())
    if (x % 2 != epsilon(k)) v.push_back(x);
  return v;
}

std::vector<TwoElem> subsets(const std::vector<int>& values) {
  std::vector<TwoElem> out;
  const std::size_t r = values.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << r); ++mask) {
    std::vector<int> s;
    for (std::size_t i = 0; i < r; ++i)
      if (mask >> i & 1) s.push_back(values[i]);
    out.emplace_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

void require_classical(Kind k) {
  if (k == Kind::A) throw DomainError("component groups are only tracked for types B, C, D");
}

}  // namespace

bool in_A(Kind k, const TwoElem& e) { return epsilon(k) == 1 || e.size() % 2 == 0; }

GroupData group_data(Kind k, const Partition& lam) {
  GroupData g;
  if (k == Kind::A) {
    g.trivial_kind = true;
    return g;
  }
  std::vector<int> all_eps;
  for (int x : lam.parts())
    if (x % 2 != epsilon(k)) all_eps.push_back(x);
  g.lambda_eps = Partition(all_eps);
  g.upsilon_tilde = TwoElem(all_eps);
  g.S1_nonempty = !g.upsilon_tilde.is_identity();
  const int r = static_cast<int>(g.lambda_eps.distinct().size());
  g.A_rank = epsilon(k) == 1 ? r : std::max(r - 1, 0);
  g.A_ad_rank = g.A_rank;
  if (g.S1_nonempty && in_A(k, g.upsilon_tilde)) --g.A_ad_rank;
  return g;
}

std::vector<TwoElem> A_elements(Kind k, const Partition& lam) {
  require_classical(k);
  std::vector<TwoElem> out;
  for (auto& e : subsets(eps_values(k, lam)))
    if (in_A(k, e)) out.push_back(e);
  return out;
}

bool is_markable(Kind k, const Partition& lam, int x) {
  if (x <= 0 || x % 2 == epsilon(k) || multiplicity(lam, x) == 0) return false;
  const int h = height(lam, x) % 2;
  switch (k) {
    case Kind::B: return h == 1;
    case Kind::C:
    case Kind::D: return h == 0;
    default: return false;
  }
}

Partition markable_parts(Kind k, const Partition& lam) {
  require_classical(k);
  std::vector<int> v;
  for (int x : lam.distinct())
    if (is_markable(k, lam, x)) v.push_back(x);
  return Partition(v);
}

int abar_rank(Kind k, const Partition& lam) {
  if (k == Kind::A) return 0;
  const int m = markable_parts(k, lam).length();
  return k == Kind::C ? m : std::max(m - 1, 0);
}

TwoSubgroup kernel_N(Kind k, const Partition& lam) {
  require_classical(k);
  const auto marks = markable_parts(k, lam).parts();
  std::vector<TwoElem> gens;
  for (int x : eps_values(k, lam)) {
    // first markable value <= x, i.e. lambda^m_j <= x < lambda^m_{j-1}; 0 past the end
    int below = 0;
    for (int y : marks)
      if (y <= x) {
        below = y;
        break;
      }
    gens.emplace_back(std::vector<int>{x, below});
  }
  return TwoSubgroup(gens);
}

TwoSubgroup kernel_N_distinguished(Kind k, const Partition& lam) {
  require_classical(k);
  std::vector<TwoElem> gens;
  const int r = lam.length();
  const int start = k == Kind::B ? 2 : 1;
  for (int i = start; i <= r; i += 2) gens.emplace_back(std::vector<int>{lam.row(i), lam.row(i + 1)});
  return TwoSubgroup(gens);
}

std::string marking_problem(Kind k, const Partition& lam, const Partition& nu) {
  if (k == Kind::A) return "markings need type B, C or D";
  if (!is_type(lam, k)) return to_string(lam) + " is not of type " + kind_letter(k);
  for (int x : nu.distinct()) {
    if (multiplicity(nu, x) > 1) return "marking must be multiplicity-free";
    if (multiplicity(lam, x) == 0) return "marked part " + std::to_string(x) + " is not a part";
    if (x % 2 == epsilon(k)) return "marked part " + std::to_string(x) + " has the wrong parity";
  }
  if (k != Kind::C && nu.length() % 2) return "types B and D need an even number of marked parts";
  return "";
}

MarkedPartition make_marked(Kind k, Partition lam, Partition nu, Decoration dec) {
  std::string why = marking_problem(k, lam, nu);
  if (!why.empty()) throw DomainError(why);
  if (dec != Decoration::None && !(k == Kind::D && is_very_even(lam)))
    throw DomainError("decoration only applies to very even type-D partitions");
  return MarkedPartition{k, std::move(lam), std::move(nu), dec};
}

MarkedFlags classify_marked(const MarkedPartition& m) {
  MarkedFlags f;
  f.valid = marking_problem(m.kind, m.lambda, m.nu).empty();
  if (!f.valid) return f;
  const Kind k = m.kind;
  f.reduced = true;
  for (int x : m.nu.parts())
    if (!is_markable(k, m.lambda, x)) f.reduced = false;
  f.special = true;
  for (int x : m.lambda.distinct()) {
    if (x % 2 != epsilon(k)) continue;
    const bool ht_lam_odd = height(m.lambda, x) % 2 == 1;
    const bool bad_lam = k == Kind::B ? ht_lam_odd : !ht_lam_odd;
    if (height(m.nu, x) % 2 == 1 && bad_lam) f.special = false;
  }
  f.distinguished = true;
  for (int x : m.lambda.distinct()) {
    const int mult = multiplicity(m.lambda, x);
    if (x % 2 == epsilon(k) || mult > 2 || (mult == 2 && multiplicity(m.nu, x) == 0)) f.distinguished = false;
  }
  return f;
}

std::vector<TwoElem> theta_basis(Kind k, const Partition& lam) {
  require_classical(k);
  const int r = lam.length();
  std::vector<TwoElem> out;
  if (k == Kind::B) {
    for (int i = 1; i <= (r - 1) / 2; ++i) out.emplace_back(std::vector<int>{lam.row(2 * i - 1), lam.row(2 * i + 1)});
  } else {
    const int top = k == Kind::C ? r / 2 : r / 2 - 1;
    for (int i = 1; i <= top; ++i) out.emplace_back(std::vector<int>{lam.row(2 * i), lam.row(2 * i + 2)});
  }
  return out;
}

std::vector<TwoElem> theta_tilde_basis(Kind k, const Partition& lam) {
  require_classical(k);
  const int r = lam.length();
  std::vector<TwoElem> out;
  if (k == Kind::B) {
    for (int i = 1; i <= (r - 1) / 2; ++i) out.emplace_back(std::vector<int>{lam.row(2 * i - 1), lam.row(2 * i)});
  } else {
    const int top = k == Kind::C ? r / 2 : r / 2 - 1;
    for (int i = 1; i <= top; ++i) out.emplace_back(std::vector<int>{lam.row(2 * i), lam.row(2 * i + 1)});
  }
  return out;
}

CZero c_zero(const MarkedPartition& m) {
  if (!classify_marked(m).distinguished) throw DomainError("requires distinguished datum");
  const auto theta = theta_basis(m.kind, m.lambda);
  const auto tilde = theta_tilde_basis(m.kind, m.lambda);
  const TwoSubgroup N = kernel_N(m.kind, m.lambda);
  const TwoElem C = m.element();
  const std::size_t k = theta.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    TwoElem p, q;
    for (std::size_t i = 0; i < k; ++i)
      if (mask >> i & 1) {
        p = p * theta[i];
        q = q * tilde[i];
      }
    if (N.contains(p * C)) {
      CZero z;
      z.C0 = q;
      z.nu0 = Partition(q.support());
      z.eta0 = remove(m.lambda, z.nu0);
      return z;
    }
  }
  throw std::logic_error("theta basis does not reach the class of " + to_string(m));
}

std::vector<MarkedPartition> lifts_of(const MarkedPartition& m) {
  const TwoSubgroup N = kernel_N(m.kind, m.lambda);
  const TwoElem C = m.element();
  std::vector<MarkedPartition> out;
  for (const auto& e : A_elements(m.kind, m.lambda))
    if (N.contains(e * C)) out.push_back(MarkedPartition{m.kind, m.lambda, Partition(e.support()), m.decoration});
  return out;
}

MarkedPartition reduced_representative(Kind k, const Partition& lam, const TwoElem& e) {
  const TwoSubgroup N = kernel_N(k, lam);
  for (const auto& f : subsets(markable_parts(k, lam).parts()))
    if (in_A(k, f) && N.contains(e * f)) return MarkedPartition{k, lam, Partition(f.support()), Decoration::None};
  throw DomainError("element is not in A(O)");
}

std::vector<MarkedPartition> la_data(Kind k, int n) {
  require_classical(k);
  std::vector<MarkedPartition> out;
  for (const auto& lam : partitions_of_type(k, n))
    for (const auto& f : subsets(markable_parts(k, lam).parts()))
      if (in_A(k, f)) out.push_back(MarkedPartition{k, lam, Partition(f.support()), Decoration::None});
  return out;
}

std::string to_string(const MarkedPartition& m) {
  return std::string(1, kind_letter(m.kind)) + ":<" + to_string(m.nu) + ">" + to_string(m.lambda) +
         to_string(m.decoration);
}

}  // namespace orbitduality
