#include "orbitduality/suites.hpp"

#include <chrono>
#include <map>
#include <mutex>

#include "orbitduality/covers.hpp"
#include "orbitduality/exceptional.hpp"
#include "orbitduality/oracle.hpp"

namespace orbitduality {

namespace {

constexpr std::size_t kMaxMessages = 20;

template <class F>
SuiteResult timed(int id, const std::string& name, F&& body) {
  SuiteResult r;
  r.id = id;
  r.name = name;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.check(false, std::string("unexpected exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

// Per-item results computed in parallel and folded in order.
struct Local {
  long long checks = 0;
  std::vector<std::string> failures;
  void check(bool ok, const std::string& m) {
    ++checks;
    if (!ok) failures.push_back(m);
  }
};

template <class T, class F>
void sweep(SuiteResult& r, const std::vector<T>& items, unsigned jobs, F&& f) {
  std::vector<Local> out(items.size());
  parallel_for(items.size(), jobs, [&](std::size_t i) {
    try {
      f(items[i], out[i]);
    } catch (const std::exception& e) {
      out[i].check(false, std::string("exception: ") + e.what());
    }
  });
  for (const auto& l : out) {
    r.checks += l.checks;
    for (const auto& m : l.failures) {
      ++r.failure_count;
      if (r.failures.size() < kMaxMessages) r.failures.push_back(m);
    }
  }
}

bool same_cover(const Factor& a, const Factor& b) { return a.kind == b.kind && a.size == b.size && a.partition == b.partition; }

std::string factor_string(const Factor& f) { return std::string(1, kind_letter(f.kind)) + to_string(f.partition); }

}  // namespace

void SuiteResult::check(bool ok, const std::string& message) {
  ++checks;
  if (ok) return;
  ++failure_count;
  if (failures.size() < kMaxMessages) failures.push_back(message);
}

std::vector<std::pair<Kind, int>> sizes_in_range(int max_rank) {
  std::vector<std::pair<Kind, int>> out;
  for (int n = 1; n <= max_rank; ++n) out.push_back({Kind::B, 2 * n + 1});
  for (int n = 1; n <= max_rank; ++n) out.push_back({Kind::C, 2 * n});
  for (int n = 2; n <= max_rank; ++n) out.push_back({Kind::D, 2 * n});
  return out;
}

std::vector<MarkedPartition> data_in_range(int max_rank, bool special_only, bool distinguished_only) {
  std::vector<MarkedPartition> out;
  for (auto [k, n] : sizes_in_range(max_rank))
    for (auto& d : la_data(k, n)) {
      const MarkedFlags f = classify_marked(d);
      if ((special_only && !f.special) || (distinguished_only && !f.distinguished)) continue;
      out.push_back(d);
    }
  return out;
}

SuiteResult suite_minimality(const SuiteOptions& o) {
  return timed(1, "minimality of gamma by shell enumeration", [&](SuiteResult& r) {
    for (int n = 1; n <= 3; ++n)
      for (long long b : {5, 20, 41})
        r.check(shell(n, b) == shell_naive(n, b), "shell enumerator disagrees with the box scan at n=" + std::to_string(n));
    const auto data = data_in_range(o.max_rank, true, true);
    std::vector<long long> shell_sizes(data.size());
    std::vector<std::size_t> index(data.size());
    for (std::size_t i = 0; i < data.size(); ++i) index[i] = i;
    sweep(r, index, o.jobs, [&](std::size_t i, Local& l) {
      const MinCertificate c = verify_min(data[i]);
      shell_sizes[i] = c.shell_size;
      std::string why;
      if (!c.member) why += " candidate not in S;";
      if (!c.smaller_members.empty()) why += " shorter member " + to_string(c.smaller_members.front()) + ";";
      if (!c.unique_min_orbit) why += " rival minimum;";
      l.check(c.pass, to_string(data[i]) + ": candidate " + to_string(c.candidate) + why);
    });
    long long total = 0;
    for (long long s : shell_sizes) total += s;
    r.detail = {{"data", data.size()}, {"shell_points", total}};
  });
}

SuiteResult suite_gamma_consistency(const SuiteOptions& o) {
  return timed(2, "gamma of a datum equals gamma of the rigid cover of its dual", [&](SuiteResult& r) {
    const auto data = data_in_range(o.max_rank, true, true);
    sweep(r, data, o.jobs, [&](const MarkedPartition& d, Local& l) {
      const Weight a = canonical(gamma_la(d));
      const Weight b = canonical(gamma_rigid_cover(sommers_dual(d)));
      l.check(a.twice == b.twice, to_string(d) + ": " + to_string(a) + " vs " + to_string(b));
    });
    r.detail = {{"data", data.size()}};
  });
}

SuiteResult suite_duality(const SuiteOptions& o) {
  return timed(3, "duality identities, route agreement, injectivity", [&](SuiteResult& r) {
    const int top = o.max_rank + 1;  // ambient <= 13 / 12 / 12 at the default bound
    std::vector<std::pair<Kind, int>> sizes;
    for (int n = 1; 2 * n + 1 <= 2 * top + 1; ++n) sizes.push_back({Kind::B, 2 * n + 1});
    for (int n = 1; n <= top; ++n) sizes.push_back({Kind::C, 2 * n});
    for (int n = 2; n <= top; ++n) sizes.push_back({Kind::D, 2 * n});

    sweep(r, sizes, o.jobs, [&](const std::pair<Kind, int>& kn, Local& l) {
      const auto [k, n] = kn;
      const auto orbits = enumerate_orbits(k, n);
      for (const auto& x : orbits) {
        const Orbit d1 = bvls_dual(x), d3 = bvls_dual(bvls_dual(d1));
        l.check(d1 == d3, to_string(x) + ": d^3 = " + to_string(d3) + " but d = " + to_string(d1));
        const Orbit s = sommers_dual(make_marked(k, x.partition, {}, x.decoration));
        l.check(s.partition == d1.partition, to_string(x) + ": Sommers dual with trivial class differs from d");
      }
      for (const auto& x : orbits)
        for (const auto& y : orbits) {
          if (x.partition == y.partition || !dominates(x.partition, y.partition)) continue;
          const Partition dx = bvls_dual(x).partition, dy = bvls_dual(y).partition;
          l.check(dominates(dy, dx), to_string(x) + " >= " + to_string(y) + " but duals are not reversed");
        }
      // Route agreement and injectivity on special distinguished data.
      std::map<std::pair<Partition, Decoration>, MarkedPartition> seen;
      for (const auto& m : la_data(k, n)) {
        const Orbit g = sommers_dual(m, Route::General);
        const Orbit b = sommers_dual(m, Route::Blocks);
        l.check(g == b, to_string(m) + ": general " + to_string(g) + " vs blocks " + to_string(b));
        const MarkedFlags f = classify_marked(m);
        if (!f.distinguished) continue;
        const Orbit s = sommers_dual(m, Route::Distinguished);
        l.check(g == s, to_string(m) + ": general " + to_string(g) + " vs shortcut " + to_string(s));
        if (!f.special) continue;
        auto [it, fresh] = seen.emplace(std::make_pair(g.partition, g.decoration), m);
        l.check(fresh, to_string(m) + " and " + to_string(it->second) + " have the same dual " + to_string(g));
      }
    });
    r.detail = {{"sizes", sizes.size()}};
  });
}

SuiteResult suite_rigidity(const SuiteOptions& o) {
  return timed(4, "Lusztig covers of special distinguished duals are birationally rigid", [&](SuiteResult& r) {
    const auto data = data_in_range(o.max_rank, true, true);
    sweep(r, data, o.jobs, [&](const MarkedPartition& d, Local& l) {
      const CoverSpec c = lusztig_cover(sommers_dual(d));
      const RigidityFlags f = rigidity(c);
      l.check(f.birationally_rigid, to_string(d) + ": cover of " + to_string(c.base) + " leaves=" +
                                       std::to_string(f.no_codim2_leaves) + " h2=" + std::to_string(f.h2_zero));
    });
    r.detail = {{"data", data.size()}};
  });
}

SuiteResult suite_gamma_groups(const SuiteOptions& o) {
  return timed(5, "Gamma rank equals Abar rank of the lifted orbit", [&](SuiteResult& r) {
    const auto data = data_in_range(o.max_rank, true, false);
    sweep(r, data, o.jobs, [&](const MarkedPartition& d, Local& l) {
      const int g = gamma_group_rank(d), a = abar_R_rank(d);
      l.check(g == a, to_string(d) + ": Gamma rank " + std::to_string(g) + ", Abar rank " + std::to_string(a));
      l.check(gamma_group_rank(d, true) == g, to_string(d) + ": Gamma rank depends on the gl order");
      for (const auto& s : saturation_chain(d)) {
        const std::string at = to_string(d) + " step a=" + std::to_string(s.a) + " onto " + to_string(s.before);
        l.check(s.abar_changes == s.bind_nonbirational, at + ": Abar condition and non-birationality condition disagree");
        l.check(s.abar_changes == s.actual_abar_changes, at + ": Abar condition does not match the actual rank change");
        l.check(s.bind_nonbirational == s.actual_nonbirational, at + ": induction condition does not match the actual induction");
      }
      if (d.nu.empty()) {
        const int deg = d_map(d).cover.log2_degree;
        l.check(deg == abar_rank(d.kind, d.lambda), to_string(d) + ": D cover has degree 2^" + std::to_string(deg));
      }
    });
    // The non-special witness breaks both sides in the documented direction.
    const MarkedPartition w = make_marked(Kind::B, {5, 4, 4, 3, 1}, {5, 1});
    const int wg = gamma_group_rank(w), wa = abar_R_rank(w);
    r.check(wg == 1 && wa == 0, "non-special witness: expected Gamma rank 1 and Abar rank 0, got " + std::to_string(wg) + " and " + std::to_string(wa));
    bool step_breaks = false;
    for (const auto& s : saturation_chain(w))
      if (s.a == 4 && !s.abar_changes && s.bind_nonbirational && s.actual_nonbirational) step_breaks = true;
    r.check(step_breaks, "non-special witness: step a=4 should be non-birational without an Abar jump");
    r.detail = {{"data", data.size()}, {"witness", {{"gamma_rank", wg}, {"abar_R_rank", wa}}}};
  });
}

SuiteResult suite_richardson(const SuiteOptions& o) {
  return timed(6, "Richardson pair from gamma equals the saturation pair", [&](SuiteResult& r) {
    const auto data = data_in_range(o.max_rank, true, false);
    sweep(r, data, o.jobs, [&](const MarkedPartition& d, Local& l) {
      const MSLift a = richardson_pair(d.kind, gamma_la(d)), b = ms_lift(d);
      l.check(same_cover(a.first, b.first) && same_cover(a.second, b.second),
              to_string(d) + ": Richardson " + factor_string(a.first) + " x " + factor_string(a.second) + ", lift " +
                  factor_string(b.first) + " x " + factor_string(b.second));
    });
    const MarkedPartition w = make_marked(Kind::B, {5, 4, 4, 3, 1}, {5, 1});
    const MSLift a = richardson_pair(w.kind, gamma_la(w)), b = ms_lift(w);
    r.check(a.first.partition == Partition{5, 5, 3, 3} && b.first.partition == Partition{5, 4, 4, 3},
            "non-special witness: expected Richardson [5,5,3,3] against lift [5,4,4,3], got " + factor_string(a.first) +
                " and " + factor_string(b.first));
    r.detail = {{"data", data.size()},
                {"witness", {{"richardson", factor_string(a.first)}, {"lift", factor_string(b.first)}}}};
  });
}

SuiteResult suite_point_values(const SuiteOptions&) {
  return timed(7, "point values and exceptional tables", [&](SuiteResult& r) {
    const MarkedPartition w = make_marked(Kind::B, {5, 4, 4, 3, 1}, {5, 1});
    const std::string g = to_string(gamma_la(w));
    r.check(g == "(5/2,3/2,3/2,3/2,1/2,1/2,1/2,1/2)", "gamma of the witness is " + g);
    const DCover dc = d_map(w);
    r.check(dc.cover.base == Orbit{Kind::C, Partition{4, 4, 4, 2, 2}, Decoration::None} && dc.cover.log2_degree == 1,
            "D of the witness is a 2^" + std::to_string(dc.cover.log2_degree) + " cover of " + to_string(dc.cover.base));
    r.check(to_string(sommers_dual(w)) == "C:[4,4,4,2,2]", "Sommers dual of the witness is " + to_string(sommers_dual(w)));

    nlohmann::json tables = nlohmann::json::object();
    auto merge = [&](const std::string& what, const TableReport& t) {
      r.checks += t.checks - 1;
      r.check(t.pass(), what + ": " + (t.failures.empty() ? "" : t.failures.front()));
      for (std::size_t i = 1; i < t.failures.size(); ++i) {
        ++r.failure_count;
        if (r.failures.size() < kMaxMessages) r.failures.push_back(what + ": " + t.failures[i]);
      }
      tables[what] = {{"checks", t.checks}, {"failures", t.failures.size()}};
    };
    for (Group grp : {Group::G2, Group::F4, Group::E6, Group::E7, Group::E8}) {
      const Tables t = load_tables(grp);
      const std::string name = to_string(grp);
      if (grp == Group::G2 || grp == Group::F4) {
        const auto conv = matching_convention(t);
        r.check(conv.has_value(), name + ": no Cartan convention reproduces the M types");
        const RootSystem rs = root_system(grp, conv.value_or(false));
        r.check(rs.positive.size() == (grp == Group::G2 ? 6u : 24u), name + ": wrong number of positive roots");
        merge(name + " tables", verify_tables(t, rs));
        merge(name + " classification", verify_classification(t, rs));
        merge(name + " shell (partial)", verify_shell(t, rs));
      } else {
        merge(name + " tables", verify_tables(t, root_system(grp)));
      }
      if (grp != Group::E8) merge(name + " Gamma table", verify_gamma_table(t));
    }
    const Tables f4 = load_tables(Group::F4);
    const auto rows = table_lookup(f4, "F4(a2)");
    r.check(rows.front().gamma_LA && to_string(*rows.front().gamma_LA) == "(1,0,1,0)", "F4(a2) minimum is not (1,0,1,0)");
    r.detail = {{"gamma", g}, {"tables", tables}};
  });
}

SuiteResult suite_kernel(const SuiteOptions& o) {
  return timed(8, "collapse oracle, component group orders, two-row norm inequality", [&](SuiteResult& r) {
    const int top = 2 * o.max_rank + 4;  // 14 at the default bound
    std::vector<int> sizes;
    for (int n = 1; n <= top; ++n) sizes.push_back(n);
    sweep(r, sizes, o.jobs, [&](int n, Local& l) {
      for (Kind k : {Kind::B, Kind::C, Kind::D}) {
        if ((k == Kind::B) != (n % 2 == 1)) continue;
        const auto typed = partitions_of_type(k, n);
        for (const auto& p : partitions_of(n)) {
          std::vector<Partition> below;
          for (const auto& q : typed)
            if (dominates(p, q)) below.push_back(q);
          std::vector<Partition> maxima;
          for (const auto& q : below) {
            bool top_q = true;
            for (const auto& s : below)
              if (s != q && dominates(s, q)) top_q = false;
            if (top_q) maxima.push_back(q);
          }
          const Partition c = collapse(p, k);
          l.check(maxima.size() == 1 && maxima.front() == c,
                  std::string(1, kind_letter(k)) + "-collapse of " + to_string(p) + " is " + to_string(c));
        }
        if (n > 2 * o.max_rank + 3) continue;
        for (const auto& lam : typed) {
          const long long a = static_cast<long long>(A_elements(k, lam).size());
          const long long nk = static_cast<long long>(kernel_N(k, lam).elements().size());
          l.check(a % nk == 0 && a / nk == (1LL << abar_rank(k, lam)),
                  std::string(1, kind_letter(k)) + to_string(lam) + ": |A|/|N| = " + std::to_string(a) + "/" + std::to_string(nk));
        }
      }
    });
    const int qmax = 2 * o.max_rank + 2;
    for (int q1 = 1; q1 <= qmax; ++q1)
      for (int q2 = 1; q2 <= q1; ++q2) {
        const Partition q{q1, q2};
        const Partition up = uparrow2(q);
        const int target = (q1 + q2) / 2 + 1;
        const Rational a = rho_plus(q, target).norm2(), b = rho_plus(up, target).norm2();
        r.check(a < b, "two-row " + to_string(q) + ": norm does not grow under the box move");
      }
  });
}

std::vector<std::function<SuiteResult(const SuiteOptions&)>> all_suites() {
  return {suite_minimality, suite_gamma_consistency, suite_duality, suite_rigidity,
          suite_gamma_groups, suite_richardson, suite_point_values, suite_kernel};
}

SuiteResult run_suite(int id, const SuiteOptions& o) {
  const auto s = all_suites();
  if (id < 1 || id > static_cast<int>(s.size())) throw DomainError("no suite " + std::to_string(id));
  return s[id - 1](o);
}

nlohmann::json to_json(const SuiteResult& r) {
  return {{"id", r.id},
          {"name", r.name},
          {"pass", r.pass()},
          {"checks", r.checks},
          {"failure_count", r.failure_count},
          {"failures", r.failures},
          {"seconds", r.seconds},
          {"detail", r.detail}};
}

}  // namespace orbitduality
