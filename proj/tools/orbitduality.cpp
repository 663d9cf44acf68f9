// Command-line front end. Exit codes: 0 ok, 1 domain error or failed
// verification, 2 malformed input.
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "orbitduality/covers.hpp"
#include "orbitduality/exceptional.hpp"
#include "orbitduality/io.hpp"
#include "orbitduality/oracle.hpp"
#include "orbitduality/suites.hpp"

using namespace orbitduality;
using nlohmann::json;

namespace {

struct Out {
  json doc = json::object();
  std::vector<std::string> lines;
  void line(const std::string& s) { lines.push_back(s); }
};

std::string kind_str(Kind k) { return std::string(1, kind_letter(k)); }

std::string flag(bool b) { return b ? "yes" : "no"; }

std::vector<Partition> gl_orbits_for(const LeviShape& levi, const std::vector<std::string>& given) {
  std::vector<Partition> out;
  if (!given.empty() && given.size() != levi.gl_sizes.size())
    throw DomainError("give one --gl orbit per gl block, or none for zero orbits");
  for (std::size_t j = 0; j < levi.gl_sizes.size(); ++j)
    out.push_back(given.empty() ? Partition(std::vector<int>(levi.gl_sizes[j], 1)) : parse_partition(given[j]));
  return out;
}

json steps_json(const std::vector<StepAnalysis>& steps) {
  json a = json::array();
  for (const auto& s : steps)
    a.push_back({{"a", s.a},
                 {"before", to_string(s.before)},
                 {"after", to_string(s.after)},
                 {"abar_changes", s.abar_changes},
                 {"bind_nonbirational", s.bind_nonbirational},
                 {"actual_abar_changes", s.actual_abar_changes},
                 {"actual_nonbirational", s.actual_nonbirational}});
  return a;
}

std::string cover_text(const CoverSpec& c) {
  std::string s = "2^" + std::to_string(c.log2_degree) + "-fold cover of " + to_string(c.base);
  if (c.subgroup) {
    std::string gens;
    for (const auto& g : c.subgroup->generators()) gens += (gens.empty() ? "" : ", ") + to_string(g);
    s += ", H = <" + gens + ">";
  } else {
    s += ", H not determined";
  }
  return s;
}

json cover_json(const CoverSpec& c) {
  json j{{"base", to_string(c.base)}, {"log2_degree", c.log2_degree}};
  j["subgroup"] = c.subgroup ? to_json(*c.subgroup) : json(nullptr);
  return j;
}

std::string factor_text(const Factor& f) {
  const char* name = f.kind == Kind::C ? "sp" : "so";
  return std::string(name) + "(" + std::to_string(f.size) + ") " + to_string(f.partition);
}

void suite_lines(Out& out, const SuiteResult& r) {
  std::ostringstream s;
  s << "[" << r.id << "] " << (r.pass() ? "PASS" : "FAIL") << "  " << r.name << "  (" << r.checks << " checks, "
    << r.failure_count << " failures, " << r.seconds << " s)";
  out.line(s.str());
  for (const auto& f : r.failures) out.line("    " + f);
}

int suite_id(const std::string& name) {
  static const std::vector<std::string> names{"minimality", "gamma",      "duality", "rigidity",
                                              "gamma-group", "richardson", "points",  "kernel"};
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<int>(i) + 1;
  throw ParseError("unknown suite '" + name + "' (minimality, gamma, duality, rigidity, gamma-group, richardson, points, kernel, all)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nilpotent orbit duality combinatorics in classical types"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit one JSON document");

  std::string kind_s, text, levi_s, route_s = "general", suite = "all", group_s, orbit_filter;
  std::vector<std::string> gl_s;
  int max_rank = 5, rank = 0;
  unsigned jobs = 0;
  bool rigid = false;

  auto* collapse_c = app.add_subcommand("collapse", "collapse a partition to a type");
  collapse_c->add_option("--kind", kind_s, "B, C or D")->required();
  collapse_c->add_option("partition", text)->required();

  auto* transpose_c = app.add_subcommand("transpose", "transpose a partition");
  transpose_c->add_option("partition", text)->required();

  auto* induce_c = app.add_subcommand("induce", "induce an orbit from a Levi");
  auto* saturate_c = app.add_subcommand("saturate", "saturate an orbit from a Levi");
  for (auto* c : {induce_c, saturate_c}) {
    c->add_option("core", text, "orbit on the residual factor, e.g. B:[3]")->required();
    c->add_option("--levi", levi_s, "e.g. gl(2)+so(3)")->required();
    c->add_option("--gl", gl_s, "orbit of each gl block (default: zero orbits)");
  }

  auto* bvls_c = app.add_subcommand("bvls-dual", "Barbasch-Vogan-Lusztig-Spaltenstein dual");
  bvls_c->add_option("orbit", text)->required();

  auto* sommers_c = app.add_subcommand("sommers-dual", "Sommers dual of a marked partition");
  sommers_c->add_option("datum", text)->required();
  sommers_c->add_option("--route", route_s, "general, blocks or distinguished");

  auto* group_c = app.add_subcommand("group", "component groups of an orbit");
  group_c->add_option("orbit", text)->required();

  auto* markable_c = app.add_subcommand("markable", "markable parts and validity of a marking");
  markable_c->add_option("orbit_or_datum", text)->required();

  auto* gamma_c = app.add_subcommand("gamma", "infinitesimal character of a datum (or of a rigid cover with --rigid)");
  gamma_c->add_option("datum", text)->required();
  gamma_c->add_flag("--rigid", rigid, "treat the argument as an orbit and use its Lusztig cover");

  auto* gg_c = app.add_subcommand("gamma-group", "rank of Gamma and of Abar for the lifted orbit");
  gg_c->add_option("datum", text)->required();

  auto* ms_c = app.add_subcommand("ms-lift", "pseudo-Levi lift of a datum");
  ms_c->add_option("datum", text)->required();

  auto* d_c = app.add_subcommand("d-map", "the duality map D on a datum");
  d_c->add_option("datum", text)->required();

  auto* verify_c = app.add_subcommand("verify", "run verification suites");
  verify_c->add_option("suite", suite, "minimality, gamma, duality, rigidity, gamma-group, richardson, points, kernel, all");
  verify_c->add_option("--max-rank", max_rank, "rank bound for sweeps");
  verify_c->add_option("--jobs", jobs, "worker threads (0 = all processors)");
  verify_c->add_option("--kind", kind_s, "minimality: list certificates of one kind");
  verify_c->add_option("--rank", rank, "minimality: list certificates at one rank");

  auto* table_c = app.add_subcommand("table", "exceptional tables and their checks");
  table_c->add_option("group", group_s, "g2, f4, e6, e7, e8")->required();
  table_c->add_option("--orbit", orbit_filter, "only rows with this dual orbit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  Out out;
  int status = 0;
  try {
    if (*collapse_c) {
      const Kind k = parse_kind(kind_s);
      const Partition p = parse_partition(text);
      const Partition c = collapse(p, k);
      out.doc = {{"input", to_json(p)}, {"kind", kind_str(k)}, {"collapse", to_json(c)}};
      out.line(to_string(c));
    } else if (*transpose_c) {
      const Partition t = transpose(parse_partition(text));
      out.doc = {{"transpose", to_json(t)}};
      out.line(to_string(t));
    } else if (*induce_c || *saturate_c) {
      const Orbit core = parse_orbit(text);
      const LeviShape levi = parse_levi(core.kind, levi_s);
      if (levi.residual != core.ambient()) throw DomainError("core orbit does not live on the residual factor of the Levi");
      const auto gl = gl_orbits_for(levi, gl_s);
      check_levi(core.kind, levi_ambient(levi), levi);
      if (*induce_c) {
        const Induced r = induce(levi, gl, core);
        out.doc = {{"orbit", to_string(r.orbit)}, {"joined", to_json(r.joined)}, {"birational", r.birational},
                   {"decoration_unknown", r.decoration_unknown}};
        out.line(to_string(r.orbit) + (r.birational ? "  birational" : "  not birational"));
      } else {
        const Orbit s = saturate(levi, gl, core);
        out.doc = {{"orbit", to_string(s)}};
        out.line(to_string(s));
      }
    } else if (*bvls_c) {
      const Orbit d = bvls_dual(parse_orbit(text));
      out.doc = {{"dual", to_string(d)}, {"orbit", to_json(d)}};
      out.line(to_string(d));
    } else if (*sommers_c) {
      const MarkedPartition m = parse_marked(text);
      if (!classify_marked(m).special) std::cerr << "warning: " << to_string(m) << " is not special\n";
      const DualResult r = sommers_dual_detailed(m, route_from_string(route_s));
      json w = json::array();
      for (const auto& [name, p] : r.witness) w.push_back({{"step", name}, {"partition", to_json(p)}});
      out.doc = {{"input", to_json(m)}, {"route", route_s}, {"result", to_string(r.orbit)},
                 {"decoration_unknown", r.decoration_unknown}, {"witness", w}};
      out.line(to_string(r.orbit));
    } else if (*group_c) {
      const Orbit o = parse_orbit(text);
      const GroupData g = group_data(o);
      const TwoSubgroup N = kernel_N(o.kind, o.partition);
      json basis = json::array();
      for (const auto& t : theta_basis(o.kind, o.partition)) basis.push_back(to_json(t));
      out.doc = {{"orbit", to_string(o)},     {"A_rank", g.A_rank}, {"A_ad_rank", g.A_ad_rank},
                 {"abar_rank", abar_rank(o)}, {"N", to_json(N)},    {"theta_basis", basis}};
      out.line("A rank " + std::to_string(g.A_rank) + ", A_ad rank " + std::to_string(g.A_ad_rank) + ", Abar rank " +
               std::to_string(abar_rank(o)));
    } else if (*markable_c) {
      if (text.find('<') != std::string::npos) {
        // Split by hand: an invalid marking is reported, not thrown.
        const auto colon = text.find(':'), gt = text.find('>'), close = text.rfind(']');
        if (colon == std::string::npos || gt == std::string::npos || close == std::string::npos || close < gt ||
            text.find('<') != colon + 1)
          throw ParseError("expected K:<nu>lambda, got '" + text + "'");
        const Kind k = parse_kind(text.substr(0, colon));
        const Partition nu = parse_partition(text.substr(colon + 2, gt - colon - 2));
        const Partition lam = parse_partition(text.substr(gt + 1, close - gt));
        const std::string problem = marking_problem(k, lam, nu);
        if (!problem.empty()) {
          out.doc = {{"valid", false}, {"reason", problem}};
          out.line("invalid: " + problem);
        } else {
          const MarkedFlags f = classify_marked(make_marked(k, lam, nu));
          out.doc = {{"valid", true}, {"reduced", f.reduced}, {"special", f.special}, {"distinguished", f.distinguished}};
          out.line("valid, reduced " + flag(f.reduced) + ", special " + flag(f.special) + ", distinguished " + flag(f.distinguished));
        }
      } else {
        const Orbit o = parse_orbit(text);
        const Partition mk = markable_parts(o.kind, o.partition);
        out.doc = {{"orbit", to_string(o)}, {"markable", to_json(mk)}};
        out.line(to_string(mk));
      }
    } else if (*gamma_c) {
      const Weight w = rigid ? gamma_rigid_cover(parse_orbit(text)) : gamma_la(parse_marked(text));
      out.doc = {{"gamma", to_json(w)}, {"norm2", to_string(QVec{w.norm2()}).substr(1)}};
      out.line(to_string(w));
    } else if (*gg_c) {
      const MarkedPartition m = parse_marked(text);
      if (!classify_marked(m).special) std::cerr << "warning: " << to_string(m) << " is not special\n";
      const int g = gamma_group_rank(m), a = abar_R_rank(m);
      const DCover dc = d_map(m);
      out.doc = {{"datum", to_string(m)}, {"d_S", to_string(sommers_dual(m))}, {"cover_log2_degree", dc.cover.log2_degree},
                 {"gamma_rank", g}, {"abar_R_rank", a}, {"steps", steps_json(saturation_chain(m))}};
      out.line("Gamma rank " + std::to_string(g) + ", Abar(O_R) rank " + std::to_string(a));
    } else if (*ms_c) {
      const MarkedPartition m = parse_marked(text);
      const MSLift l = ms_lift(m);
      out.doc = {{"first", {{"kind", kind_str(l.first.kind)}, {"size", l.first.size}, {"partition", to_json(l.first.partition)}}},
                 {"second", {{"kind", kind_str(l.second.kind)}, {"size", l.second.size}, {"partition", to_json(l.second.partition)}}}};
      out.line(factor_text(l.first) + " x " + factor_text(l.second));
    } else if (*d_c) {
      const MarkedPartition m = parse_marked(text);
      const DCover dc = d_map(m);
      json steps = json::array();
      for (const auto& s : dc.steps)
        steps.push_back({{"a", s.a}, {"before", to_string(s.before)}, {"after", to_string(s.after)}, {"birational", s.birational}});
      out.doc = {{"datum", to_string(m)}, {"cover", cover_json(dc.cover)}, {"steps", steps}};
      out.line(cover_text(dc.cover));
    } else if (*verify_c) {
      SuiteOptions o{max_rank, jobs};
      if (suite == "minimality" && (!kind_s.empty() || rank > 0)) {
        // Certificate table for one kind / rank.
        json rows = json::array();
        bool all_pass = true;
        for (auto [k, n] : sizes_in_range(rank > 0 ? rank : max_rank)) {
          if (!kind_s.empty() && k != parse_kind(kind_s)) continue;
          if (rank > 0 && rank_of(k, n) != rank) continue;
          for (const auto& d : la_data(k, n)) {
            const MarkedFlags f = classify_marked(d);
            if (!f.special || !f.distinguished) continue;
            const MinCertificate c = verify_min(d);
            all_pass = all_pass && c.pass;
            rows.push_back({{"datum", to_string(d)}, {"candidate", to_string(c.candidate)}, {"shell_size", c.shell_size},
                            {"members_found", c.members_found}, {"pass", c.pass}});
            std::ostringstream s;
            s << (c.pass ? "PASS " : "FAIL ") << to_string(d) << "  " << to_string(c.candidate) << "  shell " << c.shell_size
              << ", members " << c.members_found;
            out.line(s.str());
          }
        }
        out.doc = {{"certificates", rows}, {"pass", all_pass}};
        status = all_pass ? 0 : 1;
      } else {
        std::vector<SuiteResult> results;
        if (suite == "all")
          for (int id = 1; id <= 8; ++id) results.push_back(run_suite(id, o));
        else
          results.push_back(run_suite(suite_id(suite), o));
        json a = json::array();
        bool all_pass = true;
        for (const auto& r : results) {
          suite_lines(out, r);
          a.push_back(to_json(r));
          all_pass = all_pass && r.pass();
        }
        out.doc = {{"max_rank", max_rank}, {"suites", a}, {"pass", all_pass}};
        status = all_pass ? 0 : 1;
      }
    } else if (*table_c) {
      const Group g = group_from_string(group_s);
      const Tables t = load_tables(g);
      const auto rows = orbit_filter.empty() ? t.la : table_lookup(t, orbit_filter);
      json la = json::array();
      for (const auto& r : rows) {
        la.push_back({{"datum", r.datum}, {"orbit_dual", r.orbit_dual}, {"M_orbit", r.M_orbit}, {"d_S", r.d_S},
                      {"gamma_M", to_string(r.gamma_M)},
                      {"gamma_LA", r.gamma_LA ? to_string(*r.gamma_LA) : ""},
                      {"gamma_D", r.gamma_D ? to_string(*r.gamma_D) : ""}, {"r_O", r.r_O}});
        out.line(r.orbit_dual + "  M=" + r.M_orbit + "  d_S=" + r.d_S + "  gamma=" + to_string(r.gamma_M) +
                 (r.gamma_LA ? "  min=" + to_string(*r.gamma_LA) : "") + "  r=" + r.r_O);
      }
      json gamma = json::array();
      for (const auto& r : t.gamma) {
        gamma.push_back({{"datum", r.datum}, {"orbit", r.orbit}, {"L", r.L}, {"R", r.R}, {"R_orbit", r.R_orbit},
                         {"abar_R", r.abar_R}, {"A_L", r.A_L}, {"A", r.A}, {"Gamma", r.Gamma}, {"method", r.method}});
        if (orbit_filter.empty())
          out.line("Gamma row " + r.datum + "  O=" + r.orbit + "  R=" + r.R + " " + r.R_orbit + "  Abar=" + r.abar_R +
                   "  Gamma=" + r.Gamma);
      }
      const auto conv = matching_convention(t);
      const RootSystem rs = root_system(g, conv.value_or(false));
      json checks = json::object();
      auto report = [&](const std::string& name, const TableReport& rep) {
        checks[name] = {{"checks", rep.checks}, {"failures", rep.failures}, {"pass", rep.pass()}};
        out.line(name + ": " + (rep.pass() ? "pass" : "FAIL") + " (" + std::to_string(rep.checks) + " checks)");
        for (const auto& f : rep.failures) out.line("    " + f);
      };
      report("gamma columns and minimality", verify_tables(t, rs));
      report("M types", verify_classification(t, rs));
      if (g == Group::G2 || g == Group::F4) report("shell minimality (partial)", verify_shell(t, rs));
      if (!t.gamma.empty()) report("Gamma ranks", verify_gamma_table(t));
      out.doc = {{"group", to_string(g)}, {"la", la}, {"gamma", gamma}, {"checks", checks},
                 {"convention", conv ? json(*conv ? "transposed" : "standard") : json(nullptr)}};
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n\n" << app.help();
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  if (as_json)
    std::cout << out.doc.dump(2) << "\n";
  else
    for (const auto& l : out.lines) std::cout << l << "\n";
  return status;
}
