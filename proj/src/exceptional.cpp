#include "orbitduality/exceptional.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#ifndef ORBITDUALITY_TABLES_DIR
#define ORBITDUALITY_TABLES_DIR "data/tables"
#endif

namespace orbitduality {

namespace {

// boost::rational compared against a plain int literal recurses; compare
// against a Rational instead.
const Rational kZero{0};

std::string lower(std::string s) {
  for (auto& ch : s) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return s;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(' ');
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(' ') - b + 1);
}

std::vector<std::vector<int>> cartan_rows(Group g) {
  switch (g) {
    case Group::G2: return {{2, -1}, {-3, 2}};
    case Group::F4: return {{2, -1, 0, 0}, {-1, 2, -2, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}};
    default: break;
  }
  // Simply laced E_n: chain 1-3-4-...-n, node 2 attached to 4.
  const int n = group_rank(g);
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  auto link = [&](int i, int j) { a[i - 1][j - 1] = a[j - 1][i - 1] = -1; };
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  link(1, 3);
  link(2, 4);
  for (int i = 3; i < n; ++i) link(i, i + 1);
  return a;
}

Rational pair(const std::vector<int>& k, const QVec& c) {
  Rational s = 0;
  for (std::size_t j = 0; j < k.size(); ++j) s += k[j] * c[j];
  return s;
}

Rational quad(const QMatrix& g, const std::vector<Rational>& x, const std::vector<Rational>& y) {
  Rational s = 0;
  for (int i = 0; i < g.rows(); ++i)
    for (int j = 0; j < g.cols(); ++j)
      if (x[i] != kZero && y[j] != kZero) s += x[i] * g(i, j) * y[j];
  return s;
}

std::vector<Rational> to_q(const std::vector<int>& v) { return {v.begin(), v.end()}; }

}  // namespace

Group group_from_string(const std::string& s) {
  const std::string l = lower(s);
  if (l == "g2") return Group::G2;
  if (l == "f4") return Group::F4;
  if (l == "e6") return Group::E6;
  if (l == "e7") return Group::E7;
  if (l == "e8") return Group::E8;
  throw ParseError("unknown exceptional group '" + s + "'");
}

std::string to_string(Group g) {
  switch (g) {
    case Group::G2: return "G2";
    case Group::F4: return "F4";
    case Group::E6: return "E6";
    case Group::E7: return "E7";
    case Group::E8: return "E8";
  }
  return "?";
}

int group_rank(Group g) {
  switch (g) {
    case Group::G2: return 2;
    case Group::F4: return 4;
    case Group::E6: return 6;
    case Group::E7: return 7;
    case Group::E8: return 8;
  }
  return 0;
}

QVec parse_qvec(const std::string& s) {
  const auto open = s.find('('), close = s.find(')');
  if (open == std::string::npos || close == std::string::npos || close < open)
    throw ParseError("expected (a,b,...)[/d], got '" + s + "'");
  long long den = 1;
  const std::string tail = trim(s.substr(close + 1));
  if (!tail.empty()) {
    if (tail[0] != '/') throw ParseError("bad vector suffix in '" + s + "'");
    den = std::stoll(tail.substr(1));
    if (den <= 0) throw ParseError("denominator must be positive in '" + s + "'");
  }
  QVec v;
  std::stringstream in(s.substr(open + 1, close - open - 1));
  std::string item;
  while (std::getline(in, item, ',')) v.push_back(Rational(std::stoll(trim(item)), den));
  return v;
}

std::string to_string(const QVec& v) {
  long long den = 1;
  for (const auto& x : v) den = std::lcm(den, x.denominator());
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string((v[i] * den).numerator());
  }
  s += ")";
  if (den != 1) s += "/" + std::to_string(den);
  return s;
}

std::string tables_dir() {
  if (const char* env = std::getenv("ORBITDUALITY_TABLES"); env && *env) return env;
  return ORBITDUALITY_TABLES_DIR;
}

Tables load_tables(Group g, const std::string& dir) {
  Tables t;
  t.group = g;
  auto read = [&](const std::string& which) {
    const std::string path = dir + "/" + lower(to_string(g)) + "_" + which + ".json";
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open table file " + path);
    return nlohmann::json::parse(in);
  };
  const nlohmann::json la = read("la"), gm = read("gamma");
  for (const auto& r : la.at("rows")) {
    LARow row;
    row.datum = r.at("datum");
    row.orbit_dual = r.at("orbit_dual");
    row.M_orbit = r.at("M_orbit");
    row.d_S = r.at("d_S");
    row.r_O = r.at("r_O");
    row.gamma_M = parse_qvec(r.at("gamma_M"));
    if (const std::string x = r.at("gamma_LA"); !x.empty()) row.gamma_LA = parse_qvec(x);
    if (const std::string x = r.at("gamma_D"); !x.empty()) row.gamma_D = parse_qvec(x);
    if (static_cast<int>(row.gamma_M.size()) != group_rank(g))
      throw DomainError("table row " + row.datum + " has a vector of the wrong length");
    t.la.push_back(row);
  }
  for (const auto& r : gm.at("rows")) {
    GammaRow row;
    row.datum = r.at("datum");
    row.orbit = r.at("orbit");
    row.L = r.at("L");
    row.R = r.at("R");
    row.R_orbit = r.at("R_orbit");
    row.abar_R = r.at("abar_R");
    row.A_L = r.at("A_L");
    row.A = r.at("A");
    row.Gamma = r.at("Gamma");
    row.method = r.at("method");
    t.gamma.push_back(row);
  }
  return t;
}

std::vector<LARow> table_lookup(const Tables& t, const std::string& orbit_dual, const std::string& M_orbit) {
  std::vector<LARow> out;
  for (const auto& r : t.la)
    if (r.orbit_dual == orbit_dual && (M_orbit.empty() || r.M_orbit == M_orbit)) out.push_back(r);
  if (out.empty()) throw DomainError("no " + to_string(t.group) + " row for " + orbit_dual + (M_orbit.empty() ? "" : " / " + M_orbit));
  return out;
}

QMatrix inverse(const QMatrix& m) {
  const int n = static_cast<int>(m.rows());
  QMatrix a = m, inv = QMatrix::Identity(n, n);
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && a(p, c) == kZero) ++p;
    if (p == n) throw DomainError("singular matrix");
    a.row(c).swap(a.row(p));
    inv.row(c).swap(inv.row(p));
    const Rational piv = a(c, c);
    for (int j = 0; j < n; ++j) {
      a(c, j) /= piv;
      inv(c, j) /= piv;
    }
    for (int r = 0; r < n; ++r) {
      if (r == c || a(r, c) == kZero) continue;
      const Rational f = a(r, c);
      for (int j = 0; j < n; ++j) {
        a(r, j) -= f * a(c, j);
        inv(r, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

bool positive_definite(const QMatrix& m) {
  // Sylvester: all leading principal minors positive, via elimination without pivoting.
  const int n = static_cast<int>(m.rows());
  if (m != m.transpose()) return false;
  QMatrix a = m;
  for (int c = 0; c < n; ++c) {
    if (a(c, c) <= kZero) return false;
    for (int r = c + 1; r < n; ++r) {
      const Rational f = a(r, c) / a(c, c);
      for (int j = c; j < n; ++j) a(r, j) -= f * a(c, j);
    }
  }
  return true;
}

std::vector<std::vector<int>> positive_roots(const QMatrix& gram) {
  const int n = static_cast<int>(gram.rows());
  std::set<std::vector<int>> all;
  std::vector<std::vector<int>> layer;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    all.insert(e);
    layer.push_back(e);
  }
  while (!layer.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& b : layer) {
      for (int i = 0; i < n; ++i) {
        Rational ip = 0;
        for (int j = 0; j < n; ++j) ip += b[j] * gram(j, i);
        const Rational c = 2 * ip / gram(i, i);
        if (c.denominator() != 1) throw DomainError("Gram matrix is not crystallographic");
        int p = 0;
        std::vector<int> down = b;
        while (true) {
          --down[i];
          if (!all.count(down)) break;
          ++p;
        }
        if (p - c.numerator() > 0) {
          std::vector<int> up = b;
          ++up[i];
          if (all.insert(up).second) next.push_back(up);
        }
      }
    }
    layer = std::move(next);
  }
  return {all.begin(), all.end()};
}

RootSystem root_system(Group g, bool dual) {
  RootSystem rs;
  rs.group = g;
  rs.dual = dual;
  const auto rows = cartan_rows(g);
  const int n = static_cast<int>(rows.size());
  rs.cartan = QMatrix(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rs.cartan(i, j) = dual ? rows[j][i] : rows[i][j];
  // d_i a_ij = d_j a_ji, propagated along the (connected) diagram.
  std::vector<Rational> d(n, 0);
  d[0] = 1;
  for (int sweep = 0; sweep < n; ++sweep)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (d[i] != kZero && d[j] == kZero && rs.cartan(i, j) != kZero) d[j] = d[i] * rs.cartan(i, j) / rs.cartan(j, i);
  rs.simple_gram = QMatrix(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rs.simple_gram(i, j) = d[i] * rs.cartan(i, j);
  if (!positive_definite(rs.simple_gram)) throw std::logic_error("root system Gram matrix is not positive definite");
  rs.coweight_gram = inverse(rs.simple_gram);
  if (!positive_definite(rs.coweight_gram)) throw std::logic_error("coweight Gram matrix is not positive definite");
  rs.positive = positive_roots(rs.simple_gram);
  return rs;
}

CartanType classify(const RootSystem& rs, const std::vector<std::vector<int>>& sub) {
  std::set<std::vector<int>> members(sub.begin(), sub.end());
  std::vector<std::vector<int>> simple;
  for (const auto& r : sub) {
    bool decomposable = false;
    for (const auto& a : sub) {
      std::vector<int> rest(r.size());
      for (std::size_t i = 0; i < r.size(); ++i) rest[i] = r[i] - a[i];
      if (members.count(rest)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) simple.push_back(r);
  }
  const int k = static_cast<int>(simple.size());
  QMatrix g(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) g(i, j) = quad(rs.simple_gram, to_q(simple[i]), to_q(simple[j]));
  std::vector<int> comp(k, -1);
  int ncomp = 0;
  for (int s = 0; s < k; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s};
    comp[s] = ncomp;
    while (!stack.empty()) {
      const int i = stack.back();
      stack.pop_back();
      for (int j = 0; j < k; ++j)
        if (comp[j] < 0 && g(i, j) != kZero) {
          comp[j] = ncomp;
          stack.push_back(j);
        }
    }
    ++ncomp;
  }
  CartanType out;
  for (int c = 0; c < ncomp; ++c) {
    std::vector<int> idx;
    for (int i = 0; i < k; ++i)
      if (comp[i] == c) idx.push_back(i);
    const int r = static_cast<int>(idx.size());
    QMatrix sg(r, r);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) sg(i, j) = g(idx[i], idx[j]);
    const auto roots = positive_roots(sg);
    const int N = static_cast<int>(roots.size());
    std::vector<Rational> len;
    for (const auto& x : roots) len.push_back(quad(sg, to_q(x), to_q(x)));
    const Rational top = *std::max_element(len.begin(), len.end());
    const int nlong = static_cast<int>(std::count(len.begin(), len.end(), top));
    TypeComponent t{'A', r};
    if (nlong == N) {
      if (N == r * (r + 1) / 2) t.letter = 'A';
      else if (r >= 4 && N == r * (r - 1)) t.letter = 'D';
      else if (N == 36 || N == 63 || N == 120) t.letter = 'E';
      else throw std::logic_error("unrecognised simply laced component");
    } else if (r == 2 && N == 6) {
      t.letter = 'G';
    } else if (r == 4 && N == 24) {
      t.letter = 'F';
    } else if (N == r * r) {
      t.letter = (nlong == r * (r - 1) || r == 2) ? 'B' : 'C';
    } else {
      throw std::logic_error("unrecognised component");
    }
    out.push_back(t);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<TypeComponent> components_in_order(const std::string& label) {
  std::vector<TypeComponent> out;
  const std::string l = trim(label);
  if (l.empty() || l == "0" || l == "1") return out;
  std::stringstream in(l);
  std::string item;
  while (std::getline(in, item, '+')) {
    std::size_t i = 0;
    const std::string s = trim(item);
    int mult = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) mult = mult * 10 + (s[i++] - '0');
    if (mult == 0) mult = 1;
    while (i < s.size() && (s[i] == '~' || s[i] == '(')) ++i;
    if (i >= s.size() || !std::strchr("ABCDEFG", s[i])) throw ParseError("bad type label '" + label + "'");
    const char letter = s[i++];
    int rank = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) rank = rank * 10 + (s[i++] - '0');
    if (rank == 0) throw ParseError("bad type label '" + label + "'");
    TypeComponent t{letter, rank};
    if (letter == 'C' && rank == 2) t.letter = 'B';
    if (letter == 'D' && rank == 3) t.letter = 'A';
    for (int m = 0; m < mult; ++m) out.push_back(t);
  }
  return out;
}

CartanType type_from_label(const std::string& label) {
  CartanType t = components_in_order(label);
  std::sort(t.begin(), t.end());
  return t;
}

std::string to_string(const CartanType& t) {
  if (t.empty()) return "0";
  std::string s;
  for (const auto& c : t) {
    if (!s.empty()) s += "+";
    s += c.letter + std::to_string(c.rank);
  }
  return s;
}

SubsystemTypes subsystem_classify(const RootSystem& rs, const QVec& gamma) {
  if (gamma.size() != static_cast<std::size_t>(rs.cartan.rows())) throw DomainError("weight length does not match the rank");
  std::vector<std::vector<int>> integral, singular;
  for (const auto& r : rs.positive) {
    const Rational p = pair(r, gamma);
    if (p.denominator() == 1) integral.push_back(r);
    if (p == kZero) singular.push_back(r);
  }
  return {classify(rs, integral), classify(rs, singular)};
}

Rational norm2(const RootSystem& rs, const QVec& gamma) { return quad(rs.coweight_gram, gamma, gamma); }

std::optional<bool> matching_convention(const Tables& t) {
  for (bool dual : {false, true}) {
    const RootSystem rs = root_system(t.group, dual);
    if (verify_classification(t, rs).pass()) return dual;
  }
  return std::nullopt;
}

TableReport verify_tables(const Tables& t, const RootSystem& rs) {
  TableReport rep;
  std::vector<std::string> order;
  std::map<std::string, std::vector<const LARow*>> groups;
  for (const auto& r : t.la) {
    if (!groups.count(r.datum)) order.push_back(r.datum);
    groups[r.datum].push_back(&r);
    if (r.gamma_LA || r.gamma_D) {
      ++rep.checks;
      if (!r.gamma_LA || !r.gamma_D || *r.gamma_LA != *r.gamma_D)
        rep.failures.push_back(r.datum + ": gamma(O,C) differs from gamma(D(O,C))");
    }
  }
  for (const auto& key : order) {
    ++rep.checks;
    const auto& rows = groups[key];
    const LARow* head = rows.front();
    if (!head->gamma_LA) {
      rep.failures.push_back(key + ": group has no gamma(O,C)");
      continue;
    }
    Rational best = norm2(rs, rows.front()->gamma_M);
    for (const auto* r : rows) best = std::min(best, norm2(rs, r->gamma_M));
    for (const auto* r : rows) {
      const bool at_min = norm2(rs, r->gamma_M) == best;
      if (at_min && r->gamma_M != *head->gamma_LA)
        rep.failures.push_back(key + ": minimum norm attained by " + to_string(r->gamma_M) + ", table gives " +
                               to_string(*head->gamma_LA));
    }
    if (norm2(rs, *head->gamma_LA) != best)
      rep.failures.push_back(key + ": gamma(O,C) is not the minimum-norm gamma_M");
  }
  return rep;
}

int group_label_rank(const std::string& s) {
  if (s == "1") return 0;
  if (s == "Z2" || s == "S2") return 1;
  throw DomainError("no rank for group label '" + s + "'");
}

namespace {

// "[5,2^2]" -> [5,2,2]; "0" -> zero orbit of a natural representation of size n.
Partition parse_factor_partition(const std::string& s, int n) {
  if (s == "0") return Partition(std::vector<int>(n, 1));
  std::vector<int> v;
  std::stringstream in(s.substr(1, s.size() - 2));
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto hat = item.find('^');
    const int x = std::stoi(item.substr(0, hat));
    const int m = hat == std::string::npos ? 1 : std::stoi(item.substr(hat + 1));
    v.insert(v.end(), m, x);
  }
  return Partition::sorted(v);
}

std::vector<std::string> split_factors(const std::string& s) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    const auto x = s.find(" x ", pos);
    std::string tok = trim(s.substr(pos, x == std::string::npos ? std::string::npos : x - pos));
    int rep = 1;
    if (const auto hat = tok.rfind("]^"); hat != std::string::npos) {
      const std::string suffix = tok.substr(hat + 2);
      if (!suffix.empty() && std::isdigit(static_cast<unsigned char>(suffix[0]))) rep = std::stoi(suffix);
      tok = tok.substr(0, hat + 1);  // drops a numeral decoration as well
    }
    for (int i = 0; i < rep; ++i) out.push_back(tok);
    if (x == std::string::npos) break;
    pos = x + 3;
  }
  return out;
}

}  // namespace

TableReport verify_gamma_table(const Tables& t) {
  TableReport rep;
  for (const auto& r : t.gamma) {
    ++rep.checks;
    const int abar = group_label_rank(r.abar_R), gamma = group_label_rank(r.Gamma);
    if (abar != gamma) rep.failures.push_back(r.datum + ": rank Abar(O_R) = " + std::to_string(abar) + " but rank Gamma = " + std::to_string(gamma));
    const auto comps = components_in_order(r.R);
    const auto orbits = split_factors(r.R_orbit);
    if (comps.size() != orbits.size()) {
      rep.failures.push_back(r.datum + ": R has " + std::to_string(comps.size()) + " factors but " + std::to_string(orbits.size()) + " orbits");
      continue;
    }
    int computed = 0;
    for (std::size_t i = 0; i < comps.size(); ++i) {
      const int rk = comps[i].rank;
      Kind k;
      int n;
      switch (comps[i].letter) {
        case 'A': k = Kind::A; n = rk + 1; break;
        case 'B': k = Kind::B; n = 2 * rk + 1; break;
        case 'C': k = Kind::C; n = 2 * rk; break;
        case 'D': k = Kind::D; n = 2 * rk; break;
        default: throw DomainError("exceptional factor in R for " + r.datum);
      }
      const Partition p = parse_factor_partition(orbits[i], n);
      // Type A factors contribute nothing to the rank, so their sizes are not policed.
      if (k != Kind::A && (p.total() != n || !is_type(p, k))) {
        rep.failures.push_back(r.datum + ": orbit " + orbits[i] + " does not fit factor " + to_string(CartanType{comps[i]}));
        continue;
      }
      if (k != Kind::A) computed += abar_rank(k, p);
    }
    if (computed != abar) rep.failures.push_back(r.datum + ": markable parts give rank " + std::to_string(computed) + ", table gives " + r.abar_R);
  }
  return rep;
}

TableReport verify_classification(const Tables& t, const RootSystem& rs) {
  TableReport rep;
  for (const auto& r : t.la) {
    ++rep.checks;
    const CartanType got = subsystem_classify(rs, r.gamma_M).integral;
    const CartanType want = type_from_label(r.M_orbit);
    if (got != want)
      rep.failures.push_back(r.datum + " / " + r.M_orbit + ": integral type " + to_string(got) + ", expected " + to_string(want));
  }
  return rep;
}

TableReport verify_shell(const Tables& t, const RootSystem& rs) {
  TableReport rep;
  const int n = static_cast<int>(rs.cartan.rows());
  const QVec rho(n, Rational(1));
  const Rational rho2 = norm2(rs, rho);
  for (const auto& r : t.la) {
    ++rep.checks;
    const SubsystemTypes target = subsystem_classify(rs, r.gamma_M);
    const Rational own = norm2(rs, r.gamma_M);
    // Base of the integral subsystem; z = B c runs over Z^n.
    std::vector<std::vector<int>> integral;
    for (const auto& x : rs.positive)
      if (pair(x, r.gamma_M).denominator() == 1) integral.push_back(x);
    std::set<std::vector<int>> members(integral.begin(), integral.end());
    std::vector<std::vector<int>> base;
    for (const auto& x : integral) {
      bool dec = false;
      for (const auto& a : integral) {
        std::vector<int> rest(n);
        for (int i = 0; i < n; ++i) rest[i] = x[i] - a[i];
        if (members.count(rest)) dec = true;
      }
      if (!dec) base.push_back(x);
    }
    if (static_cast<int>(base.size()) != n) {
      rep.failures.push_back(r.datum + " / " + r.M_orbit + ": integral subsystem is not of full rank");
      continue;
    }
    QMatrix B(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) B(i, j) = base[i][j];
    const QMatrix Binv = inverse(B);
    const QMatrix Q = Binv.transpose() * rs.coweight_gram * Binv;
    std::vector<int> bound(n);
    for (int i = 0; i < n; ++i) {
      const Rational lim = rho2 * quad(rs.simple_gram, to_q(base[i]), to_q(base[i]));
      bound[i] = static_cast<int>(std::floor(std::sqrt(boost::rational_cast<double>(lim)) + 1e-9));
    }
    std::vector<int> z(n);
    for (int i = 0; i < n; ++i) z[i] = -bound[i];
    while (true) {
      const auto zq = to_q(z);
      const Rational nz = quad(Q, zq, zq);
      if (nz < own && nz <= rho2) {
        QVec c(n, Rational(0));
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) c[i] += Binv(i, j) * z[j];
        if (subsystem_classify(rs, c) == target)
          rep.failures.push_back(r.datum + " / " + r.M_orbit + ": shorter point " + to_string(c) + " has the same type pair");
      }
      int i = 0;
      while (i < n && z[i] == bound[i]) {
        z[i] = -bound[i];
        ++i;
      }
      if (i == n) break;
      ++z[i];
    }
  }
  return rep;
}

}  // namespace orbitduality
