#include "orbitduality/io.hpp"

#include <cctype>

namespace orbitduality {

namespace {

std::string strip(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

int parse_int(const std::string& s, const std::string& context) {
  if (s.empty() || s.size() > 9) throw ParseError("bad integer in '" + context + "'");
  std::size_t i = s[0] == '-' ? 1 : 0;
  if (i == s.size()) throw ParseError("bad integer in '" + context + "'");
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw ParseError("bad integer in '" + context + "'");
  return std::stoi(s);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

Partition checked_partition(const std::vector<int>& v, const std::string& context) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] <= 0) throw ParseError("parts must be positive in '" + context + "'");
    if (i && v[i] > v[i - 1]) throw ParseError("parts must be weakly decreasing in '" + context + "'");
  }
  return Partition(v);
}

// Splits "X:rest" into a kind and the rest.
std::pair<Kind, std::string> kind_prefix(const std::string& s) {
  const auto colon = s.find(':');
  if (colon == std::string::npos) throw ParseError("expected a kind prefix like 'B:' in '" + s + "'");
  return {parse_kind(s.substr(0, colon)), s.substr(colon + 1)};
}

Decoration parse_decoration(const std::string& s, const std::string& context) {
  if (s.empty()) return Decoration::None;
  if (s == "I") return Decoration::I;
  if (s == "II") return Decoration::II;
  throw ParseError("unexpected trailing text '" + s + "' in '" + context + "'");
}

}  // namespace

Partition parse_partition(const std::string& raw) {
  const std::string s = strip(raw);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') throw ParseError("expected [a,b,...], got '" + raw + "'");
  const std::string body = s.substr(1, s.size() - 2);
  std::vector<int> v;
  if (!body.empty()) {
    for (const auto& item : split(body, ',')) {
      const auto hat = item.find('^');
      const int x = parse_int(item.substr(0, hat), raw);
      const int m = hat == std::string::npos ? 1 : parse_int(item.substr(hat + 1), raw);
      if (m <= 0) throw ParseError("exponent must be positive in '" + raw + "'");
      v.insert(v.end(), m, x);
    }
  }
  return checked_partition(v, raw);
}

Kind parse_kind(const std::string& raw) {
  const std::string s = strip(raw);
  if (s.size() != 1) throw ParseError("expected kind A, B, C or D, got '" + raw + "'");
  const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  if (c < 'A' || c > 'D') throw ParseError("expected kind A, B, C or D, got '" + raw + "'");
  return kind_from_letter(c);
}

Orbit parse_orbit(const std::string& raw) {
  const auto [k, rest] = kind_prefix(strip(raw));
  const auto close = rest.find(']');
  if (close == std::string::npos) throw ParseError("expected a partition in '" + raw + "'");
  return make_orbit(k, parse_partition(rest.substr(0, close + 1)), parse_decoration(rest.substr(close + 1), raw));
}

MarkedPartition parse_marked(Kind k, const std::string& raw) {
  const std::string s = strip(raw);
  if (s.empty() || s.front() != '<') throw ParseError("expected <nu>lambda, got '" + raw + "'");
  const auto gt = s.find('>');
  if (gt == std::string::npos) throw ParseError("unterminated marking in '" + raw + "'");
  const Partition nu = parse_partition(s.substr(1, gt - 1));
  const std::string rest = s.substr(gt + 1);
  const auto close = rest.find(']');
  if (close == std::string::npos) throw ParseError("expected a partition in '" + raw + "'");
  const Partition lam = parse_partition(rest.substr(0, close + 1));
  return make_marked(k, lam, nu, parse_decoration(rest.substr(close + 1), raw));
}

MarkedPartition parse_marked(const std::string& raw) {
  const auto [k, rest] = kind_prefix(strip(raw));
  return parse_marked(k, rest);
}

LeviShape parse_levi(Kind k, const std::string& raw) {
  std::string s = strip(raw);
  LeviShape levi;
  if (!s.empty() && s.back() == '\'') {
    levi.primed = true;
    s.pop_back();
  }
  if (s.empty()) throw ParseError("empty Levi");
  bool seen_residual = false;
  for (const auto& item : split(s, '+')) {
    const auto open = item.find('(');
    if (open == std::string::npos || item.back() != ')') throw ParseError("bad Levi factor '" + item + "' in '" + raw + "'");
    const std::string name = item.substr(0, open);
    const int size = parse_int(item.substr(open + 1, item.size() - open - 2), raw);
    if (name == "gl") {
      if (seen_residual) throw ParseError("gl factors must come before the residual factor in '" + raw + "'");
      levi.gl_sizes.push_back(size);
    } else if (name == "so" || name == "sp") {
      if (seen_residual) throw ParseError("at most one residual factor in '" + raw + "'");
      if ((name == "sp") != (k == Kind::C)) throw DomainError("residual factor " + name + " does not match kind " + kind_letter(k));
      seen_residual = true;
      levi.residual = size;
    } else {
      throw ParseError("unknown Levi factor '" + name + "' in '" + raw + "'");
    }
  }
  return levi;
}

Weight parse_weight(Kind k, const std::string& raw) {
  const std::string s = strip(raw);
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') throw ParseError("expected (a,b,...), got '" + raw + "'");
  Weight w{k, {}};
  const std::string body = s.substr(1, s.size() - 2);
  if (body.empty()) return w;
  for (const auto& item : split(body, ',')) {
    const auto slash = item.find('/');
    if (slash == std::string::npos) {
      w.twice.push_back(2 * parse_int(item, raw));
    } else {
      if (parse_int(item.substr(slash + 1), raw) != 2) throw ParseError("entries must be half-integers in '" + raw + "'");
      w.twice.push_back(parse_int(item.substr(0, slash), raw));
    }
  }
  return w;
}

nlohmann::json to_json(const Partition& p) { return p.parts(); }

nlohmann::json to_json(const Orbit& o) {
  nlohmann::json j{{"kind", std::string(1, kind_letter(o.kind))}, {"N", o.ambient()}, {"partition", to_json(o.partition)}};
  if (o.decoration != Decoration::None) j["decoration"] = to_string(o.decoration);
  return j;
}

nlohmann::json to_json(const MarkedPartition& m) {
  nlohmann::json j{{"kind", std::string(1, kind_letter(m.kind))}, {"lambda", to_json(m.lambda)}, {"nu", to_json(m.nu)}};
  if (m.decoration != Decoration::None) j["decoration"] = to_string(m.decoration);
  return j;
}

nlohmann::json to_json(const Weight& w) {
  nlohmann::json a = nlohmann::json::array();
  for (int t : w.twice) a.push_back(half_string(t));
  return a;
}

nlohmann::json to_json(const TwoElem& e) {
  std::vector<int> v = e.support();
  std::reverse(v.begin(), v.end());
  return v;
}

nlohmann::json to_json(const TwoSubgroup& h) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& g : h.generators()) a.push_back(to_json(g));
  return {{"rank", h.rank()}, {"generators", a}};
}

Partition partition_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("partition must be a JSON array");
  std::vector<int> v;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw ParseError("partition entries must be integers");
    v.push_back(x.get<int>());
  }
  return checked_partition(v, j.dump());
}

namespace {

Kind json_kind(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) throw ParseError("missing \"kind\"");
  return parse_kind(j["kind"].get<std::string>());
}

Decoration json_decoration(const nlohmann::json& j) {
  if (!j.contains("decoration")) return Decoration::None;
  if (!j["decoration"].is_string()) throw ParseError("decoration must be a string");
  return parse_decoration(j["decoration"].get<std::string>(), j.dump());
}

}  // namespace

Orbit orbit_from_json(const nlohmann::json& j) {
  const Kind k = json_kind(j);
  if (!j.contains("partition")) throw ParseError("missing \"partition\"");
  Partition p = partition_from_json(j["partition"]);
  if (j.contains("N") && j["N"] != p.total()) throw ParseError("\"N\" does not match the partition size");
  return make_orbit(k, p, json_decoration(j));
}

MarkedPartition marked_from_json(const nlohmann::json& j) {
  const Kind k = json_kind(j);
  if (!j.contains("lambda") || !j.contains("nu")) throw ParseError("missing \"lambda\" or \"nu\"");
  return make_marked(k, partition_from_json(j["lambda"]), partition_from_json(j["nu"]), json_decoration(j));
}

Weight weight_from_json(const nlohmann::json& j) {
  Kind k = Kind::B;
  nlohmann::json coords = j;
  if (j.is_object()) {
    k = json_kind(j);
    if (!j.contains("coords")) throw ParseError("missing \"coords\"");
    coords = j["coords"];
  }
  if (!coords.is_array()) throw ParseError("weight must be an array");
  Weight w{k, {}};
  for (const auto& x : coords) {
    if (x.is_number_integer()) w.twice.push_back(2 * x.get<int>());
    else if (x.is_string()) w.twice.push_back(parse_weight(k, "(" + x.get<std::string>() + ")").twice.at(0));
    else throw ParseError("weight entries must be integers or strings like \"5/2\"");
  }
  return w;
}

}  // namespace orbitduality
