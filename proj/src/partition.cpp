#include "orbitduality/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace orbitduality {

int epsilon(Kind k) { return k == Kind::C ? 1 : 0; }

char kind_letter(Kind k) {
  switch (k) {
    case Kind::A: return 'A';
    case Kind::B: return 'B';
    case Kind::C: return 'C';
    case Kind::D: return 'D';
  }
  return '?';
}

Kind kind_from_letter(char c) {
  switch (c) {
    case 'A': case 'a': return Kind::A;
    case 'B': case 'b': return Kind::B;
    case 'C': case 'c': return Kind::C;
    case 'D': case 'd': return Kind::D;
  }
  throw ParseError(std::string("unknown kind '") + c + "'");
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw DomainError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw DomainError("partition parts must be weakly decreasing");
  }
}

Partition Partition::sorted(std::vector<int> parts) {
  for (int x : parts)
    if (x < 0) throw DomainError("negative part");
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

int Partition::total() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::row(int i) const {
  if (i < 1 || i > length()) return 0;
  return parts_[i - 1];
}

std::vector<int> Partition::distinct() const {
  std::vector<int> out;
  for (int x : parts_)
    if (out.empty() || out.back() != x) out.push_back(x);
  return out;
}

int multiplicity(const Partition& p, int x) {
  return static_cast<int>(std::count(p.parts().begin(), p.parts().end(), x));
}

int height(const Partition& p, int x) {
  int h = 0;
  for (int y : p.parts())
    if (y >= x) ++h;
  return h;
}

Partition transpose(const Partition& p) {
  if (p.empty()) return {};
  std::vector<int> t(p.row(1), 0);
  for (int x : p.parts())
    for (int i = 0; i < x; ++i) ++t[i];
  return Partition(std::move(t));
}

Partition unite(const Partition& p, const Partition& q) {
  std::vector<int> v = p.parts();
  v.insert(v.end(), q.parts().begin(), q.parts().end());
  return Partition::sorted(std::move(v));
}

Partition join(const Partition& p, const Partition& q) {
  std::vector<int> v(std::max(p.length(), q.length()));
  for (int i = 0; i < static_cast<int>(v.size()); ++i) v[i] = p.row(i + 1) + q.row(i + 1);
  return Partition(std::move(v));
}

bool contains(const Partition& p, const Partition& q) {
  for (int x : q.distinct())
    if (multiplicity(q, x) > multiplicity(p, x)) return false;
  return true;
}

Partition remove(const Partition& p, const Partition& q) {
  if (!contains(p, q)) throw DomainError("multiset difference: not a sub-multiset");
  std::vector<int> v = p.parts();
  for (int x : q.parts()) v.erase(std::find(v.begin(), v.end(), x));
  return Partition(std::move(v));
}

namespace {

bool size_parity_ok(Kind k, int n) {
  switch (k) {
    case Kind::A: return true;
    case Kind::B: return n % 2 == 1;
    case Kind::C:
    case Kind::D: return n % 2 == 0;
  }
  return false;
}

}  // namespace

// In B/D the parts of parity epsilon (even) must pair up; in C the odd parts.
bool is_type(const Partition& p, Kind k) {
  if (k == Kind::A) return true;
  if (!size_parity_ok(k, p.total())) return false;
  for (int x : p.distinct())
    if (x % 2 == epsilon(k) && multiplicity(p, x) % 2 != 0) return false;
  return true;
}

bool is_very_even(const Partition& p) {
  if (p.empty()) return false;
  for (int x : p.distinct())
    if (x % 2 != 0 || multiplicity(p, x) % 2 != 0) return false;
  return true;
}

// Greedy box moving: lower the last copy of the largest bad part, and put the
// box on the first later row that stays below it.
Partition collapse(const Partition& p, Kind k) {
  if (!size_parity_ok(k, p.total())) throw DomainError("size/kind mismatch");
  if (k == Kind::A) return p;
  std::vector<int> v = p.parts();
  const int bad_parity = k == Kind::C ? 1 : 0;
  for (;;) {
    int q = 0;
    for (std::size_t i = 0; i < v.size();) {
      std::size_t j = i;
      while (j < v.size() && v[j] == v[i]) ++j;
      if (v[i] > 0 && v[i] % 2 == bad_parity && (j - i) % 2 == 1) {
        q = v[i];
        break;
      }
      i = j;
    }
    if (q == 0) break;
    std::size_t last = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] == q) last = i;
    v[last] = q - 1;
    std::size_t j = last + 1;
    while (j < v.size() && v[j] >= q - 1) ++j;
    if (j == v.size()) v.push_back(0);
    ++v[j];
  }
  std::erase(v, 0);
  return Partition(std::move(v));
}

bool dominates(const Partition& p, const Partition& q) {
  if (p.total() != q.total()) throw DomainError("dominance needs equal sizes");
  int sp = 0, sq = 0;
  for (int i = 1; i <= std::max(p.length(), q.length()); ++i) {
    sp += p.row(i);
    sq += q.row(i);
    if (sp < sq) return false;
  }
  return true;
}

Partition lower(const Partition& p) {
  if (p.empty()) throw DomainError("l() needs a nonempty partition");
  std::vector<int> v = p.parts();
  --v.back();
  return Partition::sorted(std::move(v));
}

Partition extend(const Partition& p) {
  std::vector<int> v = p.parts();
  v.push_back(1);
  return Partition(std::move(v));
}

Partition plus(const Partition& p) {
  std::vector<int> v = p.parts();
  if (v.empty()) return Partition{1};
  ++v.front();
  return Partition(std::move(v));
}

Partition minus(const Partition& p) {
  if (p.empty()) throw DomainError("minus() needs a nonempty partition");
  return transpose(lower(transpose(p)));
}

Partition shave(const Partition& p) {
  std::vector<int> v = p.parts();
  for (int& x : v) --x;
  return Partition::sorted(std::move(v));
}

Partition take(const Partition& p, int k) {
  k = std::clamp(k, 0, p.length());
  return Partition(std::vector<int>(p.parts().begin(), p.parts().begin() + k));
}

Partition drop(const Partition& p, int k) {
  k = std::clamp(k, 0, p.length());
  return Partition(std::vector<int>(p.parts().begin() + k, p.parts().end()));
}

Partition uparrow(const Partition& p) {
  std::vector<int> v = p.parts();
  if (v.empty()) return {};
  for (int x : v)
    if ((x - v.front()) % 2 != 0) throw DomainError("uparrow parity violation");
  if (v.size() % 2 == 1) {
    if (v.front() % 2 != 0) throw DomainError("uparrow needs an even number of odd parts");
    v.push_back(0);
  }
  for (std::size_t i = 0; i < v.size(); i += 2) {
    ++v[i];
    v[i + 1] = std::max(v[i + 1] - 1, 0);
  }
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] > v[i - 1]) throw DomainError("uparrow result is not a partition");
  std::erase(v, 0);
  return Partition(std::move(v));
}

Partition uparrow2(const Partition& p) {
  if (p.length() < 1 || p.length() > 2) throw DomainError("uparrow2 needs one or two rows");
  return Partition::sorted({p.row(1) + 1, std::max(p.row(2) - 1, 0)});
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int cap) {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int x = std::min(left, cap); x >= 1; --x) {
      cur.push_back(x);
      rec(left - x, x);
      cur.pop_back();
    }
  };
  if (n >= 0) rec(n, n);
  return out;
}

std::vector<Partition> partitions_of_type(Kind k, int n) {
  std::vector<Partition> out;
  for (auto& p : partitions_of(n))
    if (is_type(p, k)) out.push_back(std::move(p));
  return out;
}

std::string to_string(const Partition& p) {
  std::string s = "[";
  for (int i = 0; i < p.length(); ++i) {
    if (i) s += ",";
    s += std::to_string(p.parts()[i]);
  }
  return s + "]";
}

}  // namespace orbitduality
