#pragma once

#include <compare>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace orbitduality {

// Violated mathematical precondition (CLI exit code 1).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Malformed text or JSON input (CLI exit code 2).
struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class Kind { A, B, C, D };

// 0 for B and D, 1 for C. Kind A has no parity convention and returns 0.
int epsilon(Kind k);
char kind_letter(Kind k);
Kind kind_from_letter(char c);

// Weakly decreasing positive parts, no zeros.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  // Throws DomainError unless parts are weakly decreasing and positive.
  explicit Partition(std::vector<int> parts);
  // Sorts and drops zeros; negative entries are an error.
  static Partition sorted(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int total() const;
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  // 1-based row access with zeros past the end, i.e. lambda_i.
  int row(int i) const;
  // Distinct values, descending.
  std::vector<int> distinct() const;

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

int multiplicity(const Partition& p, int x);
// #{i : p_i >= x}; meaningful whether or not x is a part.
int height(const Partition& p, int x);

Partition transpose(const Partition& p);
Partition unite(const Partition& p, const Partition& q);  // multiset union
Partition join(const Partition& p, const Partition& q);   // rowwise sum
// Multiset difference; q must be contained in p.
Partition remove(const Partition& p, const Partition& q);
bool contains(const Partition& p, const Partition& q);

bool is_type(const Partition& p, Kind k);
bool is_very_even(const Partition& p);
// Dominance-maximal partition of type k dominated by p.
Partition collapse(const Partition& p, Kind k);
// Prefix-sum order; sizes must agree.
bool dominates(const Partition& p, const Partition& q);

Partition lower(const Partition& p);     // l: last part minus one
Partition extend(const Partition& p);    // e: append a part 1
Partition plus(const Partition& p);      // p^+: first part plus one
Partition minus(const Partition& p);     // p_- = l(p^t)^t
Partition shave(const Partition& p);     // every part minus one
Partition take(const Partition& p, int k);
Partition drop(const Partition& p, int k);
// Box moves between consecutive row pairs; odd-length even partitions are padded by 0.
Partition uparrow(const Partition& p);
// Two-row version [q1+1, max(q2-1,0)].
Partition uparrow2(const Partition& p);

std::vector<Partition> partitions_of(int n);
std::vector<Partition> partitions_of_type(Kind k, int n);

std::string to_string(const Partition& p);

}  // namespace orbitduality
