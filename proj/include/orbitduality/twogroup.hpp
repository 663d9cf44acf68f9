#pragma once

#include <compare>
#include <string>
#include <vector>

namespace orbitduality {

// Element of an elementary abelian 2-group with basis v_x indexed by positive
// integers. The symbol v_0 is the identity and is dropped on construction.
class TwoElem {
 public:
  TwoElem() = default;
  // Each occurrence toggles, so repeated values cancel in pairs.
  explicit TwoElem(const std::vector<int>& values);
  static TwoElem basis(int x) { return TwoElem(std::vector<int>{x}); }

  const std::vector<int>& support() const { return support_; }  // descending
  bool is_identity() const { return support_.empty(); }
  bool has(int x) const;
  int size() const { return static_cast<int>(support_.size()); }

  TwoElem operator*(const TwoElem& o) const;
  auto operator<=>(const TwoElem&) const = default;

 private:
  std::vector<int> support_;
};

class TwoSubgroup {
 public:
  TwoSubgroup() : elements_{TwoElem()} {}
  explicit TwoSubgroup(std::vector<TwoElem> generators);

  const std::vector<TwoElem>& generators() const { return generators_; }
  const std::vector<TwoElem>& elements() const { return elements_; }  // sorted
  bool contains(const TwoElem& x) const;
  int rank() const;  // log2 of the order
  bool operator==(const TwoSubgroup& o) const { return elements_ == o.elements_; }

 private:
  std::vector<TwoElem> generators_;
  std::vector<TwoElem> elements_;
};

std::string to_string(const TwoElem& e);

}  // namespace orbitduality
