#include "orbitduality/twogroup.hpp"

#include <algorithm>
#include <bit>
#include <functional>

namespace orbitduality {

TwoElem::TwoElem(const std::vector<int>& values) {
  std::vector<int> v;
  for (int x : values) {
    if (x == 0) continue;
    auto it = std::find(v.begin(), v.end(), x);
    if (it == v.end())
      v.push_back(x);
    else
      v.erase(it);
  }
  std::sort(v.begin(), v.end(), std::greater<>());
  support_ = std::move(v);
}

bool TwoElem::has(int x) const { return std::find(support_.begin(), support_.end(), x) != support_.end(); }

TwoElem TwoElem::operator*(const TwoElem& o) const {
  std::vector<int> v = support_;
  v.insert(v.end(), o.support_.begin(), o.support_.end());
  return TwoElem(v);
}

TwoSubgroup::TwoSubgroup(std::vector<TwoElem> generators) : generators_(std::move(generators)) {
  elements_ = {TwoElem()};
  for (const auto& g : generators_) {
    if (std::binary_search(elements_.begin(), elements_.end(), g)) continue;
    std::vector<TwoElem> next = elements_;
    for (const auto& e : elements_) next.push_back(e * g);
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    elements_ = std::move(next);
  }
}

bool TwoSubgroup::contains(const TwoElem& x) const {
  return std::binary_search(elements_.begin(), elements_.end(), x);
}

int TwoSubgroup::rank() const { return std::countr_zero(elements_.size()); }

std::string to_string(const TwoElem& e) {
  if (e.is_identity()) return "1";
  std::string s;
  for (int x : e.support()) {
    if (!s.empty()) s += "*";
    s += "v" + std::to_string(x);
  }
  return s;
}

}  // namespace orbitduality
