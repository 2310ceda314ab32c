// Partition of the strategy set into player groups.
//
// A signature (n_1, ..., n_p) splits indices 0..n-1 into p consecutive
// blocks; block a covers [offset(a), offset(a) + size(a)). The phase space it
// induces is the product of the p probability simplices.
#pragma once

#include <cstddef>
#include <vector>

#include "polyrep/errors.hpp"

namespace polyrep {

class Signature {
 public:
  Signature() = default;
  explicit Signature(std::vector<std::size_t> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw EmptyGroup("signature has no groups");
    offsets_.reserve(parts_.size() + 1);
    offsets_.push_back(0);
    for (std::size_t s : parts_) {
      if (s == 0) throw EmptyGroup("signature has an empty group");
      offsets_.push_back(offsets_.back() + s);
    }
  }

  std::size_t groups() const { return parts_.size(); }
  std::size_t dimension() const { return offsets_.back(); }

  std::size_t size(std::size_t group) const { return parts_[group]; }
  std::size_t offset(std::size_t group) const { return offsets_[group]; }

  // Group owning strategy index i.
  std::size_t group_of(std::size_t i) const {
    std::size_t g = 0;
    while (offsets_[g + 1] <= i) ++g;
    return g;
  }

  const std::vector<std::size_t>& parts() const { return parts_; }

  // Dimension of the chart image, sum of (n_a - 1).
  std::size_t chart_dimension() const { return dimension() - groups(); }

  bool operator==(const Signature& o) const { return parts_ == o.parts_; }

 private:
  std::vector<std::size_t> parts_;
  std::vector<std::size_t> offsets_;
};

}  // namespace polyrep
