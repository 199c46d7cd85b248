#pragma once

#include <vector>

#include "bpdkit/common.hpp"

namespace bpdkit {

/// Integer partition; parts are strictly positive and weakly decreasing.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int num_parts() const noexcept { return static_cast<int>(parts_.size()); }
  /// Row length, zero past the last part (1-based row).
  int part(int row) const noexcept;
  int size() const noexcept;
  bool empty() const noexcept { return parts_.empty(); }
  bool contains(const Partition& inner) const noexcept;
  bool contains_cell(Cell c) const noexcept;
  std::vector<Cell> cells() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// Row bounds for flagged tableaux.
struct Flag {
  std::vector<int> bounds;
  friend bool operator==(const Flag&, const Flag&) = default;
};

}  // namespace bpdkit
