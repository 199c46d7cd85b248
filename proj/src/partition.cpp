#include "bpdkit/partition.hpp"

#include <numeric>

namespace bpdkit {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0 || (i > 0 && parts_[i] > parts_[i - 1]))
      throw Error(ErrorCode::InvalidArgument, "parts must be positive and weakly decreasing");
  }
}

int Partition::part(int row) const noexcept {
  return row >= 1 && row <= num_parts() ? parts_[row - 1] : 0;
}

int Partition::size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Partition::contains(const Partition& inner) const noexcept {
  if (inner.num_parts() > num_parts()) return false;
  for (int r = 1; r <= inner.num_parts(); ++r)
    if (inner.part(r) > part(r)) return false;
  return true;
}

bool Partition::contains_cell(Cell c) const noexcept {
  return c.row >= 1 && c.col >= 1 && c.col <= part(c.row);
}

std::vector<Cell> Partition::cells() const {
  std::vector<Cell> out;
  for (int r = 1; r <= num_parts(); ++r)
    for (int c = 1; c <= part(r); ++c) out.push_back({r, c});
  return out;
}

}  // namespace bpdkit
