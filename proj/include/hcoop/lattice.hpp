#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hcoop {

// Periodic L x L square lattice with a fixed neighborhood: k = 4 (von
// Neumann) or k = 8 (Moore). Neighbor lists are precomputed and symmetric;
// the undirected edge set has exactly k*N/2 entries.
class Lattice {
 public:
  explicit Lattice(int side, int degree = 4) : side_(side), degree_(degree) {
    if (side < 3)
      throw std::invalid_argument("lattice side must be >= 3 (periodic wrap)");
    if (degree != 4 && degree != 8)
      throw std::invalid_argument("neighborhood size must be 4 or 8");
    const int n = side * side;
    nbr_.resize(static_cast<std::size_t>(n) * degree);
    edges_.reserve(static_cast<std::size_t>(n) * degree / 2);
    for (int r = 0; r < side; ++r) {
      for (int c = 0; c < side; ++c) {
        const int i = r * side + c;
        std::int32_t* out = &nbr_[static_cast<std::size_t>(i) * degree];
        out[0] = index(r - 1, c);
        out[1] = index(r + 1, c);
        out[2] = index(r, c - 1);
        out[3] = index(r, c + 1);
        if (degree == 8) {
          out[4] = index(r - 1, c - 1);
          out[5] = index(r - 1, c + 1);
          out[6] = index(r + 1, c - 1);
          out[7] = index(r + 1, c + 1);
        }
        edges_.emplace_back(i, index(r, c + 1));
        edges_.emplace_back(i, index(r + 1, c));
        if (degree == 8) {
          edges_.emplace_back(i, index(r + 1, c + 1));
          edges_.emplace_back(i, index(r + 1, c - 1));
        }
      }
    }
  }

  int side() const { return side_; }
  int size() const { return side_ * side_; }
  int degree() const { return degree_; }

  std::span<const std::int32_t> neighbors(int i) const {
    return {&nbr_[static_cast<std::size_t>(i) * degree_],
            static_cast<std::size_t>(degree_)};
  }

  // Row/col indexing with periodic wrap (accepts offsets one period out).
  int index(int row, int col) const {
    row = (row + side_) % side_;
    col = (col + side_) % side_;
    return row * side_ + col;
  }

  std::pair<int, int> coords(int i) const { return {i / side_, i % side_}; }

  const std::vector<std::pair<std::int32_t, std::int32_t>>& edges() const {
    return edges_;
  }

  std::int64_t edge_count() const {
    return static_cast<std::int64_t>(degree_) * size() / 2;
  }

 private:
  int side_;
  int degree_;
  std::vector<std::int32_t> nbr_;
  std::vector<std::pair<std::int32_t, std::int32_t>> edges_;
};

}  // namespace hcoop
