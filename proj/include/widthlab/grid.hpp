#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "widthlab/linalg.hpp"

namespace widthlab {

/// Antipodally closed sample of the unit sphere S^{n-1}.
///
/// Directions are stored as a first half followed by their exact negations,
/// so antipode(k) = (k + N/2) mod N and indices [0, N/2) hold one
/// representative per antipodal pair.
///
///  - n = 1: exactly {+1, -1};
///  - n = 2: N equally spaced angles 2*pi*k/N (N even);
///  - n = 3: Fibonacci spiral over the upper hemisphere, then negated;
///  - n >= 4: fixed-seed Gaussian sample over a half space, then negated.
///
/// Copies share the immutable direction table.
class DirectionGrid {
 public:
  DirectionGrid(int dim, std::size_t count);

  int dim() const { return dim_; }
  std::size_t size() const { return data_->directions.size(); }
  std::size_t half_size() const { return size() / 2; }
  const Vec& operator[](std::size_t k) const { return data_->directions[k]; }
  const std::vector<Vec>& directions() const { return data_->directions; }
  std::size_t antipode(std::size_t k) const { return (k + half_size()) % size(); }

  /// Angle in [0, 2*pi) of direction k (2-D grids only).
  double angle(std::size_t k) const;

 private:
  struct Data {
    std::vector<Vec> directions;
  };
  int dim_;
  std::shared_ptr<const Data> data_;
};

}  // namespace widthlab
