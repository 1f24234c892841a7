#include "widthlab/grid.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

namespace widthlab {

DirectionGrid::DirectionGrid(int dim, std::size_t count) : dim_(dim) {
  if (dim < 1) throw InvalidArgument("grid dimension must be >= 1");
  if (dim == 1) count = 2;
  if (count < 2 || count % 2 != 0)
    throw InvalidArgument("grid size must be even and >= 2, got " + std::to_string(count));

  const std::size_t half = count / 2;
  auto data = std::make_shared<Data>();
  auto& dirs = data->directions;
  dirs.reserve(count);

  if (dim == 1) {
    dirs.push_back(vec({1.0}));
  } else if (dim == 2) {
    for (std::size_t k = 0; k < half; ++k)
      dirs.push_back(unit_angle(2.0 * std::numbers::pi * static_cast<double>(k) /
                                static_cast<double>(count)));
  } else if (dim == 3) {
    const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
    for (std::size_t k = 0; k < half; ++k) {
      const double z = 1.0 - (static_cast<double>(k) + 0.5) / static_cast<double>(half);
      const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
      const double phi = golden * static_cast<double>(k);
      Vec u = vec({rho * std::cos(phi), rho * std::sin(phi), z});
      dirs.push_back(u / u.norm());
    }
  } else {
    std::mt19937_64 gen(0x5eed0fd12ec7ULL);
    std::normal_distribution<double> normal;
    while (dirs.size() < half) {
      Vec u(dim);
      for (int i = 0; i < dim; ++i) u[i] = normal(gen);
      const double nrm = u.norm();
      if (nrm < 1e-6) continue;
      u /= nrm;
      if (u[dim - 1] < 0) u = -u;
      dirs.push_back(u);
    }
  }
  for (std::size_t k = 0; k < half; ++k) dirs.push_back(-dirs[k]);
  data_ = std::move(data);
}

double DirectionGrid::angle(std::size_t k) const {
  if (dim_ != 2) throw Unsupported("angle() is defined for 2-D grids only");
  double t = std::atan2((*this)[k][1], (*this)[k][0]);
  if (t < 0) t += 2.0 * std::numbers::pi;
  return t;
}

}  // namespace widthlab
