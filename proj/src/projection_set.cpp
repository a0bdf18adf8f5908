#include "depthlab/projection_set.hpp"

#include <cmath>
#include <stdexcept>

#include "depthlab/random.hpp"

namespace depthlab {

ProjectionSet::ProjectionSet(std::size_t dim, std::size_t count, std::uint64_t seed)
    : dim_(dim), count_(count), seed_(seed), directions_(dim * count) {
  if (dim == 0) throw std::invalid_argument("projection dimension must be >= 1");
  if (count == 0) throw std::invalid_argument("projection count must be >= 1");
  for (std::size_t i = 0; i < count; ++i) {
    CounterRng rng(seed, streams::kSphere + i);
    double* u = directions_.data() + i * dim;
    if (dim == 1) {
      u[0] = rng.normal() < 0.0 ? -1.0 : 1.0;
      continue;
    }
    double norm2 = 0.0;
    do {
      norm2 = 0.0;
      for (std::size_t j = 0; j < dim; ++j) {
        u[j] = rng.normal();
        norm2 += u[j] * u[j];
      }
    } while (norm2 == 0.0);
    const double norm = std::sqrt(norm2);
    for (std::size_t j = 0; j < dim; ++j) u[j] /= norm;
  }
}

double ProjectionSet::project(std::size_t i, std::span<const double> x) const noexcept {
  const double* u = directions_.data() + i * dim_;
  double s = 0.0;
  for (std::size_t j = 0; j < dim_; ++j) s += u[j] * x[j];
  return s;
}

ProjectionSet sample_sphere(std::size_t dim, std::size_t count, std::uint64_t seed) {
  return ProjectionSet(dim, count, seed);
}

}  // namespace depthlab
