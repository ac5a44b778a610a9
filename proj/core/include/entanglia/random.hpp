#pragma once

#include <cstdint>
#include <random>

#include "entanglia/tensor.hpp"

namespace entanglia {

using Rng = std::mt19937_64;

Vec random_gaussian_vec(long n, Rng& rng);
Mat random_ginibre(long rows, long cols, Rng& rng);
StateVector random_state(const Dims& dims, Rng& rng);
// Ginibre-induced mixed state of the given rank (rank <= 0 means full rank).
DensityMatrix random_density(const Dims& dims, Rng& rng, int rank = 0);
Mat random_unitary(long d, Rng& rng);
// Stiefel point: m x k with orthonormal columns.
Mat random_isometry(long m, long k, Rng& rng);
Mat random_local_unitary(const Dims& dims, Rng& rng);
Mat random_local_invertible(const Dims& dims, Rng& rng);

}  // namespace entanglia
