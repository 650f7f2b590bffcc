#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "qcoord/quantum/complex_matrix.hpp"
#include "qcoord/quantum/density_matrix.hpp"
#include "qcoord/quantum/measurement.hpp"

namespace qcoord {

using Rng = std::mt19937_64;

/// Independent stream for (seed, stream) pairs; used to give every restart
/// or test case its own generator regardless of scheduling.
Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0);

/// Haar-random unit vector.
std::vector<Complex> random_unit_vector(std::size_t dim, Rng& rng);

DensityMatrix random_pure_state(std::size_t dim, Rng& rng);

/// Full-rank mixed state from the Ginibre ensemble: G G^dagger / tr(G G^dagger).
DensityMatrix random_mixed_state(std::size_t dim, Rng& rng);

/// Haar-random unitary (QR of a complex Gaussian matrix with phase fix).
ComplexMatrix random_unitary(std::size_t dim, Rng& rng);

/// Rank-one projective measurement in a Haar-random basis.
Measurement random_projective_measurement(std::size_t dim, Rng& rng);

/// General POVM with `outcomes` elements: S^{-1/2} A_k S^{-1/2} with A_k
/// random positive and S = sum_k A_k.
Measurement random_povm(std::size_t dim, std::size_t outcomes, Rng& rng);

}  // namespace qcoord
