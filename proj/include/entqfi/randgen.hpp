// SPDX-License-Identifier: Apache-2.0
//
// Random two-qubit density matrices rho = V P V^dagger with P uniform on the
// probability simplex and V Haar-distributed.
#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "entqfi/qcore.hpp"
#include "entqfi/rng.hpp"

namespace entqfi {

struct EnsembleConfig
{
    std::size_t count = 1000;
    std::uint64_t master_seed = 1;
};

/// Uniform draw from the 3-simplex via sorted uniform gaps.
std::array<double, 4> simplex_eigenvalues(RngStream& rng);

/// Haar unitary: QR of a complex Ginibre matrix with the R-diagonal phases removed.
ComplexMatrix haar_unitary(RngStream& rng, Eigen::Index dim);

DensityMatrix random_density_matrix(RngStream& rng);

/// State i is random_density_matrix(derive_stream(master_seed, i)).
std::vector<DensityMatrix> generate_ensemble(const EnsembleConfig& cfg);

}  // namespace entqfi
