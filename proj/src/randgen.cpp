// SPDX-License-Identifier: Apache-2.0
#include "entqfi/randgen.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace entqfi {

double RngStream::normal() noexcept
{
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(t);
    has_spare_ = true;
    return r * std::cos(t);
}

RngStream derive_stream(std::uint64_t master_seed, std::uint64_t index) noexcept
{
    return RngStream(splitmix64_mix(splitmix64_mix(master_seed) + (index + 1) * 0xd1b54a32d192ed03ull));
}

std::array<double, 4> simplex_eigenvalues(RngStream& rng)
{
    std::array<double, 3> cuts{rng.uniform(), rng.uniform(), rng.uniform()};
    std::sort(cuts.begin(), cuts.end());
    return {cuts[0], cuts[1] - cuts[0], cuts[2] - cuts[1], 1.0 - cuts[2]};
}

ComplexMatrix haar_unitary(RngStream& rng, Eigen::Index dim)
{
    if (dim < 1) {
        throw ValidationError("haar_unitary: dimension must be positive");
    }
    ComplexMatrix z(dim, dim);
    const double scale = 1.0 / std::sqrt(2.0);
    for (Eigen::Index c = 0; c < dim; ++c) {
        for (Eigen::Index r = 0; r < dim; ++r) {
            const double re = rng.normal();
            const double im = rng.normal();
            z(r, c) = scale * Complex{re, im};
        }
    }
    Eigen::HouseholderQR<ComplexMatrix> qr(z);
    ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(dim, dim);
    const ComplexMatrix& r = qr.matrixQR();
    for (Eigen::Index j = 0; j < dim; ++j) {
        const Complex d = r(j, j);
        const double mag = std::abs(d);
        q.col(j) *= mag > 0.0 ? d / mag : Complex{1.0, 0.0};
    }
    return q;
}

DensityMatrix random_density_matrix(RngStream& rng)
{
    const std::array<double, 4> p = simplex_eigenvalues(rng);
    const ComplexMatrix v = haar_unitary(rng, 4);
    const Eigen::Vector4d diag(p[0], p[1], p[2], p[3]);
    ComplexMatrix m = v * diag.cast<Complex>().asDiagonal() * v.adjoint();
    return DensityMatrix(std::move(m));
}

std::vector<DensityMatrix> generate_ensemble(const EnsembleConfig& cfg)
{
    if (cfg.count < 1) {
        throw ConfigError("ensemble count must be at least 1");
    }
    std::vector<DensityMatrix> out;
    out.reserve(cfg.count);
    for (std::size_t i = 0; i < cfg.count; ++i) {
        RngStream rng = derive_stream(cfg.master_seed, i);
        out.push_back(random_density_matrix(rng));
    }
    return out;
}

}  // namespace entqfi
