// SPDX-License-Identifier: Apache-2.0
#include "entqfi/measures.hpp"

#include <algorithm>
#include <cmath>

namespace entqfi {

namespace {

Matrix4c spin_flip()
{
    return kron(pauli_y(), pauli_y());
}

double clamp_unit(double v)
{
    return std::clamp(v, 0.0, 1.0);
}

}  // namespace

double concurrence(const DensityMatrix& rho)
{
    // The lambda_i (square roots of the eigenvalues of rho (sy x sy) rho* (sy x sy))
    // are the singular values of tau = W^T (sy x sy) W with rho = W W^dagger.
    const Spectrum spec = herm_eig(rho.matrix());
    Matrix4c w;
    for (int j = 0; j < 4; ++j) {
        const double p = spec.values(j) > tol::zero_cutoff ? spec.values(j) : 0.0;
        w.col(j) = std::sqrt(p) * spec.vectors.col(j);
    }
    const Matrix4c tau = w.transpose() * spin_flip() * w;
    const Eigen::Vector4d lambda = Eigen::JacobiSVD<Matrix4c>(tau).singularValues();
    return clamp_unit(lambda(0) - lambda(1) - lambda(2) - lambda(3));
}

double min_partial_transpose_eigenvalue(const DensityMatrix& rho)
{
    const Spectrum pt = herm_eig(partial_transpose(rho, Qubit::B));
    return pt.values(3);
}

double negativity(const DensityMatrix& rho)
{
    const Spectrum pt = herm_eig(partial_transpose(rho, Qubit::B));
    double sum = 0.0;
    for (double mu : pt.values) {
        sum += std::max(0.0, -mu);
    }
    return clamp_unit(2.0 * sum);
}

bool is_separable(const DensityMatrix& rho)
{
    return min_partial_transpose_eigenvalue(rho) >= -kSeparabilityTolerance;
}

double binary_entropy(double p)
{
    double h = 0.0;
    for (double q : {p, 1.0 - p}) {
        if (q > 0.0) {
            h -= q * std::log2(q);
        }
    }
    return h;
}

double ree_pure_oracle(const ComplexVector& psi)
{
    if (psi.size() != 4) {
        throw ValidationError("ree_pure_oracle: expected a two-qubit amplitude vector");
    }
    if (std::abs(psi.norm() - 1.0) > 1e-10) {
        throw ValidationError("ree_pure_oracle: state is not normalized within 1e-10");
    }
    return von_neumann_entropy(partial_trace(DensityMatrix::from_pure(psi), Qubit::A));
}

double ree_bell_diagonal_oracle(double lambda_max)
{
    if (!(lambda_max >= 0.5 && lambda_max <= 1.0)) {
        throw ValidationError("ree_bell_diagonal_oracle: lambda_max must lie in [1/2, 1]");
    }
    return 1.0 - binary_entropy(lambda_max);
}

MeasureTriple measure_triple(const DensityMatrix& rho, const ReeSolverConfig& cfg)
{
    MeasureTriple out;
    out.separable = is_separable(rho);
    out.concurrence = concurrence(rho);
    out.negativity = negativity(rho);
    const ReeSolution sol = ree(rho, cfg);
    out.ree = clamp_unit(sol.value);
    out.ree_converged = sol.converged;
    return out;
}

}  // namespace entqfi
