// SPDX-License-Identifier: Apache-2.0
#include "entqfi/qfi.hpp"

#include <array>
#include <cmath>

namespace entqfi {

SpinDirection::SpinDirection(double x, double y, double z) : n_(x, y, z)
{
    const double norm = n_.norm();
    if (!std::isfinite(norm) || norm == 0.0) {
        throw ValidationError("spin direction must be a finite non-zero vector");
    }
    n_ /= norm;
}

const std::array<Matrix4c, 3>& collective_spin_basis()
{
    static const std::array<Matrix4c, 3> basis = [] {
        const Matrix2c id = Matrix2c::Identity();
        std::array<Matrix4c, 3> out;
        const std::array<Matrix2c, 3> sigma{pauli_x(), pauli_y(), pauli_z()};
        for (int k = 0; k < 3; ++k) {
            out[k] = 0.5 * (kron(sigma[k], id) + kron(id, sigma[k]));
        }
        return out;
    }();
    return basis;
}

Matrix4c collective_spin(const SpinDirection& direction)
{
    const auto& j = collective_spin_basis();
    const Eigen::Vector3d& n = direction.vector();
    return n(0) * j[0] + n(1) * j[1] + n(2) * j[2];
}

CMatrix c_matrix(const Matrix4c& rho)
{
    const Matrix4c sym = 0.5 * (rho + rho.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix4c> es(sym);
    if (es.info() != Eigen::Success) {
        throw EigenError("c_matrix: eigensolver did not converge", "");
    }
    const Eigen::Vector4d& p = es.eigenvalues();
    const Matrix4c& v = es.eigenvectors();
    const auto& spin = collective_spin_basis();
    std::array<Matrix4c, 3> j;
    for (int k = 0; k < 3; ++k) {
        j[k] = v.adjoint() * spin[k] * v;
    }

    CMatrix c = CMatrix::Zero();
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            const double sum = p(a) + p(b);
            if (a == b || sum < tol::zero_cutoff) {
                continue;
            }
            const double diff = p(a) - p(b);
            const double f = diff * diff / sum;
            for (int k = 0; k < 3; ++k) {
                for (int l = k; l < 3; ++l) {
                    c(k, l) += f * 2.0 * (j[k](a, b) * j[l](b, a)).real();
                }
            }
        }
    }
    for (int k = 0; k < 3; ++k) {
        for (int l = 0; l < k; ++l) {
            c(k, l) = c(l, k);
        }
    }
    return c;
}

CMatrix c_matrix(const DensityMatrix& rho)
{
    return c_matrix(rho.matrix4());
}

double qfi_direction(const DensityMatrix& rho, const SpinDirection& n)
{
    const Spectrum spec = herm_eig(rho.matrix());
    const ComplexMatrix jn = spec.vectors.adjoint() * collective_spin(n) * spec.vectors;
    double f = 0.0;
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            const double sum = spec.values(a) + spec.values(b);
            if (a == b || sum < tol::zero_cutoff) {
                continue;
            }
            const double diff = spec.values(a) - spec.values(b);
            f += 2.0 * diff * diff / sum * std::norm(jn(a, b));
        }
    }
    return f;
}

double max_mean_qfi_value(const Matrix4c& rho)
{
    return sym_eig_max(c_matrix(rho)) / kParticles;
}

QfiResult max_mean_qfi(const DensityMatrix& rho)
{
    const CMatrix c = c_matrix(rho.matrix4());
    const auto [values, vectors] = sym_eig(c);
    Eigen::Vector3d n = vectors.col(0);
    // Sign convention: largest-magnitude component positive, first index wins ties.
    int lead = 0;
    for (int k = 1; k < 3; ++k) {
        if (std::abs(n(k)) > std::abs(n(lead))) {
            lead = k;
        }
    }
    if (n(lead) < 0.0) {
        n = -n;
    }
    return QfiResult{values(0) / kParticles, SpinDirection(n(0), n(1), n(2)), c};
}

}  // namespace entqfi
