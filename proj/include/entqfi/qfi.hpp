// SPDX-License-Identifier: Apache-2.0
//
// Quantum Fisher information of two qubits for collective spin rotations
// J_n = sum_a (n_a / 2)(s_a x I + I x s_a).
#pragma once

#include <array>

#include "entqfi/qcore.hpp"

namespace entqfi {

/// Number of particles; the mean QFI is F / N.
inline constexpr int kParticles = 2;

class SpinDirection
{
  public:
    /// Normalizes (x, y, z); throws ValidationError for a zero or non-finite vector.
    SpinDirection(double x, double y, double z);

    static SpinDirection x_axis() { return {1.0, 0.0, 0.0}; }
    static SpinDirection y_axis() { return {0.0, 1.0, 0.0}; }
    static SpinDirection z_axis() { return {0.0, 0.0, 1.0}; }

    const Eigen::Vector3d& vector() const noexcept { return n_; }

  private:
    Eigen::Vector3d n_;
};

/// C_kl matrix with k, l in (x, y, z); real symmetric.
using CMatrix = Eigen::Matrix3d;

struct QfiResult
{
    double mean_qfi = 0.0;
    SpinDirection optimal_direction = SpinDirection::z_axis();
    CMatrix c_matrix = CMatrix::Zero();
};

Matrix4c collective_spin(const SpinDirection& direction);

/// Collective spin components (J_x, J_y, J_z).
const std::array<Matrix4c, 3>& collective_spin_basis();

CMatrix c_matrix(const DensityMatrix& rho);

/// Direct sum sum_{i != j} 2 (p_i - p_j)^2 / (p_i + p_j) |<i|J_n|j>|^2.
double qfi_direction(const DensityMatrix& rho, const SpinDirection& n);

/// lambda_max(C) / N with the maximizing direction.
QfiResult max_mean_qfi(const DensityMatrix& rho);

/// max_mean_qfi(rho).mean_qfi on an unvalidated Hermitian matrix; used inside grid loops.
double max_mean_qfi_value(const Matrix4c& rho);

/// C matrix of an unvalidated Hermitian matrix.
CMatrix c_matrix(const Matrix4c& rho);

}  // namespace entqfi
