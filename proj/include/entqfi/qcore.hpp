// SPDX-License-Identifier: Apache-2.0
//
// Dense complex linear algebra and two-qubit state primitives.
//
// Qubit A is always the left tensor factor, i.e. basis index = 2*a + b.
// Entropies are in bits.
#pragma once

#include <complex>
#include <limits>

#include <Eigen/Dense>

#include "entqfi/errors.hpp"

namespace entqfi {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using Matrix2c = Eigen::Matrix2cd;
using Matrix4c = Eigen::Matrix4cd;
using Vector4c = Eigen::Vector4cd;

namespace tol {
inline constexpr double hermitian = 1e-10;
inline constexpr double trace = 1e-10;
inline constexpr double psd = 1e-10;
inline constexpr double unitary = 1e-10;
/// Eigenvalues below this are treated as exact zeros in logs and ratios.
inline constexpr double zero_cutoff = 1e-12;
}  // namespace tol

/// Value returned by relative_entropy when supp(rho) is not inside supp(sigma).
inline constexpr double kInfiniteEntropy = std::numeric_limits<double>::infinity();

enum class Qubit { A, B };

/// Hermitian eigendecomposition, eigenvalues descending.
struct Spectrum
{
    Eigen::VectorXd values;
    ComplexMatrix vectors;  // column j pairs with values(j)
};

/// Validated density operator (Hermitian, unit trace, PSD) of any dimension.
///
/// Eigenvalues in (-1e-10, 0) are clamped to zero on construction; the largest
/// clamped magnitude is kept in clamped_magnitude().
class DensityMatrix
{
  public:
    explicit DensityMatrix(ComplexMatrix m);

    static DensityMatrix from_pure(const ComplexVector& psi);
    static DensityMatrix maximally_mixed(Eigen::Index dim);

    const ComplexMatrix& matrix() const noexcept { return m_; }
    Eigen::Index dim() const noexcept { return m_.rows(); }
    double clamped_magnitude() const noexcept { return clamped_; }

    /// Fixed-size copy; requires dim() == 4.
    Matrix4c matrix4() const;

  private:
    ComplexMatrix m_;
    double clamped_ = 0.0;
};

// Pauli matrices.
Matrix2c pauli_x();
Matrix2c pauli_y();
Matrix2c pauli_z();

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
Matrix4c kron(const Matrix2c& a, const Matrix2c& b);

/// Symmetrizes to (M + M^dagger)/2, then decomposes. Throws ValidationError if the
/// input is not Hermitian within 1e-10 and EigenError if the solver fails.
Spectrum herm_eig(const ComplexMatrix& m);

/// Same solver, for the small real symmetric matrices used by the QFI code.
/// Returns eigenvalues descending and the matching orthonormal eigenvectors.
std::pair<Eigen::Vector3d, Eigen::Matrix3d> sym_eig(const Eigen::Matrix3d& m);

/// Largest eigenvalue of a real symmetric 3x3 matrix.
double sym_eig_max(const Eigen::Matrix3d& m);

ComplexMatrix partial_transpose(const DensityMatrix& rho, Qubit subsystem);
Matrix4c partial_transpose(const Matrix4c& m, Qubit subsystem);

/// Traces out the other qubit and returns the reduced state of `keep`.
DensityMatrix partial_trace(const DensityMatrix& rho, Qubit keep);

double von_neumann_entropy(const DensityMatrix& rho);

/// S(rho || sigma) in bits, clamped at 0; kInfiniteEntropy on support violation.
double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma);

/// (u_a x u_b) rho (u_a x u_b)^dagger. Throws ValidationError on a non-unitary factor.
DensityMatrix apply_local_unitary(const DensityMatrix& rho, const Matrix2c& u_a,
                                  const Matrix2c& u_b);

/// Unchecked fixed-size conjugation used by the grid search hot loop.
inline Matrix4c conjugate(const Matrix4c& m, const Matrix4c& u)
{
    return u * m * u.adjoint();
}

bool is_unitary(const ComplexMatrix& u, double tolerance = tol::unitary);

// Frequently used two-qubit vectors.
Vector4c ket_00();
Vector4c bell_phi_plus();
Vector4c bell_psi_minus();

/// p |Phi+><Phi+| + (1 - p) I/4.
DensityMatrix werner_state(double p);

}  // namespace entqfi
