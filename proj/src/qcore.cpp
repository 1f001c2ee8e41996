// SPDX-License-Identifier: Apache-2.0
#include "entqfi/qcore.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace entqfi {

namespace {

constexpr Complex kI{0.0, 1.0};

bool all_finite(const ComplexMatrix& m)
{
    for (Eigen::Index i = 0; i < m.size(); ++i) {
        if (!std::isfinite(m.data()[i].real()) || !std::isfinite(m.data()[i].imag())) {
            return false;
        }
    }
    return true;
}

double hermitian_defect(const ComplexMatrix& m)
{
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

std::string dump(const ComplexMatrix& m)
{
    std::ostringstream os;
    os.precision(17);
    os << m;
    return os.str();
}

// Sum of x log2 x over the cutoff; 0 log 0 := 0.
double entropy_of(const Eigen::VectorXd& p)
{
    double s = 0.0;
    for (double v : p) {
        if (v > tol::zero_cutoff) {
            s -= v * std::log2(v);
        }
    }
    return s;
}

}  // namespace

//---------------------------------------------------------------------------//
// DensityMatrix
//---------------------------------------------------------------------------//

DensityMatrix::DensityMatrix(ComplexMatrix m) : m_(std::move(m))
{
    if (m_.rows() == 0 || m_.rows() != m_.cols()) {
        throw ValidationError("density matrix must be square and non-empty");
    }
    if (!all_finite(m_)) {
        throw ValidationError("density matrix has non-finite entries");
    }
    if (double d = hermitian_defect(m_); d > tol::hermitian) {
        throw ValidationError("density matrix is not Hermitian (defect " + std::to_string(d) + ")");
    }
    if (double t = std::abs(m_.trace() - Complex{1.0, 0.0}); t > tol::trace) {
        throw ValidationError("density matrix trace differs from 1 by " + std::to_string(t));
    }
    Spectrum spec = herm_eig(m_);
    const double smallest = spec.values.minCoeff();
    if (smallest < -tol::psd) {
        throw ValidationError("density matrix has negative eigenvalue " + std::to_string(smallest));
    }
    if (smallest < 0.0) {
        clamped_ = -smallest;
        Eigen::VectorXd p = spec.values.cwiseMax(0.0);
        m_ = spec.vectors * p.cast<Complex>().asDiagonal() * spec.vectors.adjoint();
    }
    m_ = 0.5 * (m_ + m_.adjoint()).eval();
}

DensityMatrix DensityMatrix::from_pure(const ComplexVector& psi)
{
    if (std::abs(psi.norm() - 1.0) > tol::trace) {
        throw ValidationError("pure state is not normalized");
    }
    return DensityMatrix(psi * psi.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(Eigen::Index dim)
{
    return DensityMatrix(ComplexMatrix::Identity(dim, dim) / static_cast<double>(dim));
}

Matrix4c DensityMatrix::matrix4() const
{
    if (dim() != 4) {
        throw ValidationError("expected a two-qubit (4x4) density matrix");
    }
    return m_;
}

//---------------------------------------------------------------------------//
// Primitives
//---------------------------------------------------------------------------//

Matrix2c pauli_x()
{
    Matrix2c s;
    s << 0.0, 1.0, 1.0, 0.0;
    return s;
}

Matrix2c pauli_y()
{
    Matrix2c s;
    s << 0.0, -kI, kI, 0.0;
    return s;
}

Matrix2c pauli_z()
{
    Matrix2c s;
    s << 1.0, 0.0, 0.0, -1.0;
    return s;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b)
{
    if (!all_finite(a) || !all_finite(b)) {
        throw ValidationError("kron: non-finite input");
    }
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

Matrix4c kron(const Matrix2c& a, const Matrix2c& b)
{
    Matrix4c out;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
        }
    }
    return out;
}

Spectrum herm_eig(const ComplexMatrix& m)
{
    if (m.rows() != m.cols()) {
        throw ValidationError("herm_eig: matrix is not square");
    }
    if (!all_finite(m)) {
        throw ValidationError("herm_eig: non-finite input");
    }
    if (m.size() > 0 && hermitian_defect(m) > tol::hermitian) {
        throw ValidationError("herm_eig: matrix is not Hermitian");
    }
    const ComplexMatrix sym = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
    if (solver.info() != Eigen::Success) {
        throw EigenError("herm_eig: eigensolver did not converge", dump(m));
    }
    const Eigen::Index n = m.rows();
    Spectrum out{Eigen::VectorXd(n), ComplexMatrix(n, n)};
    for (Eigen::Index j = 0; j < n; ++j) {
        out.values(j) = solver.eigenvalues()(n - 1 - j);
        out.vectors.col(j) = solver.eigenvectors().col(n - 1 - j);
    }
    return out;
}

std::pair<Eigen::Vector3d, Eigen::Matrix3d> sym_eig(const Eigen::Matrix3d& m)
{
    const Eigen::Matrix3d sym = 0.5 * (m + m.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> solver(sym);
    if (solver.info() != Eigen::Success) {
        std::ostringstream os;
        os << m;
        throw EigenError("sym_eig: eigensolver did not converge", os.str());
    }
    Eigen::Vector3d vals = solver.eigenvalues().reverse();
    Eigen::Matrix3d vecs = solver.eigenvectors().rowwise().reverse();
    return {vals, vecs};
}

double sym_eig_max(const Eigen::Matrix3d& m)
{
    const Eigen::Matrix3d sym = 0.5 * (m + m.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> solver(sym, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        std::ostringstream os;
        os << m;
        throw EigenError("sym_eig_max: eigensolver did not converge", os.str());
    }
    return solver.eigenvalues()(2);
}

Matrix4c partial_transpose(const Matrix4c& m, Qubit subsystem)
{
    Matrix4c out;
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            for (int c = 0; c < 2; ++c) {
                for (int d = 0; d < 2; ++d) {
                    // <ab|m|cd>
                    const Complex v = m(2 * a + b, 2 * c + d);
                    if (subsystem == Qubit::B) {
                        out(2 * a + d, 2 * c + b) = v;
                    } else {
                        out(2 * c + b, 2 * a + d) = v;
                    }
                }
            }
        }
    }
    return out;
}

ComplexMatrix partial_transpose(const DensityMatrix& rho, Qubit subsystem)
{
    return partial_transpose(rho.matrix4(), subsystem);
}

DensityMatrix partial_trace(const DensityMatrix& rho, Qubit keep)
{
    const Matrix4c m = rho.matrix4();
    ComplexMatrix out = ComplexMatrix::Zero(2, 2);
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            for (int k = 0; k < 2; ++k) {
                out(i, j) += keep == Qubit::A ? m(2 * i + k, 2 * j + k) : m(2 * k + i, 2 * k + j);
            }
        }
    }
    return DensityMatrix(std::move(out));
}

double von_neumann_entropy(const DensityMatrix& rho)
{
    return entropy_of(herm_eig(rho.matrix()).values);
}

double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma)
{
    if (rho.dim() != sigma.dim()) {
        throw ValidationError("relative_entropy: dimension mismatch");
    }
    const Spectrum rs = herm_eig(rho.matrix());
    const Spectrum ss = herm_eig(sigma.matrix());

    double cross = 0.0;  // -tr(rho log2 sigma)
    for (Eigen::Index j = 0; j < ss.values.size(); ++j) {
        const auto v = ss.vectors.col(j);
        const double weight = (v.adjoint() * rho.matrix() * v)(0, 0).real();
        const double s = ss.values(j);
        if (s <= tol::zero_cutoff) {
            if (weight > tol::zero_cutoff) {
                return kInfiniteEntropy;
            }
            continue;
        }
        cross -= weight * std::log2(s);
    }
    return std::max(0.0, cross - entropy_of(rs.values));
}

bool is_unitary(const ComplexMatrix& u, double tolerance)
{
    if (u.rows() != u.cols() || !all_finite(u)) {
        return false;
    }
    const ComplexMatrix defect = u.adjoint() * u - ComplexMatrix::Identity(u.rows(), u.cols());
    return defect.cwiseAbs().maxCoeff() <= tolerance;
}

DensityMatrix apply_local_unitary(const DensityMatrix& rho, const Matrix2c& u_a, const Matrix2c& u_b)
{
    if (!is_unitary(u_a) || !is_unitary(u_b)) {
        throw ValidationError("apply_local_unitary: factor is not unitary within 1e-10");
    }
    return DensityMatrix(ComplexMatrix(conjugate(rho.matrix4(), kron(u_a, u_b))));
}

Vector4c ket_00()
{
    return Vector4c(1.0, 0.0, 0.0, 0.0);
}

Vector4c bell_phi_plus()
{
    const double h = 1.0 / std::sqrt(2.0);
    return Vector4c(h, 0.0, 0.0, h);
}

Vector4c bell_psi_minus()
{
    const double h = 1.0 / std::sqrt(2.0);
    return Vector4c(0.0, h, -h, 0.0);
}

DensityMatrix werner_state(double p)
{
    const Vector4c phi = bell_phi_plus();
    const Matrix4c m = p * (phi * phi.adjoint()) + (1.0 - p) * Matrix4c::Identity() / 4.0;
    return DensityMatrix(ComplexMatrix(m));
}

}  // namespace entqfi
