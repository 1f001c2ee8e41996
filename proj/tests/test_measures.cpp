// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "entqfi/measures.hpp"
#include "test_support.hpp"

using namespace entqfi;
using namespace entqfi::testing;

namespace {

// Concurrence straight from the definition: square roots of the (non-Hermitian)
// eigenvalues of rho (sy x sy) rho* (sy x sy).
double concurrence_by_definition(const DensityMatrix& rho)
{
    const Matrix4c m = rho.matrix4();
    const Matrix4c flip = kron(pauli_y(), pauli_y());
    const Matrix4c r = m * flip * m.conjugate() * flip;
    Eigen::ComplexEigenSolver<Matrix4c> es(r);
    std::array<double, 4> l{};
    for (int i = 0; i < 4; ++i) {
        l[i] = std::sqrt(std::max(0.0, es.eigenvalues()(i).real()));
    }
    std::sort(l.begin(), l.end(), std::greater<>());
    return std::max(0.0, l[0] - l[1] - l[2] - l[3]);
}

DensityMatrix random_state(std::uint64_t i)
{
    RngStream rng = derive_stream(1234, i);
    return random_density_matrix(rng);
}

}  // namespace

TEST(Concurrence, Examples)
{
    EXPECT_NEAR(concurrence(DensityMatrix::from_pure(bell_phi_plus())), 1.0, 1e-12);
    EXPECT_NEAR(concurrence(DensityMatrix::from_pure(ket_00())), 0.0, 1e-12);
    // Bell-diagonal: C = max(0, (3p - 1)/2)
    EXPECT_NEAR(concurrence(werner_state(0.5)), 0.25, 1e-12);
    EXPECT_NEAR(concurrence(werner_state(0.8)), 0.7, 1e-12);
    EXPECT_NEAR(concurrence(werner_state(0.2)), 0.0, 1e-12);
}

TEST(Concurrence, MatchesDefinitionOnRandomStates)
{
    for (std::uint64_t i = 0; i < 200; ++i) {
        const DensityMatrix rho = random_state(i);
        EXPECT_NEAR(concurrence(rho), concurrence_by_definition(rho), 1e-6) << "state " << i;
    }
}

TEST(Negativity, Examples)
{
    EXPECT_NEAR(negativity(DensityMatrix::from_pure(bell_phi_plus())), 1.0, 1e-12);
    EXPECT_NEAR(negativity(DensityMatrix::maximally_mixed(4)), 0.0, 1e-15);
    // partial-transpose eigenvalue (1 - 3p)/4 -> N = (3p - 1)/2
    EXPECT_NEAR(negativity(werner_state(0.5)), 0.25, 1e-12);
}

TEST(Separability, Examples)
{
    EXPECT_TRUE(is_separable(DensityMatrix::maximally_mixed(4)));
    EXPECT_FALSE(is_separable(DensityMatrix::from_pure(bell_phi_plus())));
    EXPECT_TRUE(is_separable(werner_state(1.0 / 3.0)));
    EXPECT_FALSE(is_separable(werner_state(1.0 / 3.0 + 1e-6)));
}

TEST(Measures, LocalUnitaryInvariance)
{
    RngStream rng = derive_stream(55, 1);
    for (std::uint64_t i = 0; i < 100; ++i) {
        const DensityMatrix rho = random_state(i);
        const DensityMatrix out = apply_local_unitary(rho, random_qubit_unitary(rng), random_qubit_unitary(rng));
        EXPECT_NEAR(concurrence(out), concurrence(rho), 1e-9);
        EXPECT_NEAR(negativity(out), negativity(rho), 1e-9);
    }
}

TEST(Measures, NegativityBoundedByConcurrence)
{
    for (std::uint64_t i = 0; i < 500; ++i) {
        const DensityMatrix rho = random_state(i);
        const double c = concurrence(rho);
        const double n = negativity(rho);
        EXPECT_GE(n, 0.0);
        EXPECT_LE(n, c + 1e-12);
        EXPECT_LE(c, 1.0);
    }
}

TEST(Measures, PureStatesHaveEqualNegativityAndConcurrence)
{
    RngStream rng = derive_stream(56, 0);
    for (int i = 0; i < 100; ++i) {
        const DensityMatrix rho = DensityMatrix::from_pure(random_pure(rng));
        EXPECT_NEAR(negativity(rho), concurrence(rho), 1e-9);
    }
}

TEST(Measures, PptConsistency)
{
    for (std::uint64_t i = 0; i < 500; ++i) {
        const DensityMatrix rho = random_state(i);
        const bool sep = is_separable(rho);
        EXPECT_EQ(sep, concurrence(rho) <= 1e-9) << "state " << i;
        EXPECT_EQ(sep, negativity(rho) <= 1e-9) << "state " << i;
    }
}

// ---------- oracles ----------

TEST(PureOracle, Examples)
{
    EXPECT_NEAR(ree_pure_oracle(ket_00()), 0.0, 1e-12);
    EXPECT_NEAR(ree_pure_oracle(bell_phi_plus()), 1.0, 1e-12);
    const double a = std::cos(std::numbers::pi / 8);
    const double b = std::sin(std::numbers::pi / 8);
    // H2(cos^2(pi/8)) = 0.600876...
    EXPECT_NEAR(ree_pure_oracle(Vector4c(a, 0, 0, b)), 0.6009, 5e-5);
    EXPECT_THROW(ree_pure_oracle(Vector4c(1, 1, 0, 0)), ValidationError);
}

TEST(BellDiagonalOracle, Examples)
{
    EXPECT_NEAR(ree_bell_diagonal_oracle(0.5), 0.0, 1e-15);
    EXPECT_NEAR(ree_bell_diagonal_oracle(1.0), 1.0, 1e-15);
    EXPECT_NEAR(ree_bell_diagonal_oracle(0.75), 0.18872, 1e-5);
    EXPECT_THROW(ree_bell_diagonal_oracle(0.4), ValidationError);
    EXPECT_THROW(ree_bell_diagonal_oracle(1.2), ValidationError);
}

// Brute force: minimize S(rho || sigma_s) over separable Bell-diagonal sigma_s whose
// largest weight s runs over [0, 1/2] and whose remaining weights keep the proportions
// of rho. Evaluated through the generic matrix relative entropy.
TEST(BellDiagonalOracle, AgreesWithOneDimensionalScan)
{
    for (double lmax : {0.55, 0.65, 0.75, 0.85, 0.95}) {
        const std::array<double, 3> rest{0.5, 0.3, 0.2};
        const DensityMatrix rho =
            bell_diagonal({lmax, (1 - lmax) * rest[0], (1 - lmax) * rest[1], (1 - lmax) * rest[2]});
        double best = kInfiniteEntropy;
        for (int k = 1; k <= 5000; ++k) {
            const double s = 0.5 * k / 5000.0;
            const DensityMatrix sigma =
                bell_diagonal({s, (1 - s) * rest[0], (1 - s) * rest[1], (1 - s) * rest[2]});
            best = std::min(best, relative_entropy(rho, sigma));
        }
        EXPECT_NEAR(ree_bell_diagonal_oracle(lmax), best, 1e-9) << "lambda_max " << lmax;
    }
}

TEST(BinaryEntropy, Values)
{
    EXPECT_EQ(binary_entropy(0.0), 0.0);
    EXPECT_EQ(binary_entropy(1.0), 0.0);
    EXPECT_NEAR(binary_entropy(0.5), 1.0, 1e-15);
}
