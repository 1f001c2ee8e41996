// SPDX-License-Identifier: Apache-2.0
//
// Two-qubit entanglement measures: concurrence, negativity, PPT separability and
// the relative entropy of entanglement (REE).
#pragma once

#include <cstdint>

#include "entqfi/qcore.hpp"
#include "entqfi/rng.hpp"

namespace entqfi {

/// Minimum partial-transpose eigenvalue that still counts as PPT.
inline constexpr double kSeparabilityTolerance = 1e-9;

double concurrence(const DensityMatrix& rho);
double negativity(const DensityMatrix& rho);
bool is_separable(const DensityMatrix& rho);

/// Smallest eigenvalue of the partial transpose on qubit B.
double min_partial_transpose_eigenvalue(const DensityMatrix& rho);

struct ReeSolverConfig
{
    int components = 16;
    int multistarts = 5;
    int max_sweeps = 10000;
    /// Stop once a sweep improves the objective by less than this many bits.
    double threshold = 1e-7;
    /// Weight of I/4 mixed into every candidate during the descent.
    double eps_mix = 1e-9;
    /// Return rho itself (value 0) when rho passes the PPT test.
    bool shortcut_separable = true;
    RngStream stream{0};
};

struct ReeSolution
{
    double value = 0.0;  // bits
    DensityMatrix closest_state = DensityMatrix::maximally_mixed(4);
    int iterations = 0;
    bool converged = false;
    double residual = 0.0;  // improvement of the last sweep, bits
};

/// Minimizes S(rho || sigma) over mixtures of `components` product pure states.
ReeSolution ree(const DensityMatrix& rho, const ReeSolverConfig& cfg);

/// Entropy of entanglement of a pure two-qubit state, which equals its REE.
double ree_pure_oracle(const ComplexVector& psi);

/// Closed-form REE of a Bell-diagonal state with largest weight lambda_max in [1/2, 1].
double ree_bell_diagonal_oracle(double lambda_max);

/// Binary entropy in bits.
double binary_entropy(double p);

struct MeasureTriple
{
    double concurrence = 0.0;
    double negativity = 0.0;
    double ree = 0.0;
    bool separable = true;
    bool ree_converged = true;
};

/// All three measures, clamped to [0, 1].
MeasureTriple measure_triple(const DensityMatrix& rho, const ReeSolverConfig& cfg);

}  // namespace entqfi
