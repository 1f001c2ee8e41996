// SPDX-License-Identifier: Apache-2.0
//
// Exhaustive search of the mean QFI over local Euler rotations
// U(alpha, beta, gamma) = U_x(alpha) U_z(beta) U_x(gamma), U_j(t) = exp(-i t s_j / 2),
// applied independently to each qubit.
#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>

#include "entqfi/qcore.hpp"

namespace entqfi {

/// Six Euler angles in [0, 2pi): (alpha, beta, gamma) of qubit A then of qubit B.
struct EulerAngleSet
{
    std::array<double, 6> angles{};

    double alpha_a() const { return angles[0]; }
    double beta_a() const { return angles[1]; }
    double gamma_a() const { return angles[2]; }
    double alpha_b() const { return angles[3]; }
    double beta_b() const { return angles[4]; }
    double gamma_b() const { return angles[5]; }

    Matrix2c unitary_a() const;
    Matrix2c unitary_b() const;

    /// Lexicographic over (alpha_a, ..., gamma_b).
    friend auto operator<=>(const EulerAngleSet&, const EulerAngleSet&) = default;
};

struct LoccOptimum
{
    double max_value = 0.0;
    EulerAngleSet max_angles;
    double min_value = 0.0;
    EulerAngleSet min_angles;
    double raw_value = 0.0;
    double step_used = 0.0;  // radians; the finest step that ran
    bool refined = false;
    std::uint64_t evaluations = 0;
};

Matrix2c euler_unitary(double alpha, double beta, double gamma);

/// Grid with step 2pi/divisor per angle, divisor >= 2; divisor^6 evaluations.
LoccOptimum grid_search(const DensityMatrix& rho, int divisor);

/// Same, for a step in radians; throws ConfigError unless step == 2pi/k for an integer k >= 2.
LoccOptimum grid_search_step(const DensityMatrix& rho, double step);

struct RefinementConfig
{
    int grid_divisor = 4;    // pi/2
    int refine_divisor = 6;  // pi/3
    /// A direction counts as unchanged when it moves the value by at most this much.
    double unchanged_tolerance = 1e-9;
};

/// Coarse grid, then a fine grid when either the max or the min did not move away
/// from the unrotated value; results of both passes are merged.
LoccOptimum optimize_with_refinement(const DensityMatrix& rho, const RefinementConfig& cfg = {});

/// True when both max and min moved away from the unrotated value.
bool is_resolved(const LoccOptimum& opt, double tolerance = 1e-9);

/// "a;b;c;d;e;f" with 6 decimals.
std::string format_angles(const EulerAngleSet& angles);

}  // namespace entqfi
