// SPDX-License-Identifier: Apache-2.0
#include "entqfi/locc.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <vector>

#include "entqfi/qfi.hpp"

namespace entqfi {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// exp(-i t s / 2) = cos(t/2) I - i sin(t/2) s
Matrix2c axis_rotation(const Matrix2c& pauli, double t)
{
    return std::cos(0.5 * t) * Matrix2c::Identity() - Complex{0.0, std::sin(0.5 * t)} * pauli;
}

double grid_angle(int index, int divisor)
{
    return kTwoPi * index / divisor;
}

struct Candidate
{
    double value;
    EulerAngleSet angles;
};

void merge_max(Candidate& best, const Candidate& other)
{
    if (other.value > best.value || (other.value == best.value && other.angles < best.angles)) {
        best = other;
    }
}

void merge_min(Candidate& best, const Candidate& other)
{
    if (other.value < best.value || (other.value == best.value && other.angles < best.angles)) {
        best = other;
    }
}

}  // namespace

Matrix2c euler_unitary(double alpha, double beta, double gamma)
{
    return axis_rotation(pauli_x(), alpha) * axis_rotation(pauli_z(), beta) * axis_rotation(pauli_x(), gamma);
}

Matrix2c EulerAngleSet::unitary_a() const
{
    return euler_unitary(angles[0], angles[1], angles[2]);
}

Matrix2c EulerAngleSet::unitary_b() const
{
    return euler_unitary(angles[3], angles[4], angles[5]);
}

LoccOptimum grid_search(const DensityMatrix& rho, int divisor)
{
    if (divisor < 2) {
        throw ConfigError("grid divisor must be at least 2");
    }
    const Matrix4c m = rho.matrix4();
    const int per_qubit = divisor * divisor * divisor;

    std::vector<Matrix2c> unitaries;
    std::vector<std::array<double, 3>> triples;
    unitaries.reserve(per_qubit);
    triples.reserve(per_qubit);
    for (int a = 0; a < divisor; ++a) {
        for (int b = 0; b < divisor; ++b) {
            for (int c = 0; c < divisor; ++c) {
                const std::array<double, 3> t{grid_angle(a, divisor), grid_angle(b, divisor),
                                              grid_angle(c, divisor)};
                triples.push_back(t);
                unitaries.push_back(euler_unitary(t[0], t[1], t[2]));
            }
        }
    }

    const Matrix2c id = Matrix2c::Identity();
    LoccOptimum out;
    bool first = true;
    // Index order is lexicographic in the angles, so a strict comparison keeps the
    // lexicographically smallest optimum.
    for (int ia = 0; ia < per_qubit; ++ia) {
        const Matrix4c rotated_a = conjugate(m, kron(unitaries[ia], id));
        for (int ib = 0; ib < per_qubit; ++ib) {
            const double v = max_mean_qfi_value(conjugate(rotated_a, kron(id, unitaries[ib])));
            if (first || v > out.max_value) {
                out.max_value = v;
                out.max_angles = EulerAngleSet{{triples[ia][0], triples[ia][1], triples[ia][2],
                                                triples[ib][0], triples[ib][1], triples[ib][2]}};
            }
            if (first || v < out.min_value) {
                out.min_value = v;
                out.min_angles = EulerAngleSet{{triples[ia][0], triples[ia][1], triples[ia][2],
                                                triples[ib][0], triples[ib][1], triples[ib][2]}};
            }
            if (first) {
                out.raw_value = v;
                first = false;
            }
        }
    }
    out.step_used = kTwoPi / divisor;
    out.evaluations = static_cast<std::uint64_t>(per_qubit) * per_qubit;
    return out;
}

LoccOptimum grid_search_step(const DensityMatrix& rho, double step)
{
    if (!(step > 0.0) || !std::isfinite(step)) {
        throw ConfigError("grid step must be positive");
    }
    const double k = std::round(kTwoPi / step);
    if (k < 2.0 || std::abs(kTwoPi / k - step) > 1e-12) {
        throw ConfigError("grid step must equal 2*pi/k for an integer k >= 2");
    }
    return grid_search(rho, static_cast<int>(k));
}

bool is_resolved(const LoccOptimum& opt, double tolerance)
{
    return opt.max_value - opt.raw_value > tolerance && opt.raw_value - opt.min_value > tolerance;
}

LoccOptimum optimize_with_refinement(const DensityMatrix& rho, const RefinementConfig& cfg)
{
    if (cfg.refine_divisor <= cfg.grid_divisor) {
        throw ConfigError("refine divisor must exceed the grid divisor");
    }
    LoccOptimum out = grid_search(rho, cfg.grid_divisor);
    if (is_resolved(out, cfg.unchanged_tolerance)) {
        return out;
    }
    const LoccOptimum fine = grid_search(rho, cfg.refine_divisor);
    Candidate best_max{out.max_value, out.max_angles};
    Candidate best_min{out.min_value, out.min_angles};
    merge_max(best_max, {fine.max_value, fine.max_angles});
    merge_min(best_min, {fine.min_value, fine.min_angles});
    out.max_value = best_max.value;
    out.max_angles = best_max.angles;
    out.min_value = best_min.value;
    out.min_angles = best_min.angles;
    out.step_used = fine.step_used;
    out.refined = true;
    out.evaluations += fine.evaluations;
    return out;
}

std::string format_angles(const EulerAngleSet& angles)
{
    std::string out;
    char buf[32];
    for (std::size_t i = 0; i < angles.angles.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%s%.6f", i == 0 ? "" : ";", angles.angles[i]);
        out += buf;
    }
    return out;
}

}  // namespace entqfi
