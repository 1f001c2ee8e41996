// SPDX-License-Identifier: Apache-2.0
//
// Pairwise state orderings: an entanglement measure relation crossed with a
// maximized-QFI (MQFI) relation, laid out as a 4 x 3 table.
#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string_view>
#include <vector>

#include "entqfi/locc.hpp"

namespace entqfi {

enum class Measure { Concurrence, Negativity, Ree };
inline constexpr std::array<Measure, 3> kAllMeasures{Measure::Concurrence, Measure::Negativity, Measure::Ree};

/// Rows in table order.
enum class MeasureRelation { BothZero, SecondGreater, EqualPositive, FirstGreater };
/// Columns in table order.
enum class MqfiRelation { Greater, Equal, Less };

struct OrderingClass
{
    MeasureRelation measure = MeasureRelation::BothZero;
    MqfiRelation mqfi = MqfiRelation::Equal;

    friend auto operator<=>(const OrderingClass&, const OrderingClass&) = default;
};

std::string_view to_string(Measure m);
std::string_view to_string(MeasureRelation r);
std::string_view to_string(MqfiRelation r);
/// Parses "concurrence", "negativity" or "ree"; throws ConfigError otherwise.
Measure parse_measure(std::string_view name);

/// Everything computed for one state.
struct StateRecord
{
    std::size_t id = 0;
    double concurrence = 0.0;
    double negativity = 0.0;
    double ree = 0.0;
    bool separable = true;
    bool ree_converged = true;
    double qfi_raw = 0.0;
    double qfi_max = 0.0;
    double qfi_min = 0.0;
    EulerAngleSet max_angles;
    EulerAngleSet min_angles;
    bool refined = false;

    double value(Measure m) const;
};

struct OrderingTolerances
{
    double concurrence = 1e-4;
    double negativity = 1e-4;
    double ree = 5e-3;
    double mqfi = 1e-4;

    double of(Measure m) const;
    double& of(Measure m);

    friend bool operator==(const OrderingTolerances&, const OrderingTolerances&) = default;
};

/// Values <= eps count as zero and |a - b| <= eps as equal. A pair where only one
/// side is zero falls into the strict row pointing at the non-zero side.
MeasureRelation relate_measure(double first, double second, double eps);
MqfiRelation relate_mqfi(double first, double second, double eps);

OrderingClass classify_pair(const StateRecord& r1, const StateRecord& r2, Measure measure,
                            const OrderingTolerances& tol);
/// Single tolerance for both the measure and the MQFI.
OrderingClass classify_pair(const StateRecord& r1, const StateRecord& r2, Measure measure, double eps);

/// Cells where the measure relation and the MQFI relation disagree.
bool is_discordant(const OrderingClass& c);
std::vector<OrderingClass> discordant_cells();

struct Census
{
    Measure measure = Measure::Concurrence;
    std::array<std::array<std::uint64_t, 3>, 4> counts{};

    std::uint64_t at(const OrderingClass& c) const;
    std::uint64_t total() const;
};

/// Counts over all unordered pairs, each pair taken with the smaller id first.
std::array<Census, 3> census(const std::vector<StateRecord>& records, const OrderingTolerances& tol);

struct PairWitness
{
    std::size_t id_1 = 0;
    std::size_t id_2 = 0;
    Measure measure = Measure::Concurrence;
    OrderingClass cell;
    double measure_1 = 0.0;
    double measure_2 = 0.0;
    double mqfi_1 = 0.0;
    double mqfi_2 = 0.0;
};

/// Up to `limit` witnesses per discordant cell, cells in table order, pairs in id order.
std::vector<PairWitness> find_counterexamples(const std::vector<StateRecord>& records, Measure measure,
                                              const OrderingTolerances& tol, std::size_t limit);

}  // namespace entqfi
