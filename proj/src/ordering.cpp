// SPDX-License-Identifier: Apache-2.0
#include "entqfi/ordering.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "entqfi/errors.hpp"

namespace entqfi {

namespace {

std::vector<const StateRecord*> by_id(const std::vector<StateRecord>& records)
{
    std::vector<const StateRecord*> out;
    out.reserve(records.size());
    for (const auto& r : records) {
        out.push_back(&r);
    }
    std::stable_sort(out.begin(), out.end(), [](const StateRecord* a, const StateRecord* b) { return a->id < b->id; });
    return out;
}

void require_positive(double eps)
{
    if (!(eps > 0.0)) {
        throw ValidationError("ordering tolerance must be positive");
    }
}

}  // namespace

std::string_view to_string(Measure m)
{
    switch (m) {
    case Measure::Concurrence: return "concurrence";
    case Measure::Negativity: return "negativity";
    case Measure::Ree: return "ree";
    }
    return "?";
}

std::string_view to_string(MeasureRelation r)
{
    switch (r) {
    case MeasureRelation::BothZero: return "both-zero";
    case MeasureRelation::SecondGreater: return "second-greater";
    case MeasureRelation::EqualPositive: return "equal-positive";
    case MeasureRelation::FirstGreater: return "first-greater";
    }
    return "?";
}

std::string_view to_string(MqfiRelation r)
{
    switch (r) {
    case MqfiRelation::Greater: return "greater";
    case MqfiRelation::Equal: return "equal";
    case MqfiRelation::Less: return "less";
    }
    return "?";
}

Measure parse_measure(std::string_view name)
{
    for (Measure m : kAllMeasures) {
        if (to_string(m) == name) {
            return m;
        }
    }
    throw ConfigError("unknown measure '" + std::string(name) + "'");
}

double StateRecord::value(Measure m) const
{
    switch (m) {
    case Measure::Concurrence: return concurrence;
    case Measure::Negativity: return negativity;
    case Measure::Ree: return ree;
    }
    return 0.0;
}

double OrderingTolerances::of(Measure m) const
{
    switch (m) {
    case Measure::Concurrence: return concurrence;
    case Measure::Negativity: return negativity;
    case Measure::Ree: return ree;
    }
    return concurrence;
}

double& OrderingTolerances::of(Measure m)
{
    switch (m) {
    case Measure::Concurrence: return concurrence;
    case Measure::Negativity: return negativity;
    case Measure::Ree: return ree;
    }
    return concurrence;
}

MeasureRelation relate_measure(double first, double second, double eps)
{
    const bool first_zero = first <= eps;
    const bool second_zero = second <= eps;
    if (first_zero && second_zero) {
        return MeasureRelation::BothZero;
    }
    if (first_zero != second_zero) {
        return first_zero ? MeasureRelation::SecondGreater : MeasureRelation::FirstGreater;
    }
    if (std::abs(first - second) <= eps) {
        return MeasureRelation::EqualPositive;
    }
    return first > second ? MeasureRelation::FirstGreater : MeasureRelation::SecondGreater;
}

MqfiRelation relate_mqfi(double first, double second, double eps)
{
    if (std::abs(first - second) <= eps) {
        return MqfiRelation::Equal;
    }
    return first > second ? MqfiRelation::Greater : MqfiRelation::Less;
}

OrderingClass classify_pair(const StateRecord& r1, const StateRecord& r2, Measure measure,
                            const OrderingTolerances& tol)
{
    require_positive(tol.of(measure));
    require_positive(tol.mqfi);
    return {relate_measure(r1.value(measure), r2.value(measure), tol.of(measure)),
            relate_mqfi(r1.qfi_max, r2.qfi_max, tol.mqfi)};
}

OrderingClass classify_pair(const StateRecord& r1, const StateRecord& r2, Measure measure, double eps)
{
    OrderingTolerances tol{eps, eps, eps, eps};
    return classify_pair(r1, r2, measure, tol);
}

bool is_discordant(const OrderingClass& c)
{
    switch (c.measure) {
    case MeasureRelation::BothZero:
    case MeasureRelation::EqualPositive: return c.mqfi != MqfiRelation::Equal;
    case MeasureRelation::FirstGreater: return c.mqfi != MqfiRelation::Greater;
    case MeasureRelation::SecondGreater: return c.mqfi != MqfiRelation::Less;
    }
    return false;
}

std::vector<OrderingClass> discordant_cells()
{
    std::vector<OrderingClass> out;
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 3; ++c) {
            const OrderingClass cell{static_cast<MeasureRelation>(r), static_cast<MqfiRelation>(c)};
            if (is_discordant(cell)) {
                out.push_back(cell);
            }
        }
    }
    return out;
}

std::uint64_t Census::at(const OrderingClass& c) const
{
    return counts[static_cast<std::size_t>(c.measure)][static_cast<std::size_t>(c.mqfi)];
}

std::uint64_t Census::total() const
{
    std::uint64_t t = 0;
    for (const auto& row : counts) {
        t = std::accumulate(row.begin(), row.end(), t);
    }
    return t;
}

std::array<Census, 3> census(const std::vector<StateRecord>& records, const OrderingTolerances& tol)
{
    if (records.size() < 2) {
        throw ValidationError("census needs at least two records");
    }
    std::array<Census, 3> out;
    for (std::size_t k = 0; k < 3; ++k) {
        out[k].measure = kAllMeasures[k];
    }
    const auto sorted = by_id(records);
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        for (std::size_t j = i + 1; j < sorted.size(); ++j) {
            for (auto& c : out) {
                const OrderingClass cell = classify_pair(*sorted[i], *sorted[j], c.measure, tol);
                ++c.counts[static_cast<std::size_t>(cell.measure)][static_cast<std::size_t>(cell.mqfi)];
            }
        }
    }
    return out;
}

std::vector<PairWitness> find_counterexamples(const std::vector<StateRecord>& records, Measure measure,
                                              const OrderingTolerances& tol, std::size_t limit)
{
    if (limit < 1) {
        throw ValidationError("witness limit must be at least 1");
    }
    const auto sorted = by_id(records);
    std::map<OrderingClass, std::vector<PairWitness>> cells;
    for (const auto& c : discordant_cells()) {
        cells[c];
    }
    std::size_t open = cells.size();
    for (std::size_t i = 0; i < sorted.size() && open > 0; ++i) {
        for (std::size_t j = i + 1; j < sorted.size() && open > 0; ++j) {
            const StateRecord& a = *sorted[i];
            const StateRecord& b = *sorted[j];
            const OrderingClass cell = classify_pair(a, b, measure, tol);
            if (!is_discordant(cell)) {
                continue;
            }
            auto& bucket = cells[cell];
            if (bucket.size() >= limit) {
                continue;
            }
            bucket.push_back({a.id, b.id, measure, cell, a.value(measure), b.value(measure), a.qfi_max, b.qfi_max});
            if (bucket.size() == limit) {
                --open;
            }
        }
    }
    std::vector<PairWitness> out;
    for (auto& [cell, bucket] : cells) {
        out.insert(out.end(), bucket.begin(), bucket.end());
    }
    return out;
}

}  // namespace entqfi
