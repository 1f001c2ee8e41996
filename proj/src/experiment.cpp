// SPDX-License-Identifier: Apache-2.0
#include "entqfi/experiment.hpp"

#include <chrono>
#include <optional>

#include "entqfi/randgen.hpp"

namespace entqfi {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

}  // namespace

void ExperimentConfig::validate() const
{
    if (count < 1) {
        throw ConfigError("state count must be at least 1");
    }
    if (grid_divisor < 2) {
        throw ConfigError("grid divisor must be at least 2");
    }
    if (refine_divisor <= grid_divisor) {
        throw ConfigError("refine divisor must exceed the grid divisor");
    }
    for (Measure m : kAllMeasures) {
        if (!(eps_order.of(m) > 0.0)) {
            throw ConfigError("ordering tolerance for " + std::string(to_string(m)) + " must be positive");
        }
    }
    if (!(eps_order.mqfi > 0.0)) {
        throw ConfigError("ordering tolerance for mqfi must be positive");
    }
    if (ree_components < 1 || ree_multistarts < 1 || ree_max_sweeps < 1 || !(ree_threshold > 0.0)) {
        throw ConfigError("REE solver parameters must be positive");
    }
    if (witness_limit < 1) {
        throw ConfigError("witness limit must be at least 1");
    }
}

ReeSolverConfig ExperimentConfig::ree_config(const RngStream& stream) const
{
    ReeSolverConfig c;
    c.components = ree_components;
    c.multistarts = ree_multistarts;
    c.max_sweeps = ree_max_sweeps;
    c.threshold = ree_threshold;
    c.stream = stream;
    return c;
}

RefinementConfig ExperimentConfig::refinement() const
{
    return RefinementConfig{grid_divisor, refine_divisor, 1e-9};
}

std::size_t ExperimentResult::separable_count() const
{
    std::size_t n = 0;
    for (const auto& r : records) {
        n += r.separable ? 1 : 0;
    }
    return n;
}

std::size_t ExperimentResult::refined_count() const
{
    std::size_t n = 0;
    for (const auto& r : records) {
        n += r.refined ? 1 : 0;
    }
    return n;
}

std::vector<std::size_t> ExperimentResult::unresolved_ids() const
{
    std::vector<std::size_t> ids;
    for (const auto& r : records) {
        if (!(r.qfi_max - r.qfi_raw > 1e-9 && r.qfi_raw - r.qfi_min > 1e-9)) {
            ids.push_back(r.id);
        }
    }
    return ids;
}

std::size_t ExperimentResult::ree_unconverged_count() const
{
    std::size_t n = 0;
    for (const auto& r : records) {
        n += r.ree_converged ? 0 : 1;
    }
    return n;
}

namespace {

void fill_measures(StateRecord& rec, const DensityMatrix& rho, const ExperimentConfig& cfg, const RngStream& stream)
{
    const MeasureTriple m = measure_triple(rho, cfg.ree_config(stream));
    rec.concurrence = m.concurrence;
    rec.negativity = m.negativity;
    rec.ree = m.ree;
    rec.separable = m.separable;
    rec.ree_converged = m.ree_converged;
}

void fill_qfi(StateRecord& rec, const DensityMatrix& rho, const ExperimentConfig& cfg)
{
    const LoccOptimum opt = optimize_with_refinement(rho, cfg.refinement());
    rec.qfi_raw = opt.raw_value;
    rec.qfi_max = opt.max_value;
    rec.qfi_min = opt.min_value;
    rec.max_angles = opt.max_angles;
    rec.min_angles = opt.min_angles;
    rec.refined = opt.refined;
}

}  // namespace

StateRecord evaluate_state(std::size_t id, const DensityMatrix& rho, const ExperimentConfig& cfg,
                           const RngStream& stream)
{
    StateRecord rec;
    rec.id = id;
    fill_measures(rec, rho, cfg, stream);
    fill_qfi(rec, rho, cfg);
    return rec;
}

ExperimentResult analyze_records(const ExperimentConfig& cfg, std::vector<StateRecord> records)
{
    ExperimentResult result;
    result.config = cfg;
    result.records = std::move(records);
    const auto t0 = Clock::now();
    result.censuses = census(result.records, cfg.eps_order);
    for (std::size_t k = 0; k < kAllMeasures.size(); ++k) {
        result.witnesses[k] = find_counterexamples(result.records, kAllMeasures[k], cfg.eps_order, cfg.witness_limit);
    }
    result.timing.ordering_s = seconds_since(t0);
    return result;
}

ExperimentResult run_experiment(const ExperimentConfig& cfg)
{
    cfg.validate();
    const auto n = static_cast<std::ptrdiff_t>(cfg.count);

    // State i depends only on (master_seed, i); each loop writes slot i only.
    std::vector<std::optional<DensityMatrix>> states(cfg.count);
    std::vector<std::optional<RngStream>> streams(cfg.count);
    auto t0 = Clock::now();
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        RngStream rng = derive_stream(cfg.master_seed, static_cast<std::uint64_t>(i));
        states[i].emplace(random_density_matrix(rng));
        streams[i].emplace(rng);
    }
    const double generation_s = seconds_since(t0);

    std::vector<StateRecord> records(cfg.count);
    t0 = Clock::now();
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        records[i].id = static_cast<std::size_t>(i);
        fill_measures(records[i], *states[i], cfg, *streams[i]);
    }
    const double measures_s = seconds_since(t0);

    t0 = Clock::now();
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        fill_qfi(records[i], *states[i], cfg);
    }
    const double qfi_s = seconds_since(t0);

    ExperimentResult result;
    if (records.size() >= 2) {
        result = analyze_records(cfg, std::move(records));
    } else {
        result.config = cfg;
        result.records = std::move(records);
        for (std::size_t k = 0; k < kAllMeasures.size(); ++k) {
            result.censuses[k].measure = kAllMeasures[k];
        }
    }
    result.timing.generation_s = generation_s;
    result.timing.measures_s = measures_s;
    result.timing.qfi_s = qfi_s;
    return result;
}

}  // namespace entqfi
