// SPDX-License-Identifier: Apache-2.0
//
// End-to-end run: random ensemble -> measures -> LOCC-optimized QFI -> orderings,
// plus every file the run produces.
#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "entqfi/measures.hpp"
#include "entqfi/ordering.hpp"

namespace entqfi {

struct ExperimentConfig
{
    std::size_t count = 1000;
    std::uint64_t master_seed = 1;
    int grid_divisor = 4;
    int refine_divisor = 6;
    OrderingTolerances eps_order;
    int ree_components = 16;
    int ree_multistarts = 5;
    int ree_max_sweeps = 10000;
    double ree_threshold = 1e-7;
    std::size_t witness_limit = 10;
    std::filesystem::path out_dir = "out";

    /// Throws ConfigError on an unusable configuration.
    void validate() const;

    ReeSolverConfig ree_config(const RngStream& stream) const;
    RefinementConfig refinement() const;

    friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

struct PhaseTiming
{
    double generation_s = 0.0;
    double measures_s = 0.0;
    double qfi_s = 0.0;
    double ordering_s = 0.0;
};

struct ExperimentResult
{
    ExperimentConfig config;
    std::vector<StateRecord> records;
    std::array<Census, 3> censuses;
    std::array<std::vector<PairWitness>, 3> witnesses;
    PhaseTiming timing;

    std::size_t separable_count() const;
    std::size_t refined_count() const;
    /// Ids whose max or min never left the unrotated value, even after refinement.
    std::vector<std::size_t> unresolved_ids() const;
    std::size_t ree_unconverged_count() const;
};

/// Measures and LOCC-optimized QFI of one state. `stream` seeds the REE multistarts.
StateRecord evaluate_state(std::size_t id, const DensityMatrix& rho, const ExperimentConfig& cfg,
                           const RngStream& stream);

/// Censuses and witnesses of an existing record list (records need >= 2 entries).
ExperimentResult analyze_records(const ExperimentConfig& cfg, std::vector<StateRecord> records);

/// State i comes from derive_stream(master_seed, i); its REE multistarts continue that stream.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

// File output. Every writer throws IoError naming the path on failure.

inline constexpr const char* kStateCsvHeader =
    "id,separable,concurrence,negativity,ree,ree_converged,qfi_raw,qfi_max,qfi_min,refined,max_angles,min_angles";
inline constexpr const char* kPlotCsvHeader = "measure,qfi_raw,qfi_max,qfi_min";

void emit_state_csv(const ExperimentResult& result, const std::filesystem::path& path);
/// fig1_concurrence.csv, fig1_negativity.csv, fig1_ree.csv in `directory`.
void emit_plot_data(const ExperimentResult& result, const std::filesystem::path& directory);
void emit_census_report(const ExperimentResult& result, const std::filesystem::path& path);
void emit_config(const ExperimentConfig& cfg, const std::filesystem::path& path);
/// Writes states.csv, the three plot files, census_report.txt and config.json to cfg.out_dir.
void emit_all(const ExperimentResult& result);

/// Generated density matrices, one row per state: id then 16 (re, im) pairs in row-major order.
void emit_density_matrices(const std::vector<DensityMatrix>& states, const std::filesystem::path& path);

ExperimentConfig load_config(const std::filesystem::path& path);
std::string config_to_json(const ExperimentConfig& cfg);
ExperimentConfig config_from_json(const std::string& text);

/// Reads a file written by emit_state_csv.
std::vector<StateRecord> parse_state_csv(const std::filesystem::path& path);

/// Fixed 12-decimal rendering used in every CSV; never prints "-0".
std::string format_value(double v);

}  // namespace entqfi
