// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "entqfi/experiment.hpp"

namespace entqfi {

namespace {

std::ofstream open_for_write(const std::filesystem::path& path)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open '" + path.string() + "' for writing");
    }
    return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path)
{
    out.flush();
    if (!out) {
        throw IoError("write to '" + path.string() + "' failed");
    }
}

std::string format_tolerance(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::vector<double> parse_angles(const std::string& text)
{
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';')) {
        out.push_back(std::stod(item));
    }
    return out;
}

}  // namespace

std::string format_value(double v)
{
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.12f", v);
    std::string s = buf;
    if (s.starts_with("-") && s.find_first_not_of("-0.") == std::string::npos) {
        s.erase(0, 1);
    }
    return s;
}

void emit_state_csv(const ExperimentResult& result, const std::filesystem::path& path)
{
    auto out = open_for_write(path);
    out << kStateCsvHeader << '\n';
    std::vector<const StateRecord*> rows;
    for (const auto& r : result.records) {
        rows.push_back(&r);
    }
    std::stable_sort(rows.begin(), rows.end(), [](auto* a, auto* b) { return a->id < b->id; });
    for (const StateRecord* r : rows) {
        out << r->id << ',' << (r->separable ? 1 : 0) << ',' << format_value(r->concurrence) << ','
            << format_value(r->negativity) << ',' << format_value(r->ree) << ',' << (r->ree_converged ? 1 : 0)
            << ',' << format_value(r->qfi_raw) << ',' << format_value(r->qfi_max) << ','
            << format_value(r->qfi_min) << ',' << (r->refined ? 1 : 0) << ',' << format_angles(r->max_angles)
            << ',' << format_angles(r->min_angles) << '\n';
    }
    finish(out, path);
}

void emit_plot_data(const ExperimentResult& result, const std::filesystem::path& directory)
{
    for (Measure m : kAllMeasures) {
        const auto path = directory / ("fig1_" + std::string(to_string(m)) + ".csv");
        std::vector<const StateRecord*> rows;
        for (const auto& r : result.records) {
            rows.push_back(&r);
        }
        std::sort(rows.begin(), rows.end(), [m](auto* a, auto* b) {
            if (a->value(m) != b->value(m)) {
                return a->value(m) < b->value(m);
            }
            return a->id < b->id;
        });
        auto out = open_for_write(path);
        out << kPlotCsvHeader << '\n';
        for (const StateRecord* r : rows) {
            out << format_value(r->value(m)) << ',' << format_value(r->qfi_raw) << ','
                << format_value(r->qfi_max) << ',' << format_value(r->qfi_min) << '\n';
        }
        finish(out, path);
    }
}

void emit_census_report(const ExperimentResult& result, const std::filesystem::path& path)
{
    const ExperimentConfig& cfg = result.config;
    const std::size_t n = result.records.size();
    const auto unresolved = result.unresolved_ids();
    auto out = open_for_write(path);

    out << "# entqfi ordering census\n"
        << "# QFI values are mean QFI per particle, F/N with N = 2 (shot-noise level 1, Heisenberg limit 2).\n"
        << "# MQFI is the maximum over local Euler rotations of each qubit.\n"
        << "states," << n << '\n'
        << "separable," << result.separable_count() << '\n'
        << "pairs," << (n < 2 ? 0 : n * (n - 1) / 2) << '\n'
        << "seed," << cfg.master_seed << '\n'
        << "grid_divisor," << cfg.grid_divisor << '\n'
        << "refine_divisor," << cfg.refine_divisor << '\n';
    for (Measure m : kAllMeasures) {
        out << "eps_" << to_string(m) << ',' << format_tolerance(cfg.eps_order.of(m)) << '\n';
    }
    out << "eps_mqfi," << format_tolerance(cfg.eps_order.mqfi) << '\n'
        << "ree_unconverged," << result.ree_unconverged_count() << '\n'
        << "refined," << result.refined_count() << '\n'
        << "unresolved," << unresolved.size() << '\n'
        << "unresolved_ids,";
    for (std::size_t i = 0; i < unresolved.size(); ++i) {
        out << (i ? ";" : "") << unresolved[i];
    }
    out << '\n';

    for (std::size_t k = 0; k < kAllMeasures.size(); ++k) {
        const Census& c = result.censuses[k];
        out << "\n[census " << to_string(c.measure) << "]\n"
            << "relation,mqfi_greater,mqfi_equal,mqfi_less\n";
        for (int row = 0; row < 4; ++row) {
            out << to_string(static_cast<MeasureRelation>(row));
            for (int col = 0; col < 3; ++col) {
                out << ',' << c.counts[row][col];
            }
            out << '\n';
        }
        out << "total," << c.total() << '\n';
    }

    for (std::size_t k = 0; k < kAllMeasures.size(); ++k) {
        out << "\n[witnesses " << to_string(kAllMeasures[k]) << "]\n"
            << "relation,mqfi_relation,id_1,id_2,measure_1,measure_2,mqfi_1,mqfi_2\n";
        for (const PairWitness& w : result.witnesses[k]) {
            out << to_string(w.cell.measure) << ',' << to_string(w.cell.mqfi) << ',' << w.id_1 << ',' << w.id_2
                << ',' << format_value(w.measure_1) << ',' << format_value(w.measure_2) << ','
                << format_value(w.mqfi_1) << ',' << format_value(w.mqfi_2) << '\n';
        }
    }
    finish(out, path);
}

std::string config_to_json(const ExperimentConfig& cfg)
{
    nlohmann::ordered_json j;
    j["states"] = cfg.count;
    j["seed"] = cfg.master_seed;
    j["grid_divisor"] = cfg.grid_divisor;
    j["refine_divisor"] = cfg.refine_divisor;
    j["eps_order"] = {{"concurrence", cfg.eps_order.concurrence},
                      {"negativity", cfg.eps_order.negativity},
                      {"ree", cfg.eps_order.ree},
                      {"mqfi", cfg.eps_order.mqfi}};
    j["ree_components"] = cfg.ree_components;
    j["ree_multistarts"] = cfg.ree_multistarts;
    j["ree_max_sweeps"] = cfg.ree_max_sweeps;
    j["ree_threshold"] = cfg.ree_threshold;
    j["witness_limit"] = cfg.witness_limit;
    j["out"] = cfg.out_dir.string();
    return j.dump(2) + "\n";
}

ExperimentConfig config_from_json(const std::string& text)
{
    ExperimentConfig cfg;
    try {
        const auto j = nlohmann::json::parse(text);
        cfg.count = j.value("states", cfg.count);
        cfg.master_seed = j.value("seed", cfg.master_seed);
        cfg.grid_divisor = j.value("grid_divisor", cfg.grid_divisor);
        cfg.refine_divisor = j.value("refine_divisor", cfg.refine_divisor);
        if (j.contains("eps_order")) {
            const auto& e = j.at("eps_order");
            cfg.eps_order.concurrence = e.value("concurrence", cfg.eps_order.concurrence);
            cfg.eps_order.negativity = e.value("negativity", cfg.eps_order.negativity);
            cfg.eps_order.ree = e.value("ree", cfg.eps_order.ree);
            cfg.eps_order.mqfi = e.value("mqfi", cfg.eps_order.mqfi);
        }
        cfg.ree_components = j.value("ree_components", cfg.ree_components);
        cfg.ree_multistarts = j.value("ree_multistarts", cfg.ree_multistarts);
        cfg.ree_max_sweeps = j.value("ree_max_sweeps", cfg.ree_max_sweeps);
        cfg.ree_threshold = j.value("ree_threshold", cfg.ree_threshold);
        cfg.witness_limit = j.value("witness_limit", cfg.witness_limit);
        cfg.out_dir = j.value("out", cfg.out_dir.string());
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("invalid config JSON: ") + e.what());
    }
    return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open '" + path.string() + "'");
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return config_from_json(ss.str());
}

void emit_config(const ExperimentConfig& cfg, const std::filesystem::path& path)
{
    auto out = open_for_write(path);
    out << config_to_json(cfg);
    finish(out, path);
}

void emit_all(const ExperimentResult& result)
{
    const auto& dir = result.config.out_dir;
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        throw IoError("cannot create directory '" + dir.string() + "': " + ec.message());
    }
    emit_state_csv(result, dir / "states.csv");
    emit_plot_data(result, dir);
    emit_census_report(result, dir / "census_report.txt");
    emit_config(result.config, dir / "config.json");
}

void emit_density_matrices(const std::vector<DensityMatrix>& states, const std::filesystem::path& path)
{
    auto out = open_for_write(path);
    out << "id";
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            out << ",re_" << r << c << ",im_" << r << c;
        }
    }
    out << '\n';
    char buf[40];
    for (std::size_t i = 0; i < states.size(); ++i) {
        const Matrix4c m = states[i].matrix4();
        out << i;
        for (int r = 0; r < 4; ++r) {
            for (int c = 0; c < 4; ++c) {
                std::snprintf(buf, sizeof buf, ",%.17g", m(r, c).real());
                out << buf;
                std::snprintf(buf, sizeof buf, ",%.17g", m(r, c).imag());
                out << buf;
            }
        }
        out << '\n';
    }
    finish(out, path);
}

std::vector<StateRecord> parse_state_csv(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open '" + path.string() + "'");
    }
    std::string line;
    if (!std::getline(in, line) || line != kStateCsvHeader) {
        throw IoError("'" + path.string() + "' does not start with the state CSV header");
    }
    std::vector<StateRecord> out;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        std::vector<std::string> f;
        std::stringstream ss(line);
        std::string item;
        while (std::getline(ss, item, ',')) {
            f.push_back(item);
        }
        if (f.size() != 12) {
            throw IoError("malformed row in '" + path.string() + "': " + line);
        }
        StateRecord r;
        r.id = std::stoull(f[0]);
        r.separable = f[1] == "1";
        r.concurrence = std::stod(f[2]);
        r.negativity = std::stod(f[3]);
        r.ree = std::stod(f[4]);
        r.ree_converged = f[5] == "1";
        r.qfi_raw = std::stod(f[6]);
        r.qfi_max = std::stod(f[7]);
        r.qfi_min = std::stod(f[8]);
        r.refined = f[9] == "1";
        const auto max_a = parse_angles(f[10]);
        const auto min_a = parse_angles(f[11]);
        if (max_a.size() != 6 || min_a.size() != 6) {
            throw IoError("malformed angle list in '" + path.string() + "'");
        }
        std::copy(max_a.begin(), max_a.end(), r.max_angles.angles.begin());
        std::copy(min_a.begin(), min_a.end(), r.min_angles.angles.begin());
        out.push_back(r);
    }
    return out;
}

}  // namespace entqfi
