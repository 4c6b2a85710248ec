// Command-line front end: spectra, negativity, phase diagrams, thermal
// profiles and threshold temperatures, emitted as CSV or JSON.

#include "spindimer/analysis.hpp"
#include "spindimer/entanglement.hpp"
#include "spindimer/spectrum.hpp"
#include "spindimer/sweep_table.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

using nlohmann::json;
using namespace spindimer;

namespace {

struct CommonOpts {
    double j = 1.0;
    double delta = 1.0;
    double d_over_j = 0.0;
    std::vector<int> two_s_list = {2};
    std::string output;  // empty = stdout
    std::string format = "csv";
};

void add_model_flags(CLI::App* cmd, CommonOpts& o, bool spin_list) {
    cmd->add_option("--j", o.j, "exchange coupling J (energy scale; default 1)");
    cmd->add_option("--delta", o.delta, "XXZ exchange anisotropy Delta");
    cmd->add_option("--d-over-j", o.d_over_j, "single-ion anisotropy D/J");
    auto* ts = cmd->add_option("--two-s", o.two_s_list,
                               spin_list ? "2S values (comma list of integers >= 2)"
                                         : "2S (integer >= 2)")
                   ->delimiter(',');
    if (!spin_list) ts->expected(1);
    cmd->add_option("-o,--output", o.output, "output file (default: stdout)");
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
}

int validate_common(const CommonOpts& o, bool need_positive_j) {
    for (int two_s : o.two_s_list) {
        if (two_s < 2) {
            std::cerr << "error: --two-s must be >= 2 (S >= 1)\n";
            return 2;
        }
    }
    if (need_positive_j && o.j <= 0.0) {
        std::cerr << "error: analysis subcommands require J > 0\n";
        return 2;
    }
    return 0;
}

json table_to_json(const SweepTable& t, const json& config) {
    json rows = json::array();
    for (const auto& row : t.rows) {
        json obj;
        for (size_t c = 0; c < t.columns.size(); ++c) obj[t.columns[c]] = row[c];
        rows.push_back(obj);
    }
    return json{{"config", config}, {"columns", t.columns}, {"rows", rows}};
}

int emit_table(const SweepTable& t, const CommonOpts& o, const json& config) {
    std::ostringstream buf;
    if (o.format == "json")
        buf << table_to_json(t, config).dump(2) << '\n';
    else
        write_csv(buf, t);
    if (o.output.empty()) {
        std::cout << buf.str();
    } else {
        std::ofstream f(o.output, std::ios::binary);
        if (!f) {
            std::cerr << "error: cannot open " << o.output << "\n";
            return 1;
        }
        f << buf.str();
    }
    return 0;
}

json model_config(const std::string& subcommand, const CommonOpts& o) {
    return json{{"subcommand", subcommand},
                {"J", o.j},
                {"delta", o.delta},
                {"d_over_j", o.d_over_j},
                {"two_s", o.two_s_list}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Mixed spin-(1/2,S) XXZ Heisenberg dimer: exact spectra and entanglement negativity"};
    app.require_subcommand(1);

    CommonOpts spectrum_o, neg_o, phase_o, sweep_o, thermal_o, threshold_o;

    auto* spectrum_cmd = app.add_subcommand("spectrum", "sector table of energies and amplitudes");
    add_model_flags(spectrum_cmd, spectrum_o, false);

    auto* neg_cmd = app.add_subcommand("negativity", "single-point ground-state or thermal negativity");
    add_model_flags(neg_cmd, neg_o, false);
    double neg_temperature = 0.0;
    neg_cmd->add_option("--temperature", neg_temperature,
                        "k_B T / J; 0 selects the ground state (default)");

    auto* phase_cmd = app.add_subcommand("phase-diagram", "zero-temperature phase diagram in the D/J - Delta plane");
    add_model_flags(phase_cmd, phase_o, false);
    double delta_min = 0.0, delta_max = 2.0, d_min = -2.0, d_max = 2.0;
    int delta_points = 41, d_points = 41;
    phase_cmd->add_option("--delta-min", delta_min);
    phase_cmd->add_option("--delta-max", delta_max);
    phase_cmd->add_option("--delta-points", delta_points);
    phase_cmd->add_option("--d-min", d_min);
    phase_cmd->add_option("--d-max", d_max);
    phase_cmd->add_option("--d-points", d_points);

    auto* sweep_cmd = app.add_subcommand("sweep-d", "ground-state negativity vs D/J for one or more spins");
    add_model_flags(sweep_cmd, sweep_o, true);
    double sd_min = -1.0, sd_max = 2.0;
    int sd_points = 301;
    sweep_cmd->add_option("--d-min", sd_min);
    sweep_cmd->add_option("--d-max", sd_max);
    sweep_cmd->add_option("--points", sd_points);

    auto* thermal_cmd = app.add_subcommand("thermal", "negativity vs temperature (geometric grid)");
    add_model_flags(thermal_cmd, thermal_o, false);
    double t_min = 1e-3, t_max = 10.0;
    int t_points = 200;
    thermal_cmd->add_option("--t-min", t_min);
    thermal_cmd->add_option("--t-max", t_max);
    thermal_cmd->add_option("--t-points", t_points);

    auto* threshold_cmd = app.add_subcommand("threshold", "threshold temperature (single point, or a D/J sweep)");
    add_model_flags(threshold_cmd, threshold_o, true);
    double td_min = 0.0, td_max = 0.0;
    int td_points = 1;
    threshold_cmd->add_option("--d-min", td_min);
    threshold_cmd->add_option("--d-max", td_max);
    auto* tp_opt = threshold_cmd->add_option("--points", td_points, "sweep point count (> 1 sweeps D/J over [d-min, d-max])");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (spectrum_cmd->parsed()) {
            if (int rc = validate_common(spectrum_o, false)) return rc;
            DimerModel model(spectrum_o.j, spectrum_o.delta,
                             spectrum_o.d_over_j * spectrum_o.j, spectrum_o.two_s_list[0]);
            SweepTable t;
            t.columns = {"two_S_z_t", "branch", "energy_over_J", "c_minus", "c_plus"};
            for (const auto& s : closed_form_spectrum(model)) {
                t.rows.push_back({static_cast<double>(s.two_s_z_t), -1.0,
                                  s.energy_minus / model.j, s.c_minus, s.c_plus});
                if (!s.edge)
                    t.rows.push_back({static_cast<double>(s.two_s_z_t), 1.0,
                                      s.energy_plus / model.j, s.c_minus, s.c_plus});
            }
            return emit_table(t, spectrum_o, model_config("spectrum", spectrum_o));
        }

        if (neg_cmd->parsed()) {
            if (int rc = validate_common(neg_o, false)) return rc;
            DimerModel model(neg_o.j, neg_o.delta, neg_o.d_over_j * neg_o.j,
                             neg_o.two_s_list[0]);
            const double n = neg_temperature > 0.0
                                 ? negativity(thermal_density(model, neg_temperature)).negativity
                                 : negativity(ground_state_density(model)).negativity;
            char buf[32];
            std::snprintf(buf, sizeof(buf), "%.12f", n);
            if (neg_o.output.empty()) {
                std::cout << buf << "\n";
            } else {
                std::ofstream f(neg_o.output, std::ios::binary);
                f << buf << "\n";
            }
            return 0;
        }

        if (phase_cmd->parsed()) {
            if (int rc = validate_common(phase_o, true)) return rc;
            const auto points = phase_diagram(phase_o.j, phase_o.two_s_list[0],
                                              delta_min, delta_max, delta_points,
                                              d_min, d_max, d_points);
            json config = model_config("phase-diagram", phase_o);
            config["delta_range"] = {delta_min, delta_max, delta_points};
            config["d_over_j_range"] = {d_min, d_max, d_points};
            std::ostringstream buf;
            if (phase_o.format == "json") {
                json rows = json::array();
                for (const auto& p : points)
                    rows.push_back({{"delta", p.delta},
                                    {"D_over_J", p.d_over_j},
                                    {"ground_two_S_z_t_abs", p.ground_sectors},
                                    {"negativity", p.negativity}});
                buf << json{{"config", config}, {"rows", rows}}.dump(2) << '\n';
            } else {
                buf << "delta,D_over_J,ground_two_S_z_t_abs,negativity\n";
                for (const auto& p : points) {
                    buf << format_value(p.delta) << ',' << format_value(p.d_over_j) << ',';
                    for (size_t i = 0; i < p.ground_sectors.size(); ++i) {
                        if (i) buf << ';';
                        buf << p.ground_sectors[i];
                    }
                    buf << ',' << format_value(p.negativity) << '\n';
                }
            }
            if (phase_o.output.empty()) {
                std::cout << buf.str();
            } else {
                std::ofstream f(phase_o.output, std::ios::binary);
                f << buf.str();
            }
            return 0;
        }

        if (sweep_cmd->parsed()) {
            if (int rc = validate_common(sweep_o, true)) return rc;
            const auto t = negativity_vs_d(sweep_o.j, sweep_o.two_s_list, sd_min, sd_max,
                                           sd_points, sweep_o.delta);
            json config = model_config("sweep-d", sweep_o);
            config["d_over_j_range"] = {sd_min, sd_max, sd_points};
            return emit_table(t, sweep_o, config);
        }

        if (thermal_cmd->parsed()) {
            if (int rc = validate_common(thermal_o, true)) return rc;
            DimerModel model(thermal_o.j, thermal_o.delta,
                             thermal_o.d_over_j * thermal_o.j, thermal_o.two_s_list[0]);
            const auto t = thermal_profile(model, geometric_grid(t_min, t_max, t_points));
            json config = model_config("thermal", thermal_o);
            config["t_range"] = {t_min, t_max, t_points};
            return emit_table(t, thermal_o, config);
        }

        if (threshold_cmd->parsed()) {
            if (int rc = validate_common(threshold_o, true)) return rc;
            json config = model_config("threshold", threshold_o);
            if (tp_opt->count() && td_points > 1) {
                const auto t = threshold_vs_d(threshold_o.j, threshold_o.two_s_list,
                                              td_min, td_max, td_points, threshold_o.delta);
                config["d_over_j_range"] = {td_min, td_max, td_points};
                return emit_table(t, threshold_o, config);
            }
            DimerModel model(threshold_o.j, threshold_o.delta,
                             threshold_o.d_over_j * threshold_o.j,
                             threshold_o.two_s_list[0]);
            try {
                const auto res = threshold_temperature(model);
                SweepTable t;
                t.columns = {"S", "D_over_J", "kT_threshold_over_J"};
                t.rows.push_back({0.5 * model.two_s, threshold_o.d_over_j, res.t_threshold});
                return emit_table(t, threshold_o, config);
            } catch (const ThresholdUnresolvedError& e) {
                // partial output: the sampled profile, then the diagnostic
                SweepTable t;
                t.columns = {"kT_over_J", "negativity"};
                for (const auto& [temp, n] : e.profile) t.rows.push_back({temp, n});
                emit_table(t, threshold_o, config);
                std::cerr << "error: " << e.what() << "\n";
                return 3;
            }
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
