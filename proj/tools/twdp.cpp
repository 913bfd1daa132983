// SPDX-License-Identifier: Apache-2.0
//
// twdp-phase: phase statistics of two-wave with diffuse power fading channels
// Copyright (C) 2026 twdp-phase contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

// Command-line front end. Every subcommand writes CSV data files plus a JSON
// manifest that reproduces the run:
//
//   twdp pdf     --K 10 --Gamma 0.7            conditional phase density grid
//   twdp bounds  --k-min 0 --k-max 60          truncation windows over a range
//   twdp pe      --Gamma 0.4 --M 2,4,8         M-PSK phase-sync error curves
//   twdp mc      --n-samples 10000000          Monte Carlo phase histogram
//   twdp geosim  --export both                 geometric Doppler simulation
//
// Exit codes: 0 success, 2 argument or parameter-domain error, 3 numeric
// failure, 1 other I/O trouble. A JSON file passed via --config supplies
// defaults for any long option (flags win); a run manifest works there too.

#include <cctype>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "twdp/twdp.hpp"

namespace
{

    using nlohmann::json;

    json load_config_json(const std::string &path)
    {
        std::ifstream in(path);
        if (!in)
            throw twdp::config_error("cannot open config file: " + path);
        json j;
        try
        {
            in >> j;
        }
        catch (const json::exception &e)
        {
            throw twdp::config_error(std::string("config is not valid JSON: ") + e.what());
        }
        if (!j.is_object())
            throw twdp::config_error("config must be a JSON object");
        // A run manifest is accepted directly; its inputs live under "params".
        if (j.contains("command") && j.contains("params"))
            return j.at("params");
        return j;
    }

    /// Pre-scan for --config so its values can seed option defaults before
    /// the real parse. Understands both "--config path" and "--config=path".
    json scan_config(int argc, char **argv)
    {
        for (int i = 1; i < argc; ++i)
        {
            if (std::strcmp(argv[i], "--config") == 0 && i + 1 < argc)
                return load_config_json(argv[i + 1]);
            if (std::strncmp(argv[i], "--config=", 9) == 0)
                return load_config_json(argv[i] + 9);
        }
        return json::object();
    }

    void cfg_get(const json &cfg, const char *key, double &v) { v = cfg.value(key, v); }
    void cfg_get(const json &cfg, const char *key, int &v) { v = cfg.value(key, v); }
    void cfg_get(const json &cfg, const char *key, bool &v) { v = cfg.value(key, v); }
    void cfg_get(const json &cfg, const char *key, std::uint64_t &v) { v = cfg.value(key, v); }
    void cfg_get(const json &cfg, const char *key, std::string &v) { v = cfg.value(key, v); }
    void cfg_get(const json &cfg, const char *key, std::vector<int> &v)
    {
        if (!cfg.contains(key))
            return;
        if (cfg.at(key).is_array())
            v = cfg.at(key).get<std::vector<int>>();
        else
            v = {cfg.at(key).get<int>()};
    }

    /// Channel parameter flags shared by pdf, pe, mc and geosim.
    struct ParamArgs
    {
        double k = 0.0;
        double gamma = 0.0;
        double omega = 1.0;
        double phi1 = 0.0;
        bool physical = false;
        double v1 = 0.0;
        double v2 = 0.0;
        double sigma2 = 0.5;

        void attach(CLI::App *cmd, const json &cfg)
        {
            cfg_get(cfg, "K", k);
            cfg_get(cfg, "Gamma", gamma);
            cfg_get(cfg, "Omega", omega);
            cfg_get(cfg, "Phi1", phi1);
            cfg_get(cfg, "physical", physical);
            cfg_get(cfg, "v1", v1);
            cfg_get(cfg, "v2", v2);
            cfg_get(cfg, "sigma2", sigma2);
            cmd->add_option("--K", k, "K-factor (specular-to-diffuse power ratio)");
            cmd->add_option("--Gamma", gamma, "specular amplitude ratio v2/v1 in [0,1]");
            cmd->add_option("--Omega", omega, "total power");
            cmd->add_option("--Phi1", phi1, "dominant-component phase, radians");
            cmd->add_flag("--physical", physical,
                          "use --v1/--v2/--sigma2 instead of --K/--Gamma/--Omega");
            cmd->add_option("--v1", v1, "stronger specular amplitude (with --physical)");
            cmd->add_option("--v2", v2, "weaker specular amplitude (with --physical)");
            cmd->add_option("--sigma2", sigma2,
                            "diffuse half-power; 0 selects the pure-specular limit "
                            "(with --physical)");
        }

        twdp::ChannelParams build() const
        {
            if (physical)
            {
                if (sigma2 == 0.0)
                    return twdp::ChannelParams::degenerate(v1, v2, phi1);
                return twdp::ChannelParams::from_physical(v1, v2, sigma2, phi1);
            }
            return twdp::ChannelParams::from_normalized(k, gamma, omega, phi1);
        }

        json describe() const
        {
            if (physical)
                return json{{"physical", true}, {"v1", v1}, {"v2", v2},
                            {"sigma2", sigma2}, {"Phi1", phi1}};
            return json{{"K", k}, {"Gamma", gamma}, {"Omega", omega}, {"Phi1", phi1}};
        }
    };

    std::string join_out(const std::string &outdir, const std::string &name)
    {
        std::filesystem::path p(name);
        if (p.is_absolute())
            return name;
        std::filesystem::create_directories(outdir);
        return (std::filesystem::path(outdir) / p).string();
    }

    void emit_manifest(const std::string &csv_path, const std::string &command,
                       json params, bool stochastic = false, std::uint64_t seed = 0)
    {
        twdp::RunManifest m;
        m.command = command;
        m.params_json = std::move(params);
        m.stochastic = stochastic;
        m.seed = seed;
        twdp::write_manifest(csv_path + ".manifest.json", m);
    }

    /// Average of f over [a, b] by 4-interval Simpson; used for the analytic
    /// overlay column so histogram bins compare against bin means, not
    /// midpoint values.
    template <typename F>
    double bin_average(F &&f, double a, double b)
    {
        double h = 0.25 * (b - a);
        return (f(a) + 4.0 * f(a + h) + 2.0 * f(a + 2.0 * h) + 4.0 * f(a + 3.0 * h) +
                f(b)) /
               12.0;
    }

    void write_histogram_csv(const std::string &path, const twdp::PhaseHistogram &hist,
                             const std::function<double(double)> &analytic)
    {
        twdp::CsvWriter csv(path, {"bin_left_rad", "bin_right_rad", "density",
                                   "analytic_density"});
        for (int i = 0; i < hist.n_bins(); ++i)
        {
            double left = hist.bin_left(i);
            double right = hist.bin_right(i);
            double overlay = analytic ? bin_average(analytic, left, right) :
                                        std::numeric_limits<double>::quiet_NaN();
            csv.row({twdp::format_g17(left), twdp::format_g17(right),
                     twdp::format_g17(hist.density(i)), twdp::format_g17(overlay)});
        }
        csv.close();
    }

    std::function<double(double)> analytic_overlay(const twdp::ChannelParams &params,
                                                   double alpha_pct)
    {
        if (params.is_degenerate())
            return nullptr;
        auto spec = std::make_shared<twdp::PhasePdfSpec>(
            twdp::make_phase_pdf_spec(params, alpha_pct));
        return [spec](double phi) { return twdp::phase_pdf(*spec, phi); };
    }

    // ----------------------------------------------------------------- pdf

    struct PdfArgs
    {
        ParamArgs params;
        double alpha_pct = 99.9;
        int grid_points = 2001;
        std::string method = "series";
        double tol = 1e-10;
        std::string out = "pdf.csv";
    };

    void run_pdf(const PdfArgs &a, const std::string &outdir)
    {
        twdp::ChannelParams params = a.params.build();
        twdp::detail::require(a.grid_points >= 2, "grid-points must be >= 2");

        std::function<double(double)> eval;
        if (a.method == "series")
        {
            auto spec = std::make_shared<twdp::PhasePdfSpec>(
                twdp::make_phase_pdf_spec(params, a.alpha_pct));
            eval = [spec](double phi) { return twdp::phase_pdf(*spec, phi); };
        }
        else if (a.method == "closed")
        {
            eval = [params](double phi) { return twdp::phase_pdf_closed(params, phi).total(); };
        }
        else if (a.method == "oracle")
        {
            double tol = a.tol;
            eval = [params, tol](double phi) { return twdp::phase_pdf_oracle(params, phi, tol); };
        }
        else
        {
            throw twdp::config_error("method must be one of series, closed, oracle");
        }

        std::string path = join_out(outdir, a.out);
        twdp::CsvWriter csv(path, {"phi_rad", "density"});
        for (int i = 0; i < a.grid_points; ++i)
        {
            double phi = -twdp::pi + twdp::two_pi * (static_cast<double>(i) + 1.0) /
                                         static_cast<double>(a.grid_points);
            csv.row({twdp::format_g17(phi), twdp::format_g17(eval(phi))});
        }
        csv.close();

        json p = a.params.describe();
        p["alpha"] = a.alpha_pct;
        p["grid-points"] = a.grid_points;
        p["method"] = a.method;
        p["tol"] = a.tol;
        p["out"] = a.out;
        emit_manifest(path, "pdf", p);
        std::printf("wrote %s\n", path.c_str());
    }

    // -------------------------------------------------------------- bounds

    struct BoundsArgs
    {
        double gamma = 1.0;
        double alpha_pct = 99.9;
        double k_min = 0.0;
        double k_max = 60.0;
        double k_step = 1.0;
        double nu_min = std::numeric_limits<double>::quiet_NaN();
        double nu_max = std::numeric_limits<double>::quiet_NaN();
        double nu_step = 1.0;
        std::string out = "bounds.csv";
    };

    void run_bounds(const BoundsArgs &a, const std::string &outdir)
    {
        bool nu_mode = !std::isnan(a.nu_min) || !std::isnan(a.nu_max);
        double lo = nu_mode ? a.nu_min : a.k_min;
        double hi = nu_mode ? a.nu_max : a.k_max;
        double step = nu_mode ? a.nu_step : a.k_step;
        twdp::detail::require(!std::isnan(lo) && !std::isnan(hi),
                              "range needs both its min and max");
        twdp::detail::require(step > 0.0, "range step must be > 0");
        twdp::detail::require(hi >= lo, "range max must be >= min");
        twdp::detail::require(a.gamma >= 0.0 && a.gamma <= 1.0,
                              "Gamma must lie in [0,1]");

        double gg = a.gamma * a.gamma;
        std::string path = join_out(outdir, a.out);
        twdp::CsvWriter csv(path, {"nu", "K", "Gamma", "m_min", "m_max", "n_terms"});
        int prev_m_max = -1;
        for (double v = lo; v <= hi + 0.5 * step; v += step)
        {
            double nu;
            double k;
            if (nu_mode)
            {
                nu = v;
                if (a.gamma == 0.0)
                {
                    twdp::detail::require(nu == 0.0,
                                          "Gamma = 0 admits only nu = 0");
                    k = 0.0;
                }
                else
                {
                    k = nu * (1.0 + gg) / gg;
                }
            }
            else
            {
                k = v;
                nu = k * gg / (1.0 + gg);
            }
            twdp::TruncationBounds b = twdp::truncation_bounds(nu, a.alpha_pct);
            twdp::detail::require(b.m_max >= prev_m_max,
                                  "window upper edge must be non-decreasing in nu");
            prev_m_max = b.m_max;
            csv.row({twdp::format_g17(nu), twdp::format_g17(k), twdp::format_g17(a.gamma),
                     twdp::CsvWriter::cell(b.m_min), twdp::CsvWriter::cell(b.m_max),
                     twdp::CsvWriter::cell(b.n_terms())});
        }
        csv.close();

        json p{{"Gamma", a.gamma}, {"alpha", a.alpha_pct}, {"out", a.out}};
        if (nu_mode)
        {
            p["nu-min"] = a.nu_min;
            p["nu-max"] = a.nu_max;
            p["nu-step"] = a.nu_step;
        }
        else
        {
            p["k-min"] = a.k_min;
            p["k-max"] = a.k_max;
            p["k-step"] = a.k_step;
        }
        emit_manifest(path, "bounds", p);
        std::printf("wrote %s\n", path.c_str());
    }

    // ------------------------------------------------------------------ pe

    struct PeArgs
    {
        double gamma = 0.4;
        double omega = 1.0;
        std::vector<int> orders = {2, 4, 8, 16};
        double k_min = 0.0;
        double k_max = 20.0;
        double k_step = 1.0;
        double alpha_pct = 99.9;
        double quad_tol = 1e-10;
        bool rician_oracle = false;
        std::string out_prefix = "pe";
    };

    void run_pe(const PeArgs &a, const std::string &outdir)
    {
        twdp::detail::require(a.k_step > 0.0, "k-step must be > 0");
        twdp::detail::require(a.k_max >= a.k_min, "k-max must be >= k-min");
        if (a.rician_oracle)
            twdp::detail::require(a.gamma == 0.0,
                                  "the closed-form reference applies to Gamma = 0 only");
        std::vector<double> k_grid;
        for (double k = a.k_min; k <= a.k_max + 0.5 * a.k_step; k += a.k_step)
            k_grid.push_back(k);

        for (int m : a.orders)
        {
            std::vector<double> pe;
            pe.reserve(k_grid.size());
            if (a.rician_oracle)
            {
                for (double k : k_grid)
                    pe.push_back(twdp::pe_mpsk_rician(k, m, a.quad_tol));
            }
            else
            {
                twdp::PeCurve curve =
                    twdp::pe_curve(a.gamma, a.omega, m, k_grid, a.alpha_pct, a.quad_tol);
                pe = curve.pe_values;
            }

            char name[64];
            std::snprintf(name, sizeof(name), "%s_m%d.csv", a.out_prefix.c_str(), m);
            std::string path = join_out(outdir, name);
            twdp::CsvWriter csv(path, {"K", "Pe"});
            for (std::size_t i = 0; i < k_grid.size(); ++i)
                csv.row({twdp::format_g17(k_grid[i]), twdp::format_g17(pe[i])});
            csv.close();

            std::ofstream header(path.substr(0, path.size() - 4) + ".json");
            header << json{{"gamma", a.gamma}, {"omega", a.omega}, {"M", m},
                           {"alpha_pct", a.alpha_pct}}
                          .dump(2)
                   << '\n';

            json p{{"Gamma", a.gamma}, {"Omega", a.omega}, {"M", a.orders},
                   {"k-min", a.k_min}, {"k-max", a.k_max}, {"k-step", a.k_step},
                   {"alpha", a.alpha_pct}, {"quad-tol", a.quad_tol},
                   {"out-prefix", a.out_prefix}};
            if (a.rician_oracle)
                p["rician-oracle"] = true;
            emit_manifest(path, "pe", p);
            std::printf("wrote %s\n", path.c_str());
        }
    }

    // ------------------------------------------------------------------ mc

    struct McArgs
    {
        ParamArgs params;
        std::uint64_t n_samples = 10000000;
        std::uint64_t seed = 0;
        int bins = 256;
        double alpha_pct = 99.9;
        std::string out = "mc_hist.csv";
    };

    void run_mc(const McArgs &a, const std::string &outdir)
    {
        twdp::McConfig cfg{a.params.build(), a.n_samples, a.seed, a.bins};
        if (cfg.n_samples < 100000)
            std::fprintf(stderr,
                         "warning: %llu samples give loose statistical tolerance; "
                         "histogram noise scales as 1/sqrt(n)\n",
                         static_cast<unsigned long long>(cfg.n_samples));

        twdp::McResult result = twdp::mc_phase_samples(cfg);
        std::string path = join_out(outdir, a.out);
        write_histogram_csv(path, result.histogram,
                            analytic_overlay(cfg.params, a.alpha_pct));

        json p = a.params.describe();
        p["n-samples"] = a.n_samples;
        p["seed"] = a.seed;
        p["bins"] = a.bins;
        p["alpha"] = a.alpha_pct;
        p["out"] = a.out;
        emit_manifest(path, "mc", p, true, a.seed);
        std::printf("wrote %s\n", path.c_str());
        std::printf("samples=%llu circular_mean=%s circular_variance=%s\n",
                    static_cast<unsigned long long>(result.n_samples),
                    twdp::format_g17(result.circular_mean).c_str(),
                    twdp::format_g17(result.circular_variance).c_str());
    }

    // -------------------------------------------------------------- geosim

    struct GeoArgs
    {
        ParamArgs params;
        double tx_x = 0.0;
        double tx_y = 5.0;
        double ref_x = 3.6633;
        double ref_y = -4.0613;
        double ref_angle_deg = 25.0244;
        double velocity = 10.0;
        double doppler_hz = 1000.0;
        double ts = 1e-5;
        double duration = 7.5e-3;
        int n_realizations = 200;
        int n_sinusoids = 64;
        std::uint64_t seed = 0;
        int bins = 256;
        double alpha_pct = 99.9;
        std::string export_what = "histogram";
        std::string out_prefix = "geo";

        GeoArgs() { params.k = 10.0; params.gamma = 0.7; }
    };

    void run_geosim(const GeoArgs &a, const std::string &outdir)
    {
        twdp::GeoSimConfig cfg;
        cfg.tx_position = {a.tx_x, a.tx_y};
        cfg.reflector_position = {a.ref_x, a.ref_y};
        cfg.reflector_angle_deg = a.ref_angle_deg;
        cfg.rx_velocity = a.velocity;
        cfg.doppler_max_hz = a.doppler_hz;
        cfg.sample_time_s = a.ts;
        cfg.duration_s = a.duration;
        cfg.n_realizations = a.n_realizations;
        cfg.n_scatter_sinusoids = a.n_sinusoids;
        cfg.params = a.params.build();
        cfg.seed = a.seed;
        cfg.n_bins = a.bins;
        cfg.validate();

        bool want_real = a.export_what == "realizations" || a.export_what == "both";
        bool want_hist = a.export_what == "histogram" || a.export_what == "both";
        if (!want_real && !want_hist)
            throw twdp::config_error("export must be realizations, histogram, or both");

        json p = a.params.describe();
        p["tx-x"] = a.tx_x;
        p["tx-y"] = a.tx_y;
        p["ref-x"] = a.ref_x;
        p["ref-y"] = a.ref_y;
        p["ref-angle"] = a.ref_angle_deg;
        p["velocity"] = a.velocity;
        p["doppler"] = a.doppler_hz;
        p["ts"] = a.ts;
        p["duration"] = a.duration;
        p["n-realizations"] = a.n_realizations;
        p["n-sinusoids"] = a.n_sinusoids;
        p["seed"] = a.seed;
        p["bins"] = a.bins;
        p["alpha"] = a.alpha_pct;
        p["export"] = a.export_what;
        p["out-prefix"] = a.out_prefix;

        if (want_real)
        {
            for (int r = 0; r < cfg.n_realizations; ++r)
            {
                twdp::FadingRealization real = twdp::geo_realization(cfg, r);
                char name[64];
                std::snprintf(name, sizeof(name), "%s_real_%03d.csv",
                              a.out_prefix.c_str(), r);
                std::string path = join_out(outdir, name);
                twdp::CsvWriter csv(path, {"t_s", "re", "im", "envelope", "phase_rad"});
                for (std::size_t k = 0; k < real.samples.size(); ++k)
                {
                    double t = static_cast<double>(k) * real.sample_time_s;
                    std::complex<double> s = real.samples[k];
                    csv.row({twdp::format_g17(t), twdp::format_g17(s.real()),
                             twdp::format_g17(s.imag()), twdp::format_g17(std::abs(s)),
                             twdp::format_g17(std::arg(s))});
                }
                csv.close();
                emit_manifest(path, "geosim", p, true, a.seed);
                std::printf("wrote %s\n", path.c_str());
            }
        }
        if (want_hist)
        {
            twdp::PhaseHistogram hist = twdp::geo_phase_histogram(cfg);
            std::string path = join_out(outdir, a.out_prefix + "_hist.csv");
            write_histogram_csv(path, hist, analytic_overlay(cfg.params, a.alpha_pct));
            emit_manifest(path, "geosim", p, true, a.seed);
            std::printf("wrote %s\n", path.c_str());
        }
    }

}

int main(int argc, char **argv)
{
    try
    {
        json cfg = scan_config(argc, argv);

        CLI::App app{"Phase statistics of two-wave with diffuse power fading channels"};
        app.set_version_flag("--version", twdp::version_string);
        app.require_subcommand(1);

        std::string outdir = ".";
        std::string config_path;
        app.add_option("--outdir", outdir, "output directory (created if missing)")
            ->envname("TWDP_OUT_DIR");
        app.add_option("--config", config_path,
                       "JSON file supplying option defaults; flags win on conflict");

        PdfArgs pdf;
        CLI::App *cmd_pdf = app.add_subcommand("pdf", "evaluate the conditional phase density on a grid");
        cmd_pdf->fallthrough();
        pdf.params.attach(cmd_pdf, cfg);
        cfg_get(cfg, "alpha", pdf.alpha_pct);
        cfg_get(cfg, "grid-points", pdf.grid_points);
        cfg_get(cfg, "method", pdf.method);
        cfg_get(cfg, "tol", pdf.tol);
        cfg_get(cfg, "out", pdf.out);
        cmd_pdf->add_option("--alpha", pdf.alpha_pct, "retained-power target, percent");
        cmd_pdf->add_option("--grid-points", pdf.grid_points, "evaluation points over (-pi, pi]");
        cmd_pdf->add_option("--method", pdf.method, "series | closed | oracle");
        cmd_pdf->add_option("--tol", pdf.tol, "quadrature tolerance for the oracle method");
        cmd_pdf->add_option("--out", pdf.out, "output CSV name");

        BoundsArgs bounds;
        CLI::App *cmd_bounds = app.add_subcommand("bounds", "tabulate truncation windows over a K or nu range");
        cmd_bounds->fallthrough();
        cfg_get(cfg, "Gamma", bounds.gamma);
        cfg_get(cfg, "alpha", bounds.alpha_pct);
        cfg_get(cfg, "k-min", bounds.k_min);
        cfg_get(cfg, "k-max", bounds.k_max);
        cfg_get(cfg, "k-step", bounds.k_step);
        cfg_get(cfg, "nu-min", bounds.nu_min);
        cfg_get(cfg, "nu-max", bounds.nu_max);
        cfg_get(cfg, "nu-step", bounds.nu_step);
        cfg_get(cfg, "out", bounds.out);
        cmd_bounds->add_option("--Gamma", bounds.gamma, "specular amplitude ratio");
        cmd_bounds->add_option("--alpha", bounds.alpha_pct, "retained-power target, percent");
        cmd_bounds->add_option("--k-min", bounds.k_min, "K range start");
        cmd_bounds->add_option("--k-max", bounds.k_max, "K range end");
        cmd_bounds->add_option("--k-step", bounds.k_step, "K range step");
        cmd_bounds->add_option("--nu-min", bounds.nu_min, "nu range start (overrides K range)");
        cmd_bounds->add_option("--nu-max", bounds.nu_max, "nu range end");
        cmd_bounds->add_option("--nu-step", bounds.nu_step, "nu range step");
        cmd_bounds->add_option("--out", bounds.out, "output CSV name");

        PeArgs pe;
        CLI::App *cmd_pe = app.add_subcommand("pe", "M-PSK phase-sync error probability versus K");
        cmd_pe->fallthrough();
        cfg_get(cfg, "Gamma", pe.gamma);
        cfg_get(cfg, "Omega", pe.omega);
        cfg_get(cfg, "M", pe.orders);
        cfg_get(cfg, "k-min", pe.k_min);
        cfg_get(cfg, "k-max", pe.k_max);
        cfg_get(cfg, "k-step", pe.k_step);
        cfg_get(cfg, "alpha", pe.alpha_pct);
        cfg_get(cfg, "quad-tol", pe.quad_tol);
        cfg_get(cfg, "rician-oracle", pe.rician_oracle);
        cfg_get(cfg, "out-prefix", pe.out_prefix);
        cmd_pe->add_option("--Gamma", pe.gamma, "specular amplitude ratio");
        cmd_pe->add_option("--Omega", pe.omega, "total power");
        cmd_pe->add_option("--M", pe.orders, "modulation orders (repeat or comma-separate)")
            ->delimiter(',');
        cmd_pe->add_option("--k-min", pe.k_min, "K grid start");
        cmd_pe->add_option("--k-max", pe.k_max, "K grid end");
        cmd_pe->add_option("--k-step", pe.k_step, "K grid step");
        cmd_pe->add_option("--alpha", pe.alpha_pct, "retained-power target, percent");
        cmd_pe->add_option("--quad-tol", pe.quad_tol, "quadrature tolerance");
        cmd_pe->add_flag("--rician-oracle", pe.rician_oracle)->group("");
        cmd_pe->add_option("--out-prefix", pe.out_prefix, "output file prefix");

        McArgs mc;
        CLI::App *cmd_mc = app.add_subcommand("mc", "Monte Carlo phase histogram with analytic overlay");
        cmd_mc->fallthrough();
        mc.params.attach(cmd_mc, cfg);
        cfg_get(cfg, "n-samples", mc.n_samples);
        cfg_get(cfg, "seed", mc.seed);
        cfg_get(cfg, "bins", mc.bins);
        cfg_get(cfg, "alpha", mc.alpha_pct);
        cfg_get(cfg, "out", mc.out);
        cmd_mc->add_option("--n-samples", mc.n_samples, "number of envelope samples");
        cmd_mc->add_option("--seed", mc.seed, "master RNG seed");
        cmd_mc->add_option("--bins", mc.bins, "histogram bins over (-pi, pi]");
        cmd_mc->add_option("--alpha", mc.alpha_pct, "retained-power target for the overlay");
        cmd_mc->add_option("--out", mc.out, "output CSV name");

        GeoArgs geo;
        CLI::App *cmd_geo = app.add_subcommand("geosim", "geometry-based Doppler channel simulation");
        cmd_geo->fallthrough();
        geo.params.attach(cmd_geo, cfg);
        cfg_get(cfg, "tx-x", geo.tx_x);
        cfg_get(cfg, "tx-y", geo.tx_y);
        cfg_get(cfg, "ref-x", geo.ref_x);
        cfg_get(cfg, "ref-y", geo.ref_y);
        cfg_get(cfg, "ref-angle", geo.ref_angle_deg);
        cfg_get(cfg, "velocity", geo.velocity);
        cfg_get(cfg, "doppler", geo.doppler_hz);
        cfg_get(cfg, "ts", geo.ts);
        cfg_get(cfg, "duration", geo.duration);
        cfg_get(cfg, "n-realizations", geo.n_realizations);
        cfg_get(cfg, "n-sinusoids", geo.n_sinusoids);
        cfg_get(cfg, "seed", geo.seed);
        cfg_get(cfg, "bins", geo.bins);
        cfg_get(cfg, "alpha", geo.alpha_pct);
        cfg_get(cfg, "export", geo.export_what);
        cfg_get(cfg, "out-prefix", geo.out_prefix);
        cmd_geo->add_option("--tx-x", geo.tx_x, "transmitter x, meters");
        cmd_geo->add_option("--tx-y", geo.tx_y, "transmitter y, meters");
        cmd_geo->add_option("--ref-x", geo.ref_x, "reflector point x, meters");
        cmd_geo->add_option("--ref-y", geo.ref_y, "reflector point y, meters");
        cmd_geo->add_option("--ref-angle", geo.ref_angle_deg, "reflector plane angle, degrees");
        cmd_geo->add_option("--velocity", geo.velocity, "receiver speed along +x, m/s");
        cmd_geo->add_option("--doppler", geo.doppler_hz, "maximum Doppler shift, Hz");
        cmd_geo->add_option("--ts", geo.ts, "sample time, seconds");
        cmd_geo->add_option("--duration", geo.duration, "run length, seconds");
        cmd_geo->add_option("--n-realizations", geo.n_realizations, "independent realizations");
        cmd_geo->add_option("--n-sinusoids", geo.n_sinusoids, "diffuse sum-of-sinusoids count");
        cmd_geo->add_option("--seed", geo.seed, "master RNG seed");
        cmd_geo->add_option("--bins", geo.bins, "histogram bins");
        cmd_geo->add_option("--alpha", geo.alpha_pct, "retained-power target for the overlay");
        cmd_geo->add_option("--export", geo.export_what, "realizations | histogram | both");
        cmd_geo->add_option("--out-prefix", geo.out_prefix, "output file prefix");

        try
        {
            app.parse(argc, argv);
        }
        catch (const CLI::ParseError &e)
        {
            int code = app.exit(e);
            return code == 0 ? 0 : 2;
        }

        if (cmd_pdf->parsed())
            run_pdf(pdf, outdir);
        else if (cmd_bounds->parsed())
            run_bounds(bounds, outdir);
        else if (cmd_pe->parsed())
            run_pe(pe, outdir);
        else if (cmd_mc->parsed())
            run_mc(mc, outdir);
        else if (cmd_geo->parsed())
            run_geosim(geo, outdir);
        return 0;
    }
    catch (const twdp::numeric_error &e)
    {
        std::fprintf(stderr, "numeric failure: %s\n", e.what());
        return 3;
    }
    catch (const twdp::domain_error &e)
    {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    catch (const std::exception &e)
    {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
