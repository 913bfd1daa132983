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

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "twdp/channel_params.hpp"
#include "twdp/errors.hpp"
#include "twdp/histogram.hpp"
#include "twdp/math_util.hpp"
#include "twdp/rng.hpp"

namespace twdp
{

    // ---------------------------------------------------------------- direct
    // Monte Carlo envelope sampler

    struct McConfig
    {
        ChannelParams params;
        std::uint64_t n_samples = 10000000;
        std::uint64_t seed = 0;
        int n_bins = 256;

        void validate() const
        {
            detail::require(n_samples >= 1, "n_samples must be >= 1");
            detail::require(n_bins >= 2, "n_bins must be >= 2");
        }
    };

    struct McResult
    {
        PhaseHistogram histogram;
        double circular_mean = 0.0;
        double circular_variance = 0.0;
        std::uint64_t n_samples = 0;
    };

    namespace detail
    {
        /// Visits arg(rho) for every sample, in a fixed block order. The
        /// stream is partitioned into 1024 independently seeded blocks so a
        /// parallel implementation could farm them out and still reproduce
        /// the serial result; every sample consumes exactly three uniforms
        /// regardless of parameter values, which pins the stream layout.
        template <typename Fn>
        void mc_for_each_phase(const McConfig &cfg, Fn &&fn)
        {
            cfg.validate();
            const std::uint64_t n_blocks = 1024;
            const std::uint64_t base = cfg.n_samples / n_blocks;
            const std::uint64_t rem = cfg.n_samples % n_blocks;

            const double v1 = cfg.params.v1();
            const double v2 = cfg.params.v2();
            const double sigma = std::sqrt(cfg.params.sigma2());
            const double re0 = v1 * std::cos(cfg.params.phi1());
            const double im0 = v1 * std::sin(cfg.params.phi1());

            for (std::uint64_t b = 0; b < n_blocks; ++b)
            {
                std::uint64_t count = base + (b < rem ? 1 : 0);
                if (count == 0)
                    continue;
                std::mt19937_64 rng(block_seed(cfg.seed, b));
                for (std::uint64_t i = 0; i < count; ++i)
                {
                    double phi2 = uniform_angle(rng);
                    double u1 = uniform01(rng);
                    double u2 = uniform01(rng);
                    double g = std::sqrt(-2.0 * std::log1p(-u1));
                    double theta = two_pi * u2;
                    double re = re0 + v2 * std::cos(phi2) + sigma * g * std::cos(theta);
                    double im = im0 + v2 * std::sin(phi2) + sigma * g * std::sin(theta);
                    double phi = std::atan2(im, re);
                    if (phi <= -pi)
                        phi = pi;
                    fn(phi);
                }
            }
        }
    }

    /// Samples rho = v1 e^{j phi1} + v2 e^{j phi2} + n with phi2 uniform and
    /// n circular Gaussian of power 2 sigma2, and histograms arg(rho).
    /// Identical seeds give bit-identical results.
    inline McResult mc_phase_samples(const McConfig &cfg)
    {
        McResult out{PhaseHistogram(cfg.n_bins), 0.0, 0.0, cfg.n_samples};
        KahanSum sum_cos;
        KahanSum sum_sin;
        detail::mc_for_each_phase(cfg, [&](double phi)
        {
            out.histogram.add(phi);
            sum_cos.add(std::cos(phi));
            sum_sin.add(std::sin(phi));
        });
        double n = static_cast<double>(cfg.n_samples);
        double resultant = std::hypot(sum_cos.value(), sum_sin.value());
        out.circular_mean = resultant == 0.0 ? 0.0 : std::atan2(sum_sin.value(), sum_cos.value());
        out.circular_variance = 1.0 - resultant / n;
        return out;
    }

    // ------------------------------------------------- geometric Doppler sim

    struct Vec2
    {
        double x = 0.0;
        double y = 0.0;
    };

    struct GeoSimConfig
    {
        Vec2 tx_position{0.0, 5.0};
        Vec2 reflector_position{3.6633, -4.0613};
        double reflector_angle_deg = 25.0244;
        double rx_velocity = 10.0;
        double doppler_max_hz = 1000.0;
        double sample_time_s = 1e-5;
        double duration_s = 7.5e-3;
        int n_realizations = 200;
        int n_scatter_sinusoids = 64;
        ChannelParams params = ChannelParams::from_normalized(10.0, 0.7, 1.0, 0.0);
        std::uint64_t seed = 0;
        int n_bins = 256;

        int n_samples() const
        {
            return static_cast<int>(std::llround(duration_s / sample_time_s));
        }

        void validate() const
        {
            detail::check_positive(rx_velocity, "rx_velocity");
            detail::check_positive(doppler_max_hz, "doppler_max_hz");
            detail::check_positive(sample_time_s, "sample_time_s");
            detail::check_positive(duration_s, "duration_s");
            detail::require(n_realizations >= 1, "n_realizations must be >= 1");
            detail::require(n_scatter_sinusoids >= 1, "n_scatter_sinusoids must be >= 1");
            detail::require(n_bins >= 2, "n_bins must be >= 2");
            double ratio = duration_s / sample_time_s;
            double rounded = std::llround(ratio);
            if (rounded < 2.0 || std::fabs(ratio - rounded) > 1e-6 * rounded)
                throw config_error("duration_s must be an integer multiple (>= 2) of sample_time_s");
        }
    };

    struct FadingRealization
    {
        std::vector<std::complex<double>> samples;
        double sample_time_s = 0.0;
    };

    /// Unwrapped geometric ray phases along the receiver path, radians.
    /// The line-of-sight phase is referenced to the path-average distance and
    /// includes phi1; the reflected phase is referenced to the first sample
    /// and excludes the per-realization uniform offset.
    struct GeoRayPhases
    {
        std::vector<double> t;
        std::vector<double> los;
        std::vector<double> reflected;
    };

    /// One realization's diffuse process: an equal-power sum of
    /// n sinusoids with arrival angles alpha_n = (2 pi n - pi + theta)/n_total
    /// rotated by a single uniform theta, and iid uniform phase offsets
    /// (the rotated-angle variant of the Clarke sum-of-sinusoids family).
    /// Ensemble power is exactly 2 sigma2 and the phase marginal is uniform.
    struct ClarkeDiffuse
    {
        double amplitude = 0.0;
        double omega_d = 0.0;
        std::vector<double> cos_alpha;
        std::vector<double> phase;

        std::complex<double> at(double t) const
        {
            double re = 0.0;
            double im = 0.0;
            for (std::size_t n = 0; n < cos_alpha.size(); ++n)
            {
                double arg = omega_d * t * cos_alpha[n] + phase[n];
                re += std::cos(arg);
                im += std::sin(arg);
            }
            return {amplitude * re, amplitude * im};
        }
    };

    /// Draws the angle rotation and the per-sinusoid phases (in that order)
    /// from rng and returns a ready-to-evaluate diffuse process.
    inline ClarkeDiffuse make_clarke_diffuse(double sigma2, double doppler_hz,
                                             int n_sinusoids, std::mt19937_64 &rng)
    {
        detail::check_non_negative(sigma2, "sigma2");
        detail::require(n_sinusoids >= 1, "n_sinusoids must be >= 1");
        ClarkeDiffuse d;
        d.amplitude = std::sqrt(2.0 * sigma2 / static_cast<double>(n_sinusoids));
        d.omega_d = two_pi * doppler_hz;
        d.cos_alpha.resize(static_cast<std::size_t>(n_sinusoids));
        d.phase.resize(static_cast<std::size_t>(n_sinusoids));
        double theta = uniform_angle(rng);
        for (int n = 1; n <= n_sinusoids; ++n)
        {
            double alpha = (two_pi * static_cast<double>(n) - pi + theta) /
                           static_cast<double>(n_sinusoids);
            d.cos_alpha[static_cast<std::size_t>(n - 1)] = std::cos(alpha);
        }
        for (int n = 0; n < n_sinusoids; ++n)
            d.phase[static_cast<std::size_t>(n)] = uniform_angle(rng);
        return d;
    }

    namespace detail
    {
        struct GeoPaths
        {
            std::vector<double> t;
            std::vector<double> d_los;
            std::vector<double> d_ref;
            double lambda = 0.0;
            double mean_d_los = 0.0;
        };

        inline double dist(Vec2 a, Vec2 b)
        {
            return std::hypot(a.x - b.x, a.y - b.y);
        }

        /// Path-length bookkeeping for the mirror-image reflection geometry.
        /// The receiver moves along +x on y = 0, centered on the x origin so
        /// the line of sight stays near-perpendicular to the motion. The
        /// wavelength comes from the stated maximum Doppler, lambda = v/f_d.
        inline GeoPaths geo_paths(const GeoSimConfig &cfg)
        {
            cfg.validate();
            int n = cfg.n_samples();

            double a = cfg.reflector_angle_deg * pi / 180.0;
            Vec2 p = cfg.reflector_position;
            Vec2 nrm{-std::sin(a), std::cos(a)};
            Vec2 w{cfg.tx_position.x - p.x, cfg.tx_position.y - p.y};
            double w_n = w.x * nrm.x + w.y * nrm.y;
            Vec2 image{cfg.tx_position.x - 2.0 * w_n * nrm.x,
                       cfg.tx_position.y - 2.0 * w_n * nrm.y};

            double x0 = -0.5 * cfg.rx_velocity * cfg.duration_s;
            auto rx_at = [&](double t) { return Vec2{x0 + cfg.rx_velocity * t, 0.0}; };
            auto side = [&](Vec2 q) { return (q.x - p.x) * nrm.x + (q.y - p.y) * nrm.y; };

            double t_last = static_cast<double>(n - 1) * cfg.sample_time_s;
            double s_tx = side(cfg.tx_position);
            double s_first = side(rx_at(0.0));
            double s_last = side(rx_at(t_last));
            if (s_tx == 0.0 || s_first * s_tx <= 0.0 || s_last * s_tx <= 0.0)
                throw config_error("receiver path crosses or touches the reflector plane");

            GeoPaths out;
            out.lambda = cfg.rx_velocity / cfg.doppler_max_hz;
            out.t.resize(static_cast<std::size_t>(n));
            out.d_los.resize(static_cast<std::size_t>(n));
            out.d_ref.resize(static_cast<std::size_t>(n));
            KahanSum mean;
            for (int k = 0; k < n; ++k)
            {
                double t = static_cast<double>(k) * cfg.sample_time_s;
                Vec2 rx = rx_at(t);
                out.t[static_cast<std::size_t>(k)] = t;
                out.d_los[static_cast<std::size_t>(k)] = dist(cfg.tx_position, rx);
                out.d_ref[static_cast<std::size_t>(k)] = dist(image, rx);
                mean.add(out.d_los[static_cast<std::size_t>(k)]);
            }
            out.mean_d_los = mean.value() / static_cast<double>(n);
            return out;
        }
    }

    /// Deterministic per-sample ray phases implied by the geometry alone.
    inline GeoRayPhases geo_ray_phases(const GeoSimConfig &cfg)
    {
        detail::GeoPaths paths = detail::geo_paths(cfg);
        double k_wave = two_pi / paths.lambda;
        GeoRayPhases out;
        out.t = paths.t;
        out.los.resize(paths.t.size());
        out.reflected.resize(paths.t.size());
        for (std::size_t k = 0; k < paths.t.size(); ++k)
        {
            out.los[k] = cfg.params.phi1() - k_wave * (paths.d_los[k] - paths.mean_d_los);
            out.reflected[k] = -k_wave * (paths.d_ref[k] - paths.d_ref[0]);
        }
        return out;
    }

    /// One independent channel realization: constant-amplitude specular rays
    /// with geometry-driven phase trajectories plus the Clarke diffuse
    /// process. Per realization the draws are, in order: the reflected ray's
    /// initial phase, the diffuse angle rotation, the diffuse sinusoid
    /// phases. Realization streams derive from block_seed(seed, index).
    inline FadingRealization geo_realization(const GeoSimConfig &cfg, int realization_index)
    {
        detail::require(realization_index >= 0, "realization_index must be >= 0");
        GeoRayPhases rays = geo_ray_phases(cfg);

        std::mt19937_64 rng(block_seed(cfg.seed, static_cast<std::uint64_t>(realization_index)));
        double phi2_0 = uniform_angle(rng);
        ClarkeDiffuse diffuse = make_clarke_diffuse(cfg.params.sigma2(), cfg.doppler_max_hz,
                                                    cfg.n_scatter_sinusoids, rng);

        FadingRealization out;
        out.sample_time_s = cfg.sample_time_s;
        out.samples.resize(rays.t.size());
        double v1 = cfg.params.v1();
        double v2 = cfg.params.v2();
        for (std::size_t k = 0; k < rays.t.size(); ++k)
        {
            std::complex<double> los = std::polar(v1, rays.los[k]);
            std::complex<double> ref = std::polar(v2, rays.reflected[k] + phi2_0);
            out.samples[k] = los + ref + diffuse.at(rays.t[k]);
        }
        return out;
    }

    /// Aggregate phase histogram over all samples of all realizations,
    /// reduced in realization order so the result is seed-deterministic.
    inline PhaseHistogram geo_phase_histogram(const GeoSimConfig &cfg)
    {
        cfg.validate();
        PhaseHistogram hist(cfg.n_bins);
        for (int r = 0; r < cfg.n_realizations; ++r)
        {
            FadingRealization real = geo_realization(cfg, r);
            for (const auto &s : real.samples)
            {
                double phi = std::arg(s);
                if (phi <= -pi)
                    phi = pi;
                hist.add(phi);
            }
        }
        return hist;
    }

}
