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
#include <cstdint>
#include <vector>

#include "twdp/channel_params.hpp"
#include "twdp/errors.hpp"
#include "twdp/math_util.hpp"
#include "twdp/phase_pdf.hpp"
#include "twdp/quadrature.hpp"
#include "twdp/simulate.hpp"

namespace twdp
{

    /// Phase-sync error probability of M-PSK versus the K-factor, with the
    /// context needed to reproduce the curve.
    struct PeCurve
    {
        double gamma = 0.0;
        double omega = 1.0;
        int m_order = 2;
        double alpha_pct = 99.9;
        std::vector<double> k_grid;
        std::vector<double> pe_values;
    };

    namespace detail
    {
        template <typename Pdf>
        double pe_from_pdf(Pdf &&pdf, int m_order, double quad_tol)
        {
            require(m_order >= 2, "modulation order must be >= 2");
            check_positive(quad_tol, "quad_tol");
            double lo = pi / static_cast<double>(m_order);
            double integral;
            // Splitting at pi/2 keeps refinement away from the density's
            // piecewise-transition abscissa.
            if (lo < 0.5 * pi)
                integral = integrate(pdf, lo, 0.5 * pi, quad_tol, quad_tol).value +
                           integrate(pdf, 0.5 * pi, pi, quad_tol, quad_tol).value;
            else
                integral = integrate(pdf, lo, pi, quad_tol, quad_tol).value;
            double pe = 2.0 * integral;
            if (pe < 0.0)
            {
                if (pe < -quad_tol)
                    throw numeric_error("error-probability estimate escaped [0, 1]", pe);
                pe = 0.0;
            }
            if (pe > 1.0)
            {
                if (pe > 1.0 + quad_tol)
                    throw numeric_error("error-probability estimate escaped [0, 1]", pe);
                pe = 1.0;
            }
            return pe;
        }
    }

    /// P_e = 2 int_{pi/M}^{pi} p(phi) dphi over the truncated-series PDF.
    /// The channel must use phi1 = 0, the synchronization reference.
    inline double pe_mpsk(const ChannelParams &params, int m_order,
                          double quad_tol = 1e-10, double alpha_pct = 99.9)
    {
        detail::require(params.phi1() == 0.0, "pe_mpsk requires phi1 = 0");
        PhasePdfSpec spec = make_phase_pdf_spec(params, alpha_pct);
        return detail::pe_from_pdf([&](double phi) { return phase_pdf(spec, phi); },
                                   m_order, quad_tol);
    }

    /// Same integral over the closed-form Rician phase density; serves as the
    /// independent reference for the gamma = 0 column.
    inline double pe_mpsk_rician(double k, int m_order, double quad_tol = 1e-10)
    {
        detail::check_non_negative(k, "rician k");
        return detail::pe_from_pdf([&](double phi) { return rician_phase_pdf(k, phi); },
                                   m_order, quad_tol);
    }

    /// Evaluates pe_mpsk across an ascending K grid at fixed gamma and omega.
    inline PeCurve pe_curve(double gamma, double omega, int m_order,
                            const std::vector<double> &k_grid,
                            double alpha_pct = 99.9, double quad_tol = 1e-10)
    {
        detail::require(!k_grid.empty(), "k_grid must not be empty");
        for (std::size_t i = 0; i < k_grid.size(); ++i)
        {
            detail::require(std::isfinite(k_grid[i]) && k_grid[i] >= 0.0,
                            "k_grid values must be >= 0 and finite");
            detail::require(i == 0 || k_grid[i] > k_grid[i - 1],
                            "k_grid must be strictly ascending");
        }
        PeCurve curve;
        curve.gamma = gamma;
        curve.omega = omega;
        curve.m_order = m_order;
        curve.alpha_pct = alpha_pct;
        curve.k_grid = k_grid;
        curve.pe_values.reserve(k_grid.size());
        for (double k : k_grid)
        {
            ChannelParams p = ChannelParams::from_normalized(k, gamma, omega, 0.0);
            curve.pe_values.push_back(pe_mpsk(p, m_order, quad_tol, alpha_pct));
        }
        return curve;
    }

    /// Empirical error probability: the fraction of sampled phases beyond
    /// +-pi/M, using the same sample stream as mc_phase_samples.
    inline double pe_monte_carlo(const McConfig &cfg, int m_order)
    {
        detail::require(cfg.params.phi1() == 0.0, "pe_monte_carlo requires phi1 = 0");
        detail::require(m_order >= 2, "modulation order must be >= 2");
        double threshold = pi / static_cast<double>(m_order);
        std::uint64_t exceed = 0;
        detail::mc_for_each_phase(cfg, [&](double phi)
        {
            if (std::fabs(phi) > threshold)
                ++exceed;
        });
        return static_cast<double>(exceed) / static_cast<double>(cfg.n_samples);
    }

}
