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
#include <string>

#include "twdp/channel_params.hpp"
#include "twdp/errors.hpp"
#include "twdp/math_util.hpp"
#include "twdp/series_control.hpp"
#include "twdp/specfun/humbert.hpp"
#include "twdp/specfun/triple.hpp"

namespace twdp
{

    /// The three additive pieces of the closed-form conditional phase density.
    /// The density value is their sum.
    struct ClosedFormTerms
    {
        double uniform_term = 0.0;
        double cos_term = 0.0;
        double triple_term = 0.0;

        double total() const { return uniform_term + cos_term + triple_term; }
    };

    /// Closed-form conditional phase density, split into its three pieces:
    ///
    ///   uniform_term = (1/2pi) [1 - x e^{-(x+nu)} Phi3(1, 2; x, x nu)]
    ///   cos_term     = (1/2 sqrt(pi)) sqrt(x) cos(psi)
    ///                  e^{-(x sin^2 psi + nu)} Phi3(1/2, 1; nu, x nu sin^2 psi)
    ///   triple_term  = (1/pi) x cos^2(psi) e^{-(x+nu)}
    ///                  F(-x nu cos^2 psi, x cos^2 psi, x nu)
    ///
    /// with psi = wrap(phi - phi1), x and nu the component power ratios and F
    /// the triple series of triple_f3_instance. This surface cross-validates
    /// the production series evaluator; it is guarded to K <= k_cap because
    /// the alternating triple series sheds precision long before it stops
    /// converging. Convergence failures are rethrown naming the piece.
    inline ClosedFormTerms phase_pdf_closed(const ChannelParams &params, double phi,
                                            const SeriesControl &ctl = {},
                                            double k_cap = 20.0)
    {
        ctl.validate();
        if (params.is_degenerate())
            throw domain_error("phase_pdf_closed requires a channel with a diffuse component");
        if (params.v1() == 0.0)
            return ClosedFormTerms{inv_two_pi, 0.0, 0.0};
        detail::require(params.k() <= k_cap, "phase_pdf_closed K-factor exceeds the guard cap");

        double x = params.x();
        double nu = params.nu();
        double psi = wrap_angle(phi - params.phi1());
        double sp = std::sin(psi);
        double cp = std::cos(psi);
        double s2 = sp * sp;
        double u = cp * cp;

        ClosedFormTerms out;
        try
        {
            out.uniform_term =
                inv_two_pi * (1.0 - x * std::exp(-(x + nu)) * humbert_phi3(1.0, 2.0, x, x * nu, ctl));
        }
        catch (const numeric_error &e)
        {
            throw numeric_error(std::string("closed-form uniform term: ") + e.what(),
                                e.partial_estimate());
        }
        try
        {
            out.cos_term = 0.5 / sqrt_pi * std::sqrt(x) * cp *
                           std::exp(-(x * s2 + nu)) *
                           humbert_phi3(0.5, 1.0, nu, x * nu * s2, ctl);
        }
        catch (const numeric_error &e)
        {
            throw numeric_error(std::string("closed-form cosine term: ") + e.what(),
                                e.partial_estimate());
        }
        try
        {
            out.triple_term = inv_pi * x * u * std::exp(-(x + nu)) *
                              triple_f3_instance(-x * nu * u, x * u, x * nu, ctl);
        }
        catch (const numeric_error &e)
        {
            throw numeric_error(std::string("closed-form triple term: ") + e.what(),
                                e.partial_estimate());
        }
        return out;
    }

}
