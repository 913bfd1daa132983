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
#include <cstddef>
#include <vector>

#include "twdp/channel_params.hpp"
#include "twdp/errors.hpp"
#include "twdp/math_util.hpp"
#include "twdp/quadrature.hpp"
#include "twdp/series_control.hpp"
#include "twdp/specfun/bessel.hpp"
#include "twdp/specfun/gamma.hpp"
#include "twdp/specfun/humbert.hpp"
#include "twdp/specfun/kummer.hpp"
#include "twdp/truncation.hpp"

namespace twdp
{

    /// Prepared conditional-phase evaluator: parameter set, index window and
    /// the Poisson weights p(m) = nu^m e^{-nu} / m! over that window.
    struct PhasePdfSpec
    {
        ChannelParams params;
        TruncationBounds bounds;
        std::vector<double> weights;
    };

    namespace detail
    {
        inline void require_diffuse_params(const ChannelParams &params, const char *op)
        {
            if (params.is_degenerate())
                throw domain_error(std::string(op) +
                                   " requires a channel with a diffuse component");
        }
    }

    /// Builds a spec with an explicit index window. Weights come out of
    /// log-space; anything below 1e-300 is flushed to exact zero.
    inline PhasePdfSpec make_phase_pdf_spec(const ChannelParams &params,
                                            const TruncationBounds &bounds)
    {
        detail::require_diffuse_params(params, "make_phase_pdf_spec");
        detail::require(bounds.m_min >= 0 && bounds.m_min <= bounds.m_max,
                        "phase pdf bounds must satisfy 0 <= m_min <= m_max");
        double nu = params.nu();
        std::vector<double> weights;
        weights.reserve(static_cast<std::size_t>(bounds.n_terms()));
        for (int m = bounds.m_min; m <= bounds.m_max; ++m)
        {
            double w = poisson_pmf(m, nu);
            weights.push_back(w < 1e-300 ? 0.0 : w);
        }
        return PhasePdfSpec{params, bounds, std::move(weights)};
    }

    /// Builds a spec whose window retains alpha_pct of the average power.
    inline PhasePdfSpec make_phase_pdf_spec(const ChannelParams &params,
                                            double alpha_pct = 99.9)
    {
        detail::require_diffuse_params(params, "make_phase_pdf_spec");
        return make_phase_pdf_spec(params, truncation_bounds(params.nu(), alpha_pct));
    }

    /// Conditional phase density given the mixture index m, evaluated at
    /// psi = wrap(phi - phi1). The bracket has three pieces:
    ///
    ///   uniform piece   e^{-x} sum_{k<=m} x^k/k!            (equals Q(m+1, x))
    ///   half-order piece sqrt(x) cos(psi) e^{-s} *
    ///                    Gamma(m+1/2)/Gamma(m+1) * M(-m, 1/2-m, s)
    ///   Humbert piece   cos^2(psi) x^{m+1} e^{-x}/m! *
    ///                    Phi1(1, -m, 3/2; cos^2 psi, x cos^2 psi)
    ///
    /// with s = x sin^2(psi), combined as (first + second)/(2 pi) + third/pi.
    /// The half-order piece is the analytic continuation of the tan-form
    /// printed in derivations; it is regular at psi = 0 and odd multiples of
    /// pi/2, so no special-cased limits are needed anywhere on the axis.
    inline double phase_pdf_term(const ChannelParams &params, int m, double phi,
                                 const SeriesControl &ctl = {})
    {
        ctl.validate();
        detail::require(m >= 0, "phase_pdf_term index must be >= 0");
        detail::require_diffuse_params(params, "phase_pdf_term");
        if (params.v1() == 0.0)
            return inv_two_pi;

        double x = params.x();
        double psi = wrap_angle(phi - params.phi1());
        double sp = std::sin(psi);
        double cp = std::cos(psi);
        double s = x * sp * sp;
        double u = cp * cp;
        double dm = static_cast<double>(m);

        double uniform_piece;
        if (x > 700.0)
        {
            uniform_piece = reg_gamma_q(dm + 1.0, x);
        }
        else
        {
            double t = 1.0;
            double sum = 1.0;
            for (int k = 1; k <= m; ++k)
            {
                t *= x / static_cast<double>(k);
                sum += t;
            }
            uniform_piece = std::exp(-x) * sum;
        }

        double half_piece = 0.0;
        if (cp != 0.0)
        {
            double ln_mag = 0.5 * std::log(x) + std::log(std::fabs(cp)) - s +
                            ln_gamma(dm + 0.5) - ln_gamma(dm + 1.0) +
                            ln_tricomi_u_half_poly(m, s);
            half_piece = std::copysign(std::exp(ln_mag), cp);
        }

        double humbert_piece = 0.0;
        if (u != 0.0)
        {
            double ln_front = (dm + 1.0) * std::log(x) - x - ln_gamma(dm + 1.0);
            humbert_piece =
                u * std::exp(ln_front) * humbert_phi1_terminating(m, u, x * u, ctl);
        }

        double value = (uniform_piece + half_piece) * inv_two_pi + humbert_piece * inv_pi;
        if (value < 0.0 && value > -1e-12)
            value = 0.0;
        return value;
    }

    /// Truncated mixture sum of phase_pdf_term over the spec's window.
    inline double phase_pdf(const PhasePdfSpec &spec, double phi,
                            const SeriesControl &ctl = {})
    {
        double sum = 0.0;
        std::size_t idx = 0;
        for (int m = spec.bounds.m_min; m <= spec.bounds.m_max; ++m, ++idx)
        {
            double w = spec.weights[idx];
            if (w == 0.0)
                continue;
            sum += w * phase_pdf_term(spec.params, m, phi, ctl);
        }
        return sum;
    }

    /// Closed-form Rician phase density for a channel with K-factor k and
    /// dominant phase 0:
    ///   p(phi) = e^{-k}/(2 pi)
    ///          + sqrt(k/pi) cos(phi) e^{-k sin^2 phi} (1 + erf(sqrt(k) cos(phi)))/2
    inline double rician_phase_pdf(double k, double phi)
    {
        detail::check_non_negative(k, "rician k");
        double cp = std::cos(phi);
        double sp = std::sin(phi);
        double root_k = std::sqrt(k);
        return std::exp(-k) * inv_two_pi +
               std::sqrt(k / pi) * cp * std::exp(-k * sp * sp) *
                   0.5 * (1.0 + std::erf(root_k * cp));
    }

    namespace detail
    {
        /// Rician envelope density with parameters (v2, sigma), written with
        /// the scaled Bessel so the exponent stays moderate.
        inline double rician_envelope_pdf(double r, double v2, double sigma2)
        {
            if (r <= 0.0)
                return 0.0;
            double d = r - v2;
            return r / sigma2 * std::exp(-0.5 * d * d / sigma2) *
                   i0_scaled(r * v2 / sigma2);
        }
    }

    /// Independent phase-density evaluation that bypasses the m-series: the
    /// envelope r of the weak-plus-diffuse part is exactly Rician, and the
    /// angle density conditioned on r is elementary, so
    ///   p(phi) = int_0^inf p(phi | r) p_Rice(r) dr.
    /// The r < v1 branch carries an inverse-square-root endpoint singularity
    /// at r = v1 |sin psi|; substituting r = sqrt(v1^2 sin^2 psi + u^2)
    /// removes it, after which the integrand is smooth on every panel.
    inline double phase_pdf_oracle(const ChannelParams &params, double phi,
                                   double tol = 1e-10)
    {
        detail::require_diffuse_params(params, "phase_pdf_oracle");
        detail::check_positive(tol, "phase_pdf_oracle tolerance");
        if (params.v1() == 0.0)
            return inv_two_pi;

        double v1 = params.v1();
        double v2 = params.v2();
        double sigma2 = params.sigma2();
        double psi = wrap_angle(phi - params.phi1());
        double sp = std::sin(psi);
        double cp = std::cos(psi);

        double r_low = v1 * std::fabs(sp);
        double r_max = std::fmax(v1, v2) + 15.0 * std::sqrt(sigma2);
        auto over_r = [&](double u)
        {
            double r = std::sqrt(r_low * r_low + u * u);
            if (r == 0.0)
                return std::exp(-0.5 * v2 * v2 / sigma2) / sigma2;
            return detail::rician_envelope_pdf(r, v2, sigma2) / r;
        };

        double u_split = v1 * std::fabs(cp);
        double u_max = std::sqrt(std::fmax(r_max * r_max - r_low * r_low, 0.0));

        double inner = 0.0;
        if (cp > 0.0 && u_split > 0.0)
            inner = v1 * cp * inv_pi * integrate(over_r, 0.0, u_split, tol, tol).value;

        double outer_angle = 0.0;
        if (cp != 0.0 && u_max > u_split)
            outer_angle = v1 * cp * 0.5 * inv_pi *
                          integrate(over_r, u_split, u_max, tol, tol).value;

        auto envelope = [&](double r) { return detail::rician_envelope_pdf(r, v2, sigma2); };
        double outer_uniform =
            0.5 * inv_pi * integrate(envelope, v1, r_max, tol, tol).value;

        return inner + outer_angle + outer_uniform;
    }

}
