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

#include "twdp/errors.hpp"
#include "twdp/specfun/gamma.hpp"
#include "twdp/specfun/normal.hpp"

namespace twdp
{

    /// Summation index window [m_min, m_max] of the Poisson mixture together
    /// with the retained-power target it was sized for.
    struct TruncationBounds
    {
        int m_min = 0;
        int m_max = 0;
        double alpha_pct = 99.9;

        int n_terms() const { return m_max - m_min + 1; }
    };

    /// Power-share mass function of the mixture index,
    /// p_p(m) = [nu/(1+nu)] Po(m-1, nu) + [1/(1+nu)] Po(m, nu).
    inline double power_share_pdf(double nu, int m)
    {
        detail::check_non_negative(nu, "nu");
        detail::require(m >= 0, "power_share_pdf index must be >= 0");
        double lower = (m == 0) ? 0.0 : poisson_pmf(m - 1, nu);
        return (nu * lower + poisson_pmf(m, nu)) / (1.0 + nu);
    }

    /// Index window sized from the two-sided normal approximation of the
    /// power-share distribution: m_min = floor(max{0, nu - 1 - Z sqrt(nu)}),
    /// m_max = ceil(nu + Z sqrt(nu)), Z the standard-normal quantile at
    /// 1/2 + alpha_pct/200. nu = 0 collapses to [0, 0].
    inline TruncationBounds truncation_bounds(double nu, double alpha_pct = 99.9)
    {
        detail::check_non_negative(nu, "nu");
        detail::require(alpha_pct > 0.0 && alpha_pct < 100.0,
                        "alpha_pct must lie in (0, 100)");
        if (nu == 0.0)
            return TruncationBounds{0, 0, alpha_pct};
        double z = normal_quantile(0.5 + alpha_pct / 200.0);
        double root = z * std::sqrt(nu);
        double lo = std::floor(std::fmax(0.0, nu - 1.0 - root));
        double hi = std::ceil(nu + root);
        return TruncationBounds{static_cast<int>(lo), static_cast<int>(hi), alpha_pct};
    }

    /// Power-share mass captured by the window.
    inline double retained_power(double nu, const TruncationBounds &bounds)
    {
        double sum = 0.0;
        for (int m = bounds.m_min; m <= bounds.m_max; ++m)
            sum += power_share_pdf(nu, m);
        return sum;
    }

}
