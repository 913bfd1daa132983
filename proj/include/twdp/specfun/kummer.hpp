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
#include "twdp/math_util.hpp"
#include "twdp/series_control.hpp"
#include "twdp/specfun/gamma.hpp"

namespace twdp
{

    namespace detail
    {
        inline bool is_nonpositive_integer(double v)
        {
            return v <= 0.0 && v == std::floor(v);
        }

        // Largest Kummer argument accepted by the ascending series. The
        // evaluation itself stays finite well beyond the model's parameter
        // ranges; the guard only keeps exp() clear of overflow.
        inline constexpr double kummer_arg_guard = 700.0;
    }

    /// Kummer confluent hypergeometric M(a, b, y) by its ascending series.
    /// b must not be a nonpositive integer. Intended for the moderate positive
    /// arguments this library produces; |y| above the overflow guard is rejected.
    inline double kummer_m(double a, double b, double y, const SeriesControl &ctl = {})
    {
        ctl.validate();
        detail::require(!detail::is_nonpositive_integer(b),
                        "kummer_m second parameter must not be a nonpositive integer");
        detail::require(std::fabs(y) <= detail::kummer_arg_guard,
                        "kummer_m argument exceeds the overflow guard");

        double term = 1.0;
        double sum = 1.0;
        int small_streak = 0;
        for (int n = 0; n < ctl.max_terms; ++n)
        {
            double dn = static_cast<double>(n);
            term *= (a + dn) / (b + dn) * y / (dn + 1.0);
            sum += term;
            if (std::fabs(term) <= ctl.rel_tol * std::fabs(sum))
            {
                if (++small_streak >= 2)
                    return sum;
            }
            else
            {
                small_streak = 0;
            }
        }
        throw numeric_error("kummer_m series did not converge within budget", sum);
    }

    /// The polynomial factor M(-m, 1/2 - m, z) of U(1/2, m + 3/2, z).
    /// All series terms are positive, the recurrence is
    /// t_{k+1} = t_k * z (m - k) / ((m - k - 1/2)(k + 1)); degree m in z.
    inline double tricomi_u_half_poly(int m, double z)
    {
        detail::require(m >= 0, "tricomi_u_half_poly order must be >= 0");
        detail::check_non_negative(z, "tricomi_u_half_poly argument");
        double term = 1.0;
        double sum = 1.0;
        for (int k = 0; k < m; ++k)
        {
            double rem = static_cast<double>(m - k);
            term *= z * rem / ((rem - 0.5) * (static_cast<double>(k) + 1.0));
            sum += term;
        }
        return sum;
    }

    /// ln of tricomi_u_half_poly(m, z); rescales on the fly so that large m
    /// and z stay clear of double overflow. All terms are positive.
    inline double ln_tricomi_u_half_poly(int m, double z)
    {
        detail::require(m >= 0, "ln_tricomi_u_half_poly order must be >= 0");
        detail::check_non_negative(z, "ln_tricomi_u_half_poly argument");
        double term = 1.0;
        double sum = 1.0;
        double ln_scale = 0.0;
        for (int k = 0; k < m; ++k)
        {
            double rem = static_cast<double>(m - k);
            term *= z * rem / ((rem - 0.5) * (static_cast<double>(k) + 1.0));
            sum += term;
            if (sum > 1e280)
            {
                ln_scale += std::log(sum);
                term /= sum;
                sum = 1.0;
            }
        }
        return ln_scale + std::log(sum);
    }

    /// Tricomi confluent hypergeometric U(a, b, z) for the two parameter
    /// families this model needs:
    ///   a = 1,   b = m + 2   (integer b >= 2):
    ///       U = m! z^{-(m+1)} sum_{k<=m} z^k / k!
    ///   a = 1/2, b = m + 3/2 (half-integer b >= 3/2):
    ///       U = Gamma(m + 1/2) / sqrt(pi) * z^{-(m+1/2)} * M(-m, 1/2 - m, z)
    /// Both forms are exact finite sums with positive terms; the first follows
    /// from the incomplete-gamma connection of U(1, n, z), the second from the
    /// Kummer transformation of the terminating companion solution.
    inline double tricomi_u(double a, double b, double z, const SeriesControl &ctl = {})
    {
        ctl.validate();
        detail::check_positive(z, "tricomi_u argument");
        detail::require(b > 0.0, "tricomi_u second parameter must be > 0");
        detail::require(std::fabs(z) <= detail::kummer_arg_guard,
                        "tricomi_u argument exceeds the overflow guard");

        if (a == 1.0)
        {
            double md = b - 2.0;
            detail::require(md >= 0.0 && std::fabs(md - std::round(md)) < 1e-9,
                            "tricomi_u with a = 1 needs integer b >= 2");
            int m = static_cast<int>(std::round(md));
            double term = 1.0;
            double sum = 1.0;
            for (int k = 1; k <= m; ++k)
            {
                term *= z / static_cast<double>(k);
                sum += term;
            }
            double ln_u = ln_gamma(static_cast<double>(m) + 1.0) -
                          (static_cast<double>(m) + 1.0) * std::log(z) + std::log(sum);
            if (ln_u > 709.0)
                throw numeric_error("tricomi_u overflows double range", ln_u);
            return std::exp(ln_u);
        }

        if (a == 0.5)
        {
            double md = b - 1.5;
            detail::require(md >= 0.0 && std::fabs(md - std::round(md)) < 1e-9,
                            "tricomi_u with a = 1/2 needs b = m + 3/2");
            int m = static_cast<int>(std::round(md));
            double ln_u = ln_gamma(static_cast<double>(m) + 0.5) - std::log(sqrt_pi) -
                          (static_cast<double>(m) + 0.5) * std::log(z) +
                          ln_tricomi_u_half_poly(m, z);
            if (ln_u > 709.0)
                throw numeric_error("tricomi_u overflows double range", ln_u);
            return std::exp(ln_u);
        }

        throw domain_error("tricomi_u supports a = 1/2 and a = 1 only");
    }

}
