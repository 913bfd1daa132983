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
#include <vector>

#include "twdp/errors.hpp"
#include "twdp/math_util.hpp"
#include "twdp/series_control.hpp"
#include "twdp/specfun/gamma.hpp"
#include "twdp/specfun/kummer.hpp"

namespace twdp
{

    /// Terminating Humbert series Phi1(1, -m, 3/2; u, y) for 0 <= u <= 1, y >= 0.
    ///
    /// The textbook k-sum over (-m)_k alternates and cancels catastrophically at
    /// large m, so the evaluation uses the equal-value all-positive form
    ///     sum_{j=0}^{m} C(m,j) (1-u)^{m-j} u^j  M(1, j + 3/2, y) / (2j + 1)
    /// obtained from the one-dimensional integral representation of Phi1 by the
    /// t = 1 - w^2 substitution and a binomial expansion. The Kummer column is
    /// one ascending series at j = m followed by the exact downward recurrence
    /// M(1, b, y) = 1 + (y / b) M(1, b + 1, y).
    inline double humbert_phi1_terminating(int m, double u, double y,
                                           const SeriesControl &ctl = {})
    {
        ctl.validate();
        detail::require(m >= 0, "humbert_phi1_terminating order must be >= 0");
        detail::require(u >= 0.0 && u <= 1.0,
                        "humbert_phi1_terminating first argument must lie in [0, 1]");
        detail::check_non_negative(y, "humbert_phi1_terminating second argument");

        std::vector<double> m1(static_cast<std::size_t>(m) + 1);
        m1[static_cast<std::size_t>(m)] = kummer_m(1.0, static_cast<double>(m) + 1.5, y, ctl);
        for (int j = m - 1; j >= 0; --j)
            m1[static_cast<std::size_t>(j)] =
                1.0 + y / (static_cast<double>(j) + 1.5) * m1[static_cast<std::size_t>(j) + 1];

        if (u == 0.0)
            return m1[0];
        if (u == 1.0)
            return m1[static_cast<std::size_t>(m)] / (2.0 * static_cast<double>(m) + 1.0);

        double ln_u = std::log(u);
        double ln_v = std::log1p(-u);
        double ln_fact_m = ln_gamma(static_cast<double>(m) + 1.0);
        double sum = 0.0;
        for (int j = 0; j <= m; ++j)
        {
            double dj = static_cast<double>(j);
            double ln_binom = ln_fact_m - ln_gamma(dj + 1.0) -
                              ln_gamma(static_cast<double>(m - j) + 1.0);
            double weight = std::exp(ln_binom + dj * ln_u +
                                     static_cast<double>(m - j) * ln_v);
            sum += weight * m1[static_cast<std::size_t>(j)] / (2.0 * dj + 1.0);
        }
        return sum;
    }

    /// Convergence envelope |Phi3(b, c; w, z)| <= exp(2 sqrt|z| + 2|w| + |b w / c|).
    inline double phi3_envelope_bound(double b, double c, double w, double z)
    {
        return std::exp(2.0 * std::sqrt(std::fabs(z)) + 2.0 * std::fabs(w) +
                        std::fabs(b * w / c));
    }

    /// Humbert confluent hypergeometric
    ///     Phi3(b, c; w, z) = sum_{i,n >= 0} (b)_i w^i z^n / ((c)_{i+n} i! n!)
    /// for z >= 0, summed over anti-diagonal shells i + n = q with a
    /// two-consecutive-shell smallness test; terms inside a shell follow the
    /// exact ratio recurrence, so no factorials are formed explicitly.
    inline double humbert_phi3(double b, double c, double w, double z,
                               const SeriesControl &ctl = {})
    {
        ctl.validate();
        detail::require(!detail::is_nonpositive_integer(c),
                        "humbert_phi3 denominator parameter must not be a nonpositive integer");
        detail::check_non_negative(z, "humbert_phi3 second argument");

        if (z == 0.0)
            return kummer_m(b, c, w, ctl);
        if (w == 0.0)
        {
            // Collapses to 0F1(; c; z).
            double term = 1.0;
            double sum = 1.0;
            int small_streak = 0;
            for (int n = 0; n < ctl.max_terms; ++n)
            {
                double dn = static_cast<double>(n);
                term *= z / ((c + dn) * (dn + 1.0));
                sum += term;
                if (std::fabs(term) <= ctl.rel_tol * std::fabs(sum))
                {
                    if (++small_streak >= 2)
                        return sum;
                }
                else
                    small_streak = 0;
            }
            throw numeric_error("humbert_phi3 0F1 reduction did not converge", sum);
        }

        KahanSum total;
        total.add(1.0); // shell q = 0
        double zc = 1.0; // z^q / ((c)_q q!), the i = 0 corner of shell q
        double wc = 1.0; // (b)_q w^q / ((c)_q q!), the i = q corner of shell q
        double prev_shell = 1.0;
        for (int q = 1; q < ctl.max_terms; ++q)
        {
            double dq = static_cast<double>(q);
            zc *= z / ((c + dq - 1.0) * dq);
            wc *= (b + dq - 1.0) * w / ((c + dq - 1.0) * dq);

            // Walk each shell from its larger corner toward the smaller one.
            // Seeding at the small corner is fatal when one argument is many
            // orders below the other: the seed underflows and the walk then
            // reports the whole shell as zero, silently dropping the far
            // corner. Starting high, underflow can only trim terms that are
            // genuinely negligible. The strict comparison keeps the walk on
            // the i = 0 side whenever (b)_q vanishes, so the downward ratio
            // never divides by zero.
            double shell;
            if (std::fabs(wc) > std::fabs(zc))
            {
                double term = wc; // i = q
                shell = term;
                for (int i = q; i >= 1; --i)
                {
                    double di = static_cast<double>(i);
                    term *= di * z / ((b + di - 1.0) * w * (dq - di + 1.0));
                    shell += term;
                }
            }
            else
            {
                double term = zc; // i = 0
                shell = term;
                for (int i = 1; i <= q; ++i)
                {
                    double di = static_cast<double>(i);
                    term *= (b + di - 1.0) * w * (dq - di + 1.0) / (di * z);
                    shell += term;
                }
            }
            total.add(shell);

            bool this_small = std::fabs(shell) <= ctl.rel_tol * std::fabs(total.value());
            bool prev_small = std::fabs(prev_shell) <= ctl.rel_tol * std::fabs(total.value());
            if (q >= 2 && this_small && prev_small)
                return total.value();
            prev_shell = shell;
        }
        throw numeric_error("humbert_phi3 shell summation did not converge", total.value());
    }

}
