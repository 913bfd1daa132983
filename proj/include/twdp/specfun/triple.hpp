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

namespace twdp
{

    /// Triple confluent series
    ///     F(X, Y, Z) = sum_{i,n,p >= 0} (i+n)! X^i Y^n Z^p
    ///                  / ( (3/2)_{i+n} (p+i)! i! n! p! )
    /// summed over shells q = i + n + p. Each term is assembled as
    /// exp-of-logs from cached log-factorial and log-Pochhammer tables, which
    /// keeps intermediates bounded even when individual shells are huge and
    /// the alternating first argument cancels them down. Terminates on two
    /// consecutive negligible shells.
    inline double triple_f3_instance(double x, double y, double z,
                                     const SeriesControl &ctl = {})
    {
        ctl.validate();
        detail::require(std::isfinite(x) && std::isfinite(y) && std::isfinite(z),
                        "triple_f3_instance arguments must be finite");

        double lx = (x == 0.0) ? 0.0 : std::log(std::fabs(x));
        double ly = (y == 0.0) ? 0.0 : std::log(std::fabs(y));
        double lz = (z == 0.0) ? 0.0 : std::log(std::fabs(z));
        bool neg_x = x < 0.0;
        bool neg_y = y < 0.0;
        bool neg_z = z < 0.0;

        // lnfact[k] = ln k!, lnpoch[k] = ln (3/2)_k, grown one shell at a time.
        std::vector<double> lnfact{0.0};
        std::vector<double> lnpoch{0.0};

        KahanSum total;
        total.add(1.0); // shell q = 0
        double prev_shell = 1.0;
        for (int q = 1; q < ctl.max_terms; ++q)
        {
            double dq = static_cast<double>(q);
            lnfact.push_back(lnfact.back() + std::log(dq));
            lnpoch.push_back(lnpoch.back() + std::log(dq + 0.5));

            KahanSum shell;
            for (int i = 0; i <= q; ++i)
            {
                if (x == 0.0 && i > 0)
                    break;
                for (int n = 0; n <= q - i; ++n)
                {
                    if (y == 0.0 && n > 0)
                        break;
                    int p = q - i - n;
                    if (z == 0.0 && p > 0)
                        continue;
                    double ln_term = lnfact[static_cast<std::size_t>(i + n)] -
                                     lnpoch[static_cast<std::size_t>(i + n)] -
                                     lnfact[static_cast<std::size_t>(p + i)] -
                                     lnfact[static_cast<std::size_t>(i)] -
                                     lnfact[static_cast<std::size_t>(n)] -
                                     lnfact[static_cast<std::size_t>(p)] +
                                     static_cast<double>(i) * lx +
                                     static_cast<double>(n) * ly +
                                     static_cast<double>(p) * lz;
                    bool neg = (neg_x && (i & 1)) != ((neg_y && (n & 1)) != (neg_z && (p & 1)));
                    double t = std::exp(ln_term);
                    shell.add(neg ? -t : t);
                }
            }
            total.add(shell.value());

            bool this_small = std::fabs(shell.value()) <= ctl.rel_tol * std::fabs(total.value());
            bool prev_small = std::fabs(prev_shell) <= ctl.rel_tol * std::fabs(total.value());
            if (q >= 2 && this_small && prev_small)
                return total.value();
            prev_shell = shell.value();
        }
        throw numeric_error("triple_f3_instance shell summation did not converge",
                            total.value());
    }

}
