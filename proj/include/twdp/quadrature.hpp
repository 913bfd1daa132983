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
#include <queue>
#include <vector>

#include "twdp/errors.hpp"

namespace twdp
{

    struct QuadResult
    {
        double value = 0.0;
        double error_est = 0.0;
        int n_evals = 0;
    };

    namespace detail
    {
        // Gauss-Kronrod 7-15 nodes and weights (positive half, node 7 is zero).
        inline constexpr double gk_nodes[8] = {
            0.991455371120812639206854697526329,
            0.949107912342758524526189684047851,
            0.864864423359769072789712788640926,
            0.741531185599394439863864773280788,
            0.586087235467691130294144838258730,
            0.405845151377397166906606412076961,
            0.207784955007898467600689403773245,
            0.000000000000000000000000000000000};
        inline constexpr double gk_weights[8] = {
            0.022935322010529224963732008058970,
            0.063092092629978553290700663189204,
            0.104790010322250183839876322541518,
            0.140653259715525918745189590510238,
            0.169004726639267902826583426598550,
            0.190350578064785409913256402421014,
            0.204432940075298892414161999234649,
            0.209482141084727828012999174891714};
        inline constexpr double gauss_weights[4] = {
            0.129484966168869693270611432679082,
            0.279705391489276667901467771423780,
            0.381830050505118944950369775488975,
            0.417959183673469387755102040816327};

        struct Panel
        {
            double a, b, value, error;
            bool operator<(const Panel &o) const { return error < o.error; }
        };

        template <class F>
        inline Panel gk15(F &&f, double a, double b)
        {
            double half = 0.5 * (b - a);
            double mid = 0.5 * (a + b);

            double fv[15];
            for (int i = 0; i < 7; ++i)
            {
                fv[i] = f(mid - half * gk_nodes[i]);
                fv[14 - i] = f(mid + half * gk_nodes[i]);
            }
            fv[7] = f(mid);

            double kronrod = 0.0;
            for (int i = 0; i < 7; ++i)
                kronrod += gk_weights[i] * (fv[i] + fv[14 - i]);
            kronrod += gk_weights[7] * fv[7];
            kronrod *= half;

            // Gauss nodes sit at the odd Kronrod indices.
            double gauss = gauss_weights[3] * fv[7];
            for (int i = 0; i < 3; ++i)
                gauss += gauss_weights[i] * (fv[2 * i + 1] + fv[13 - 2 * i]);
            gauss *= half;

            double err = std::fabs(kronrod - gauss);
            // Standard sharpening of the raw difference estimate.
            err = err > 0.0 ? std::pow(200.0 * err, 1.5) : 0.0;
            double scale = std::fabs(kronrod);
            if (scale > 0.0 && err > scale)
                err = scale;
            if (err < std::fabs(kronrod) * 1e-16)
                err = std::fabs(kronrod) * 1e-16;
            return {a, b, kronrod, err};
        }
    }

    /// Adaptive quadrature of f over [a, b]: globally bisects the panel with
    /// the largest error estimate until the total estimate satisfies
    /// max(abs_tol, rel_tol * |integral|). Throws numeric_error carrying the
    /// partial estimate if the panel budget is exhausted.
    template <class F>
    inline QuadResult integrate(F &&f, double a, double b,
                                double abs_tol = 1e-12, double rel_tol = 1e-12,
                                int max_panels = 4000)
    {
        QuadResult res;
        if (a == b)
            return res;

        std::priority_queue<detail::Panel> panels;
        detail::Panel first = detail::gk15(f, a, b);
        res.n_evals = 15;
        double total = first.value;
        double total_err = first.error;
        panels.push(first);

        int used = 1;
        while (total_err > std::max(abs_tol, rel_tol * std::fabs(total)))
        {
            if (used >= max_panels)
                throw numeric_error("adaptive quadrature panel budget exhausted", total);
            if (panels.empty())
                break; // every panel collapsed to machine width

            detail::Panel worst = panels.top();
            panels.pop();
            double mid = 0.5 * (worst.a + worst.b);
            if (mid <= worst.a || mid >= worst.b)
            {
                // Interval narrowed to machine width; accept its contribution as is.
                total_err -= worst.error;
                continue;
            }
            detail::Panel left = detail::gk15(f, worst.a, mid);
            detail::Panel right = detail::gk15(f, mid, worst.b);
            res.n_evals += 30;
            total += left.value + right.value - worst.value;
            total_err += left.error + right.error - worst.error;
            panels.push(left);
            panels.push(right);
            ++used;
        }

        res.value = total;
        res.error_est = total_err;
        return res;
    }

}
