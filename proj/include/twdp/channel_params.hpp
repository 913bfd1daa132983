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

namespace twdp
{

    /// Normalized channel description: Rician-like factor K, specular ratio
    /// Gamma = v2/v1 in [0, 1], and total power Omega.
    struct NormalizedParams
    {
        double k;
        double gamma;
        double omega;
    };

    /// Immutable two-wave with diffuse power parameter set.
    ///
    /// Physical coordinates are the specular amplitudes v1 >= v2 >= 0, the
    /// half-power sigma2 of the diffuse component (diffuse power is 2 sigma2)
    /// and the dominant-component phase phi1, stored wrapped to (-pi, pi].
    /// sigma2 = 0 is representable only through the degenerate() factory and
    /// is intended for the pure-specular simulator limit; the analytic phase
    /// routines reject it because the density derivation divides by 2 sigma2.
    class ChannelParams
    {
    public:
        static ChannelParams from_physical(double v1, double v2, double sigma2, double phi1)
        {
            validate_amplitudes(v1, v2);
            detail::require(std::isfinite(sigma2) && sigma2 > 0.0,
                            "sigma2 must be positive and finite");
            detail::require(std::isfinite(phi1), "phi1 must be finite");
            return ChannelParams(v1, v2, sigma2, wrap_angle(phi1), false);
        }

        /// Builds from (K, Gamma, Omega): 2 sigma2 = omega/(1+k),
        /// v1^2 = 2 sigma2 k/(1+gamma^2), v2 = gamma v1 so v2 <= v1 exactly.
        static ChannelParams from_normalized(double k, double gamma, double omega, double phi1)
        {
            detail::require(std::isfinite(k) && k >= 0.0, "k must be >= 0 and finite");
            detail::require(std::isfinite(gamma) && gamma >= 0.0 && gamma <= 1.0,
                            "gamma must lie in [0, 1]");
            detail::require(std::isfinite(omega) && omega > 0.0,
                            "omega must be positive and finite");
            detail::require(std::isfinite(phi1), "phi1 must be finite");
            double diffuse = omega / (1.0 + k);
            double v1 = std::sqrt(diffuse * k / (1.0 + gamma * gamma));
            double v2 = gamma * v1;
            return ChannelParams(v1, v2, 0.5 * diffuse, wrap_angle(phi1), false);
        }

        /// Pure-specular limit with no diffuse component. Only the geometric
        /// simulator accepts parameters built this way.
        static ChannelParams degenerate(double v1, double v2, double phi1)
        {
            validate_amplitudes(v1, v2);
            detail::require(v1 > 0.0 || v2 > 0.0,
                            "degenerate channel needs a nonzero specular amplitude");
            detail::require(std::isfinite(phi1), "phi1 must be finite");
            return ChannelParams(v1, v2, 0.0, wrap_angle(phi1), true);
        }

        double v1() const { return v1_; }
        double v2() const { return v2_; }
        double sigma2() const { return sigma2_; }
        double phi1() const { return phi1_; }
        bool is_degenerate() const { return degenerate_; }

        /// Total power v1^2 + v2^2 + 2 sigma2.
        double omega() const { return v1_ * v1_ + v2_ * v2_ + 2.0 * sigma2_; }

        double k() const
        {
            require_diffuse();
            return (v1_ * v1_ + v2_ * v2_) / (2.0 * sigma2_);
        }

        /// Gamma = v2/v1, taken as 0 when v1 = 0 (which forces v2 = 0).
        double gamma() const { return v1_ == 0.0 ? 0.0 : v2_ / v1_; }

        /// nu = v2^2 / (2 sigma2), the weaker-component power ratio.
        double nu() const
        {
            require_diffuse();
            return v2_ * v2_ / (2.0 * sigma2_);
        }

        /// x = v1^2 / (2 sigma2), the stronger-component power ratio.
        double x() const
        {
            require_diffuse();
            return v1_ * v1_ / (2.0 * sigma2_);
        }

        NormalizedParams to_normalized() const
        {
            return NormalizedParams{k(), gamma(), omega()};
        }

        friend bool operator==(const ChannelParams &a, const ChannelParams &b)
        {
            return a.v1_ == b.v1_ && a.v2_ == b.v2_ && a.sigma2_ == b.sigma2_ &&
                   a.phi1_ == b.phi1_ && a.degenerate_ == b.degenerate_;
        }

    private:
        ChannelParams(double v1, double v2, double sigma2, double phi1, bool degenerate)
            : v1_(v1), v2_(v2), sigma2_(sigma2), phi1_(phi1), degenerate_(degenerate)
        {
        }

        static void validate_amplitudes(double v1, double v2)
        {
            detail::require(std::isfinite(v1) && v1 >= 0.0, "v1 must be >= 0 and finite");
            detail::require(std::isfinite(v2) && v2 >= 0.0, "v2 must be >= 0 and finite");
            detail::require(v2 <= v1, "v2 must not exceed v1");
        }

        void require_diffuse() const
        {
            if (degenerate_)
                throw domain_error("operation requires a nonzero diffuse component");
        }

        double v1_;
        double v2_;
        double sigma2_;
        double phi1_;
        bool degenerate_;
    };

}
