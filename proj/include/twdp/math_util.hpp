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

namespace twdp
{

    inline constexpr double pi = 3.14159265358979323846;
    inline constexpr double two_pi = 2.0 * pi;
    inline constexpr double inv_two_pi = 1.0 / two_pi;
    inline constexpr double inv_pi = 1.0 / pi;
    inline constexpr double sqrt_pi = 1.7724538509055160273;

    /// Wraps an angle to (-pi, pi]. The closed end is +pi.
    inline double wrap_angle(double a)
    {
        double w = std::remainder(a, two_pi); // lands in [-pi, pi]
        return (w <= -pi) ? w + two_pi : w;
    }

    inline double square(double v) { return v * v; }

    /// Compensated accumulator for long sums of mixed-sign terms.
    class KahanSum
    {
      public:
        void add(double term)
        {
            double y = term - carry_;
            double t = sum_ + y;
            carry_ = (t - sum_) - y;
            sum_ = t;
        }

        double value() const { return sum_; }

      private:
        double sum_ = 0.0;
        double carry_ = 0.0;
    };

}
