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

#include "twdp/errors.hpp"
#include "twdp/math_util.hpp"

namespace twdp
{

    /// Uniform-bin count histogram over the angle interval (-pi, pi].
    /// Bins are right-open except the last, which closes at pi so that the
    /// interval's included endpoint has a home.
    class PhaseHistogram
    {
    public:
        explicit PhaseHistogram(int n_bins)
            : counts_(static_cast<std::size_t>(n_bins), 0), total_(0)
        {
            detail::require(n_bins >= 2, "histogram needs at least 2 bins");
        }

        int n_bins() const { return static_cast<int>(counts_.size()); }
        double bin_width() const { return two_pi / static_cast<double>(counts_.size()); }
        double bin_left(int i) const { return -pi + bin_width() * static_cast<double>(i); }
        double bin_right(int i) const { return -pi + bin_width() * static_cast<double>(i + 1); }
        double bin_center(int i) const { return -pi + bin_width() * (static_cast<double>(i) + 0.5); }

        /// phi must already lie in (-pi, pi].
        void add(double phi)
        {
            int idx = static_cast<int>(std::floor((phi + pi) / bin_width()));
            if (idx < 0)
                idx = 0;
            if (idx >= n_bins())
                idx = n_bins() - 1;
            ++counts_[static_cast<std::size_t>(idx)];
            ++total_;
        }

        /// Deterministic reduction step for blockwise accumulation.
        void merge(const PhaseHistogram &other)
        {
            detail::require(other.n_bins() == n_bins(), "histogram bin counts differ");
            for (std::size_t i = 0; i < counts_.size(); ++i)
                counts_[i] += other.counts_[i];
            total_ += other.total_;
        }

        std::uint64_t total() const { return total_; }
        std::uint64_t count(int i) const { return counts_[static_cast<std::size_t>(i)]; }
        const std::vector<std::uint64_t> &counts() const { return counts_; }

        /// Density estimate count / (total * width); integrates to 1 exactly.
        double density(int i) const
        {
            if (total_ == 0)
                return 0.0;
            return static_cast<double>(counts_[static_cast<std::size_t>(i)]) /
                   (static_cast<double>(total_) * bin_width());
        }

        std::vector<double> densities() const
        {
            std::vector<double> out(counts_.size());
            for (int i = 0; i < n_bins(); ++i)
                out[static_cast<std::size_t>(i)] = density(i);
            return out;
        }

    private:
        std::vector<std::uint64_t> counts_;
        std::uint64_t total_;
    };

}
