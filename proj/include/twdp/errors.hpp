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

#include <stdexcept>
#include <string>

namespace twdp
{

    /// Raised when an argument lies outside the mathematical domain of an operation.
    class domain_error : public std::invalid_argument
    {
      public:
        using std::invalid_argument::invalid_argument;
    };

    /// Raised when a simulation configuration is structurally invalid
    /// (for example a geometry degeneracy), as opposed to a single bad scalar.
    class config_error : public domain_error
    {
      public:
        using domain_error::domain_error;
    };

    /// Raised when an iterative evaluation fails to converge within its budget.
    /// Carries the partial estimate accumulated before giving up.
    class numeric_error : public std::runtime_error
    {
      public:
        numeric_error(const std::string &what, double partial_estimate)
            : std::runtime_error(what), partial_estimate_(partial_estimate) {}

        double partial_estimate() const noexcept { return partial_estimate_; }

      private:
        double partial_estimate_;
    };

    namespace detail
    {
        inline void require(bool condition, const char *message)
        {
            if (!condition)
                throw domain_error(message);
        }

        inline void check_non_negative(double value, const char *name)
        {
            if (!(value >= 0.0))
                throw domain_error(std::string(name) + " must be non-negative");
        }

        inline void check_positive(double value, const char *name)
        {
            if (!(value > 0.0))
                throw domain_error(std::string(name) + " must be positive");
        }
    }

}
