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

#include "twdp/errors.hpp"

namespace twdp
{

    /// Truncation policy shared by all series evaluators.
    /// rel_tol governs the term-ratio stopping test, max_terms caps the
    /// number of summed terms per summation index.
    struct SeriesControl
    {
        double rel_tol = 1e-14;
        int max_terms = 10000;

        void validate() const
        {
            detail::require(rel_tol > 0.0, "SeriesControl.rel_tol must be > 0");
            detail::require(max_terms >= 1, "SeriesControl.max_terms must be >= 1");
        }
    };

}
