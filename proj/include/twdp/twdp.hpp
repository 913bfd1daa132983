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

// Umbrella header for the whole library.

#include "twdp/channel_params.hpp"
#include "twdp/channel_params_json.hpp"
#include "twdp/closed_form.hpp"
#include "twdp/errors.hpp"
#include "twdp/histogram.hpp"
#include "twdp/io/csv.hpp"
#include "twdp/io/manifest.hpp"
#include "twdp/math_util.hpp"
#include "twdp/perf.hpp"
#include "twdp/phase_pdf.hpp"
#include "twdp/quadrature.hpp"
#include "twdp/rng.hpp"
#include "twdp/series_control.hpp"
#include "twdp/simulate.hpp"
#include "twdp/specfun/bessel.hpp"
#include "twdp/specfun/gamma.hpp"
#include "twdp/specfun/humbert.hpp"
#include "twdp/specfun/kummer.hpp"
#include "twdp/specfun/normal.hpp"
#include "twdp/specfun/triple.hpp"
#include "twdp/truncation.hpp"
#include "twdp/version.hpp"
