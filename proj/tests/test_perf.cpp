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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "twdp/channel_params.hpp"
#include "twdp/errors.hpp"
#include "twdp/perf.hpp"
#include "twdp/simulate.hpp"

using Catch::Approx;
using twdp::ChannelParams;

TEST_CASE("uniform phase gives the sector-complement error probability", "[perf]")
{
    ChannelParams u = ChannelParams::from_normalized(0.0, 0.0, 1.0, 0.0);
    CHECK(twdp::pe_mpsk(u, 2) == Approx(0.5).margin(1e-10));
    CHECK(twdp::pe_mpsk(u, 4) == Approx(0.75).margin(1e-10));
    CHECK(twdp::pe_mpsk(u, 8) == Approx(0.875).margin(1e-10));
}

TEST_CASE("single-ray error probability matches the reference quadrature", "[perf]")
{
    CHECK(twdp::pe_mpsk_rician(5.0, 2) == Approx(7.827011290022e-4).epsilon(1e-9));
    for (double k : {1.0, 5.0, 10.0, 20.0})
        for (int m : {2, 4})
        {
            ChannelParams p = ChannelParams::from_normalized(k, 0.0, 1.0, 0.0);
            CHECK(twdp::pe_mpsk(p, m, 1e-10, 99.9999) ==
                  Approx(twdp::pe_mpsk_rician(k, m)).epsilon(1e-8).margin(1e-12));
        }
}

TEST_CASE("error probability decreases with K and grows with order", "[perf]")
{
    double prev = 1.0;
    for (double k : {0.0, 1.0, 3.0, 7.0, 12.0, 20.0})
    {
        ChannelParams p = ChannelParams::from_normalized(k, 0.4, 1.0, 0.0);
        double pe = twdp::pe_mpsk(p, 2);
        CHECK(pe < prev + 1e-12);
        prev = pe;
    }
    ChannelParams p = ChannelParams::from_normalized(5.0, 0.7, 1.0, 0.0);
    CHECK(twdp::pe_mpsk(p, 4) > twdp::pe_mpsk(p, 2));
    CHECK(twdp::pe_mpsk(p, 8) > twdp::pe_mpsk(p, 4));
}

TEST_CASE("error probability requires an aligned reference phase", "[perf]")
{
    ChannelParams tilted = ChannelParams::from_normalized(5.0, 0.4, 1.0, 0.3);
    CHECK_THROWS_AS(twdp::pe_mpsk(tilted, 2), twdp::domain_error);
    ChannelParams p = ChannelParams::from_normalized(5.0, 0.4, 1.0, 0.0);
    CHECK_THROWS_AS(twdp::pe_mpsk(p, 1), twdp::domain_error);
}

TEST_CASE("curve evaluation covers the requested grid in order", "[perf]")
{
    std::vector<double> grid{0.0, 2.0, 5.0, 9.0};
    twdp::PeCurve c = twdp::pe_curve(0.4, 1.0, 2, grid);
    REQUIRE(c.pe_values.size() == grid.size());
    CHECK(c.pe_values.front() == Approx(0.5).margin(1e-10));
    for (std::size_t i = 1; i < c.pe_values.size(); ++i)
        CHECK(c.pe_values[i] <= c.pe_values[i - 1]);
    CHECK_THROWS_AS(twdp::pe_curve(0.4, 1.0, 2, {3.0, 1.0}), twdp::domain_error);
    CHECK_THROWS_AS(twdp::pe_curve(0.4, 1.0, 2, {}), twdp::domain_error);
}

TEST_CASE("Monte Carlo error estimate brackets the quadrature value", "[perf]")
{
    ChannelParams p = ChannelParams::from_normalized(3.0, 0.5, 1.0, 0.0);
    twdp::McConfig cfg{p, 1000000, 9, 256};
    double mc = twdp::pe_monte_carlo(cfg, 4);
    double exact = twdp::pe_mpsk(p, 4);
    double sigma = std::sqrt(exact * (1.0 - exact) / static_cast<double>(cfg.n_samples));
    CHECK(std::fabs(mc - exact) < 4.0 * sigma);

    // Deterministic under a fixed seed.
    CHECK(twdp::pe_monte_carlo(cfg, 4) == mc);
}
