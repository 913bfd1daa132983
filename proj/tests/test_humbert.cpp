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

#include "oracles.hpp"
#include "twdp/errors.hpp"
#include "twdp/specfun/humbert.hpp"
#include "twdp/specfun/kummer.hpp"

using Catch::Approx;

TEST_CASE("terminating Phi1 instance matches the raw double series", "[humbert]")
{
    // The raw series alternates in its terminating index and loses digits as
    // m and y grow, so the oracle referees the well-conditioned region only;
    // larger m is covered by the endpoint identities below and by the
    // plane-integral density oracle in the phase-PDF tests.
    for (int m : {0, 1, 2, 5, 8, 10})
        for (double u : {0.0, 0.2, 0.5, 0.85, 1.0})
            for (double y : {0.0, 0.3, 2.0, 12.0})
                CHECK(twdp::humbert_phi1_terminating(m, u, y) ==
                      Approx(oracle::phi1_double_series(m, u, y)).epsilon(1e-9));
    for (int m : {0, 1, 3})
        for (double u : {0.4, 1.0})
            CHECK(twdp::humbert_phi1_terminating(m, u, 60.0) ==
                  Approx(oracle::phi1_double_series(m, u, 60.0)).epsilon(1e-8));
}

TEST_CASE("terminating Phi1 instance matches the one-index alternating sum",
          "[humbert]")
{
    for (int m : {0, 1, 2, 4, 7, 10})
        for (double u : {0.1, 0.5, 0.9})
            for (double y : {0.5, 5.0})
                CHECK(twdp::humbert_phi1_terminating(m, u, y) ==
                      Approx(oracle::phi1_literal_ksum(m, u, y)).epsilon(1e-7));
}

TEST_CASE("Phi1 endpoint reductions", "[humbert]")
{
    // u = 0 leaves only the i = 0 column, M(1, 3/2, y); u = 1 collapses the
    // binomial mixing to the top column.
    for (int m : {0, 3, 17})
        for (double y : {0.0, 1.0, 40.0})
        {
            CHECK(twdp::humbert_phi1_terminating(m, 0.0, y) ==
                  Approx(twdp::kummer_m(1.0, 1.5, y)).epsilon(1e-13));
            CHECK(twdp::humbert_phi1_terminating(m, 1.0, y) ==
                  Approx(twdp::kummer_m(1.0, m + 1.5, y) / (2.0 * m + 1.0))
                      .epsilon(1e-13));
        }
}

TEST_CASE("Phi1 rejects invalid mixing arguments", "[humbert]")
{
    CHECK_THROWS_AS(twdp::humbert_phi1_terminating(3, -0.1, 1.0), twdp::domain_error);
    CHECK_THROWS_AS(twdp::humbert_phi1_terminating(3, 1.1, 1.0), twdp::domain_error);
    CHECK_THROWS_AS(twdp::humbert_phi1_terminating(-1, 0.5, 1.0), twdp::domain_error);
}

TEST_CASE("Phi3 matches the brute-force double series", "[humbert]")
{
    for (double b : {0.5, 1.0})
        for (double c : {1.0, 2.0})
            for (double w : {0.0, 0.4, 3.0, 12.0})
                for (double z : {0.0, 0.8, 6.0, 30.0})
                    CHECK(twdp::humbert_phi3(b, c, w, z) ==
                          Approx(oracle::phi3_brute(b, c, w, z)).epsilon(1e-10));
}

TEST_CASE("Phi3 axis reductions", "[humbert]")
{
    // z = 0 leaves the Kummer series in w; w = 0 leaves a 0F1-type series in z.
    for (double w : {0.3, 2.0, 9.0})
        CHECK(twdp::humbert_phi3(1.0, 2.0, w, 0.0) ==
              Approx(twdp::kummer_m(1.0, 2.0, w)).epsilon(1e-13));
    for (double z : {0.5, 4.0, 20.0})
    {
        double sum = 0.0;
        double term = 1.0;
        for (int n = 0; n < 200; ++n)
        {
            sum += term;
            term *= z / ((2.0 + n) * (n + 1.0));
        }
        CHECK(twdp::humbert_phi3(1.0, 2.0, 0.0, z) == Approx(sum).epsilon(1e-13));
    }
    CHECK(twdp::humbert_phi3(0.5, 1.0, 0.0, 0.0) == 1.0);
}

TEST_CASE("Phi3 envelope bound holds", "[humbert]")
{
    for (double w : {0.5, 5.0, 20.0})
        for (double z : {0.5, 10.0, 80.0})
        {
            double v = twdp::humbert_phi3(0.5, 1.0, w, z);
            CHECK(std::fabs(v) <= twdp::phi3_envelope_bound(0.5, 1.0, w, z));
        }
}

TEST_CASE("Phi3 rejects unsupported parameters", "[humbert]")
{
    CHECK_THROWS_AS(twdp::humbert_phi3(1.0, 0.0, 1.0, 1.0), twdp::domain_error);
    CHECK_THROWS_AS(twdp::humbert_phi3(1.0, -2.0, 1.0, 1.0), twdp::domain_error);
    CHECK_THROWS_AS(twdp::humbert_phi3(1.0, 2.0, 1.0, -0.5), twdp::domain_error);
}

TEST_CASE("Phi3 shell walk survives a vanishing argument", "[humbert]")
{
    // When one argument sits many orders of magnitude below the other, the
    // value must glide onto the corresponding axis reduction instead of
    // losing whole shells to an underflowed corner seed.
    double m_ref = twdp::kummer_m(0.5, 1.0, 5.0);
    CHECK(twdp::humbert_phi3(0.5, 1.0, 5.0, 3.75e-31) == Approx(m_ref).epsilon(1e-13));
    CHECK(twdp::humbert_phi3(0.5, 1.0, 5.0, 2.5e-15) == Approx(m_ref).epsilon(1e-12));
    CHECK(twdp::humbert_phi3(1.0, 2.0, 20.0, 1e-40) ==
          Approx(twdp::kummer_m(1.0, 2.0, 20.0)).epsilon(1e-13));
    double f01_ref = twdp::humbert_phi3(0.5, 1.0, 0.0, 5.0);
    CHECK(twdp::humbert_phi3(0.5, 1.0, 1e-30, 5.0) == Approx(f01_ref).epsilon(1e-13));
    CHECK(twdp::humbert_phi3(0.5, 1.0, 1e-12, 40.0) ==
          Approx(twdp::humbert_phi3(0.5, 1.0, 0.0, 40.0)).epsilon(1e-11));
    // A moderately small argument still has to carry its genuine correction.
    CHECK(twdp::humbert_phi3(0.5, 1.0, 5.0, 1e-6) ==
          Approx(oracle::phi3_brute(0.5, 1.0, 5.0, 1e-6)).epsilon(1e-10));
}
