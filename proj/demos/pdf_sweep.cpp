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

// Sweeps the conditional phase density over a K grid for several specular
// ratios and writes one CSV per ratio, ready for plotting.

#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "twdp/twdp.hpp"

int main()
{
    try
    {
        const double omega = 1.0;
        const std::vector<double> gammas = {0.0, 0.3, 0.7, 1.0};
        const std::vector<double> ks = {0.0, 1.0, 5.0, 10.0, 15.0};
        const int n_grid = 361;

        for (double gamma : gammas)
        {
            std::vector<twdp::PhasePdfSpec> specs;
            std::vector<std::string> columns = {"phi_rad"};
            for (double k : ks)
            {
                auto params = twdp::ChannelParams::from_normalized(k, gamma, omega, 0.0);
                specs.push_back(twdp::make_phase_pdf_spec(params));
                columns.push_back("K=" + twdp::format_g17(k));
            }

            char name[64];
            std::snprintf(name, sizeof(name), "pdf_gamma_%g.csv", gamma);
            twdp::CsvWriter csv(name, columns);
            for (int i = 0; i < n_grid; ++i)
            {
                double phi = -twdp::pi +
                             twdp::two_pi * (static_cast<double>(i) + 1.0) /
                                 static_cast<double>(n_grid);
                std::vector<std::string> row = {twdp::format_g17(phi)};
                for (const auto &spec : specs)
                    row.push_back(twdp::format_g17(twdp::phase_pdf(spec, phi)));
                csv.row(row);
            }
            csv.close();
            std::printf("wrote %s\n", name);
        }
        return 0;
    }
    catch (const std::exception &e)
    {
        std::fprintf(stderr, "pdf_sweep failed: %s\n", e.what());
        return 1;
    }
}
