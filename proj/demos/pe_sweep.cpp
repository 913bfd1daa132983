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

// Tabulates the M-PSK phase-sync error probability against K for a family of
// modulation orders at a fixed specular ratio.

#include <cstdio>
#include <exception>
#include <vector>

#include "twdp/twdp.hpp"

int main()
{
    try
    {
        const double gamma = 0.4;
        const double omega = 1.0;
        const std::vector<int> orders = {2, 4, 8, 16};
        std::vector<double> k_grid;
        for (int k = 0; k <= 20; ++k)
            k_grid.push_back(static_cast<double>(k));

        for (int m : orders)
        {
            twdp::PeCurve curve = twdp::pe_curve(gamma, omega, m, k_grid);

            char name[64];
            std::snprintf(name, sizeof(name), "pe_m%d.csv", m);
            twdp::CsvWriter csv(name, {"K", "Pe"});
            for (std::size_t i = 0; i < curve.k_grid.size(); ++i)
                csv.row({twdp::format_g17(curve.k_grid[i]),
                         twdp::format_g17(curve.pe_values[i])});
            csv.close();

            char meta[64];
            std::snprintf(meta, sizeof(meta), "pe_m%d.json", m);
            twdp::RunManifest manifest;
            manifest.command = "pe_sweep";
            manifest.params_json = {{"gamma", curve.gamma},
                                    {"omega", curve.omega},
                                    {"M", curve.m_order},
                                    {"alpha_pct", curve.alpha_pct}};
            twdp::write_manifest(meta, manifest);
            std::printf("wrote %s (+ %s)\n", name, meta);
        }
        return 0;
    }
    catch (const std::exception &e)
    {
        std::fprintf(stderr, "pe_sweep failed: %s\n", e.what());
        return 1;
    }
}
