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

#include <nlohmann/json.hpp>

#include "twdp/channel_params.hpp"
#include "twdp/errors.hpp"

namespace twdp
{

    /// Serializes in physical form. The degenerate flag is emitted only when set.
    inline nlohmann::json channel_params_to_json(const ChannelParams &p)
    {
        nlohmann::json j{{"v1", p.v1()},
                         {"v2", p.v2()},
                         {"sigma2", p.sigma2()},
                         {"phi1", p.phi1()}};
        if (p.is_degenerate())
            j["degenerate"] = true;
        return j;
    }

    namespace detail
    {
        inline double json_number(const nlohmann::json &j, const char *key)
        {
            if (!j.contains(key))
                throw config_error(std::string("missing channel parameter key: ") + key);
            const auto &v = j.at(key);
            if (!v.is_number())
                throw config_error(std::string("channel parameter must be a number: ") + key);
            return v.get<double>();
        }

        inline double json_number_or(const nlohmann::json &j, const char *key, double fallback)
        {
            return j.contains(key) ? json_number(j, key) : fallback;
        }
    }

    /// Accepts either the physical key set {"v1","v2","sigma2","phi1"} or the
    /// normalized set {"K","Gamma","Omega","Phi1"}. The phase key may be
    /// omitted and defaults to 0. A true "degenerate" flag routes physical
    /// input through the pure-specular factory.
    inline ChannelParams channel_params_from_json(const nlohmann::json &j)
    {
        if (!j.is_object())
            throw config_error("channel parameters must be a JSON object");
        bool physical = j.contains("v1") || j.contains("v2") || j.contains("sigma2");
        bool normalized = j.contains("K") || j.contains("Gamma") || j.contains("Omega");
        if (physical && normalized)
            throw config_error("channel parameters mix physical and normalized keys");
        if (!physical && !normalized)
            throw config_error("channel parameters need either {v1,v2,sigma2} or {K,Gamma,Omega}");

        try
        {
            if (physical)
            {
                double v1 = detail::json_number(j, "v1");
                double v2 = detail::json_number(j, "v2");
                double phi1 = detail::json_number_or(j, "phi1", 0.0);
                if (j.value("degenerate", false))
                    return ChannelParams::degenerate(v1, v2, phi1);
                double sigma2 = detail::json_number(j, "sigma2");
                return ChannelParams::from_physical(v1, v2, sigma2, phi1);
            }
            double k = detail::json_number(j, "K");
            double gamma = detail::json_number(j, "Gamma");
            double omega = detail::json_number(j, "Omega");
            double phi1 = detail::json_number_or(j, "Phi1", 0.0);
            return ChannelParams::from_normalized(k, gamma, omega, phi1);
        }
        catch (const domain_error &e)
        {
            throw config_error(std::string("invalid channel parameters: ") + e.what());
        }
    }

}
