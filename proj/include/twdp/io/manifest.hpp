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

#include <cstdint>
#include <fstream>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "twdp/errors.hpp"
#include "twdp/version.hpp"

namespace twdp
{

    /// Reproducibility record emitted next to every output file: the
    /// subcommand, its fully resolved inputs, the seed when the run is
    /// stochastic, and the tool version.
    struct RunManifest
    {
        std::string command;
        nlohmann::json params_json = nlohmann::json::object();
        std::uint64_t seed = 0;
        bool stochastic = false;
        std::string tool_version = version_string;
    };

    inline nlohmann::json manifest_to_json(const RunManifest &m)
    {
        nlohmann::json j{{"command", m.command},
                         {"params", m.params_json},
                         {"tool_version", m.tool_version}};
        if (m.stochastic)
            j["seed"] = m.seed;
        return j;
    }

    inline RunManifest manifest_from_json(const nlohmann::json &j)
    {
        if (!j.is_object() || !j.contains("command") || !j.contains("params"))
            throw config_error("manifest needs 'command' and 'params' keys");
        RunManifest m;
        m.command = j.at("command").get<std::string>();
        m.params_json = j.at("params");
        m.tool_version = j.value("tool_version", std::string());
        if (j.contains("seed"))
        {
            m.stochastic = true;
            m.seed = j.at("seed").get<std::uint64_t>();
        }
        return m;
    }

    inline void write_manifest(const std::string &path, const RunManifest &m)
    {
        std::ofstream out(path);
        if (!out)
            throw std::runtime_error("cannot open output file: " + path);
        out << manifest_to_json(m).dump(2) << '\n';
        if (!out)
            throw std::runtime_error("failed writing output file: " + path);
    }

    inline RunManifest read_manifest(const std::string &path)
    {
        std::ifstream in(path);
        if (!in)
            throw std::runtime_error("cannot open manifest file: " + path);
        nlohmann::json j;
        try
        {
            in >> j;
        }
        catch (const nlohmann::json::exception &e)
        {
            throw config_error(std::string("manifest is not valid JSON: ") + e.what());
        }
        return manifest_from_json(j);
    }

}
