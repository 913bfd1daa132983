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

#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "twdp/errors.hpp"

namespace twdp
{

    /// Shortest representation that round-trips a double exactly.
    inline std::string format_g17(double v)
    {
        char buf[40];
        std::snprintf(buf, sizeof(buf), "%.17g", v);
        return buf;
    }

    /// Header-first CSV emitter with fixed column count per file.
    class CsvWriter
    {
    public:
        CsvWriter(const std::string &path, const std::vector<std::string> &columns)
            : out_(path), path_(path), n_columns_(columns.size())
        {
            if (!out_)
                throw std::runtime_error("cannot open output file: " + path);
            detail::require(!columns.empty(), "CSV needs at least one column");
            write_cells(columns);
        }

        static std::string cell(double v) { return format_g17(v); }
        static std::string cell(int v) { return std::to_string(v); }
        static std::string cell(long long v) { return std::to_string(v); }
        static std::string cell(unsigned long long v) { return std::to_string(v); }

        void row(const std::vector<std::string> &cells)
        {
            detail::require(cells.size() == n_columns_, "CSV row width mismatch");
            write_cells(cells);
        }

        void close()
        {
            out_.close();
            if (out_.fail())
                throw std::runtime_error("failed writing output file: " + path_);
        }

    private:
        void write_cells(const std::vector<std::string> &cells)
        {
            for (std::size_t i = 0; i < cells.size(); ++i)
            {
                if (i)
                    out_ << ',';
                out_ << cells[i];
            }
            out_ << '\n';
            if (!out_)
                throw std::runtime_error("failed writing output file: " + path_);
        }

        std::ofstream out_;
        std::string path_;
        std::size_t n_columns_;
    };

}
