// Copyright 2026 The flowlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FLOWLAB_IO_HPP_
#define FLOWLAB_IO_HPP_

// Flat-file serialization: CSV (RFC 4180 quoting, LF line endings, 17
// significant digits), JSON arrays of records mirroring the CSV schemas, and
// deterministic SVG plots of spectrum branches.

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "flowlab/diracdisk.hpp"

namespace flowlab::io {

using Cell = std::variant<std::int64_t, double, std::string>;

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;

  // Throws Error if the row width differs from the header.
  void add_row(std::vector<Cell> row);
};

// "%.17g" with '.' as the decimal separator regardless of locale.
std::string format_double(double x);

std::string to_csv(const Table& table);
std::string to_json(const Table& table);

// Parses CSV produced by to_csv back into rows of strings (header excluded).
std::vector<std::vector<std::string>> parse_csv(const std::string& text);

// Writes text to path; throws IoError with the path on failure.
void write_file(const std::string& path, const std::string& text);

struct PlotStyle {
  int width = 800;
  int height = 600;
  std::string title;
};

// Self-contained SVG of E against t. Edge and zero-mode segments are drawn in
// black, regular segments in green. Throws DomainError for an empty list.
std::string plot_svg(std::span<const diracdisk::SpectrumBranch> branches, const PlotStyle& style = {});

}  // namespace flowlab::io

#endif  // FLOWLAB_IO_HPP_
