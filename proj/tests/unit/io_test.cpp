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

#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <cstring>
#include <random>
#include <set>
#include <sstream>

#include "flowlab/errors.hpp"
#include "flowlab/io.hpp"
#include "json.hpp"

namespace {

using namespace flowlab;
using io::Cell;

TEST(Csv, HeaderOnlyForEmptyTable) {
  io::Table t;
  t.header = {"two_j", "t", "R", "kappa_minus", "kappa_plus"};
  EXPECT_EQ(io::to_csv(t), "two_j,t,R,kappa_minus,kappa_plus\n");
}

TEST(Csv, QuotingAndLineEndings) {
  io::Table t;
  t.header = {"key", "value"};
  t.add_row({std::string("a,b"), std::string("say \"hi\"")});
  t.add_row({std::string("plain"), std::int64_t{-3}});
  const std::string csv = io::to_csv(t);
  EXPECT_EQ(csv, "key,value\n\"a,b\",\"say \"\"hi\"\"\"\nplain,-3\n");
  EXPECT_EQ(csv.find('\r'), std::string::npos);
  const auto rows = io::parse_csv(csv);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0][0], "a,b");
  EXPECT_EQ(rows[0][1], "say \"hi\"");
}

TEST(Csv, RowWidthChecked) {
  io::Table t;
  t.header = {"a", "b"};
  EXPECT_THROW(t.add_row({std::int64_t{1}}), Error);
}

TEST(Csv, SeventeenDigitRoundTrip) {
  std::mt19937_64 rng(12345);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  io::Table t;
  t.header = {"x"};
  std::vector<double> xs{0.1, -1.0 / 3.0, 1e-300, 6.02214076e23, -0.0, 5e-324};
  for (int k = 0; k < 500; ++k) xs.push_back(u(rng) * std::pow(10.0, static_cast<int>(u(rng) * 30)));
  for (double x : xs) t.add_row({x});
  const auto rows = io::parse_csv(io::to_csv(t));
  ASSERT_EQ(rows.size(), xs.size());
  for (std::size_t k = 0; k < xs.size(); ++k) {
    const double back = std::strtod(rows[k][0].c_str(), nullptr);
    EXPECT_EQ(std::memcmp(&back, &xs[k], sizeof(double)), 0) << rows[k][0];
  }
  EXPECT_EQ(io::format_double(0.1), "0.10000000000000001");
}

TEST(Json, MirrorsCsvSchema) {
  io::Table t;
  t.header = {"N", "alpha", "below", "above"};
  t.add_row({std::int64_t{14}, 1.0 / 15.0, std::int64_t{29}, std::int64_t{29}});
  const auto j = nlohmann::json::parse(io::to_json(t));
  ASSERT_TRUE(j.is_array());
  ASSERT_EQ(j.size(), 1u);
  EXPECT_EQ(j[0]["N"], 14);
  EXPECT_EQ(j[0]["alpha"].get<double>(), 1.0 / 15.0);
  EXPECT_EQ(j[0]["below"], 29);
  std::vector<std::string> keys;
  for (auto it = j[0].begin(); it != j[0].end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys.size(), 4u);
}

TEST(WriteFile, ReportsPath) {
  try {
    io::write_file("/nonexistent-dir/out.csv", "x");
    FAIL() << "expected IoError";
  } catch (const IoError& e) {
    EXPECT_NE(std::string(e.what()).find("/nonexistent-dir/out.csv"), std::string::npos);
  }
}

diracdisk::SpectrumBranch branch(std::vector<std::pair<double, double>> pts, diracdisk::StateClass c) {
  diracdisk::SpectrumBranch b;
  for (auto [t, e] : pts) b.points.push_back({t, e, c});
  return b;
}

TEST(Plot, ConstantBranchIsHorizontalPolyline) {
  const auto b = branch({{-1.0, 2.0}, {0.0, 2.0}, {1.0, 2.0}}, diracdisk::StateClass::regular);
  const std::string svg = io::plot_svg(std::vector{b});
  const auto start = svg.find("<polyline class=\"regular\"");
  ASSERT_NE(start, std::string::npos);
  const auto p0 = svg.find("points=\"", start) + 8;
  const std::string pts = svg.substr(p0, svg.find('"', p0) - p0);
  std::istringstream in(pts);
  std::string pair;
  std::set<std::string> ys;
  int count = 0;
  while (in >> pair) {
    ys.insert(pair.substr(pair.find(',') + 1));
    ++count;
  }
  EXPECT_EQ(count, 3);
  EXPECT_EQ(ys.size(), 1u);
}

TEST(Plot, EdgeStyledDistinctlyAndDeterministic) {
  std::vector<diracdisk::SpectrumBranch> bs{
      branch({{-1.0, 0.3}, {0.0, 0.0}, {1.0, -0.3}}, diracdisk::StateClass::edge),
      branch({{-1.0, 5.0}, {0.0, 4.8}, {1.0, 5.0}}, diracdisk::StateClass::regular)};
  bs[0].points[1].state_class = diracdisk::StateClass::zero_mode;
  const std::string a = io::plot_svg(bs, {800, 600, "E(t)"});
  const std::string b = io::plot_svg(bs, {800, 600, "E(t)"});
  EXPECT_EQ(a, b);
  EXPECT_NE(a.find("class=\"edge\""), std::string::npos);
  EXPECT_NE(a.find("class=\"regular\""), std::string::npos);
  EXPECT_EQ(a.rfind("<svg", 0), std::string::npos);
  EXPECT_NE(a.find("<svg xmlns=\"http://www.w3.org/2000/svg\""), std::string::npos);
  EXPECT_NE(a.find("</svg>"), std::string::npos);
  EXPECT_THROW(io::plot_svg(std::vector<diracdisk::SpectrumBranch>{}), DomainError);
}

}  // namespace
