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

#include "flowlab/io.hpp"

#include <algorithm>
#include <array>
#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"

#include "flowlab/errors.hpp"

namespace flowlab::io {
namespace {

std::string cell_text(const Cell& c) {
  if (const auto* i = std::get_if<std::int64_t>(&c)) return std::to_string(*i);
  if (const auto* d = std::get_if<double>(&c)) return format_double(*d);
  return std::get<std::string>(c);
}

std::string quote_csv(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

void append_line(std::string& out, const std::vector<std::string>& fields) {
  for (std::size_t k = 0; k < fields.size(); ++k) {
    if (k > 0) out += ',';
    out += quote_csv(fields[k]);
  }
  out += '\n';
}

std::string fixed(double x) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x, std::chars_format::fixed, 2);
  return std::string(buf.data(), res.ptr);
}

// Tick positions at a 1-2-5 step covering [lo, hi].
std::vector<double> ticks(double lo, double hi) {
  const double span = hi - lo;
  const double raw = span / 6.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  double step = mag;
  for (double m : {1.0, 2.0, 5.0, 10.0}) {
    if (m * mag >= raw) {
      step = m * mag;
      break;
    }
  }
  std::vector<double> out;
  for (double v = std::ceil(lo / step) * step; v <= hi + 1e-9 * span; v += step) {
    out.push_back(std::fabs(v) < 1e-12 * span ? 0.0 : v);
  }
  return out;
}

std::string tick_label(double v) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 6);
  return std::string(buf.data(), res.ptr);
}

std::string escape_xml(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out += ch;
    }
  }
  return out;
}

}  // namespace

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != header.size()) {
    throw Error("table row has " + std::to_string(row.size()) + " fields, header has " +
                std::to_string(header.size()));
  }
  rows.push_back(std::move(row));
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x, std::chars_format::general, 17);
  return std::string(buf.data(), res.ptr);
}

std::string to_csv(const Table& table) {
  std::string out;
  append_line(out, table.header);
  std::vector<std::string> fields;
  for (const auto& row : table.rows) {
    fields.clear();
    for (const Cell& c : row) fields.push_back(cell_text(c));
    append_line(out, fields);
  }
  return out;
}

std::string to_json(const Table& table) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t k = 0; k < row.size(); ++k) {
      std::visit([&](const auto& v) { obj[table.header[k]] = v; }, row[k]);
    }
    arr.push_back(std::move(obj));
  }
  return arr.dump(2) + "\n";
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false;
  bool header_done = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (quoted) {
      if (ch == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += ch;
      }
      continue;
    }
    if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      row.push_back(std::move(field));
      field.clear();
    } else if (ch == '\n') {
      row.push_back(std::move(field));
      field.clear();
      if (header_done) rows.push_back(std::move(row));
      header_done = true;
      row.clear();
    } else if (ch != '\r') {
      field += ch;
    }
  }
  if (!field.empty() || !row.empty()) {
    row.push_back(std::move(field));
    if (header_done) rows.push_back(std::move(row));
  }
  return rows;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing: " + std::strerror(errno));
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.flush();
  if (!out) throw IoError("write to '" + path + "' failed");
}

std::string plot_svg(std::span<const diracdisk::SpectrumBranch> branches, const PlotStyle& style) {
  if (branches.empty()) throw DomainError("plot_svg: no branches to plot");
  double t_lo = std::numeric_limits<double>::infinity();
  double t_hi = -t_lo;
  double e_lo = t_lo;
  double e_hi = -t_lo;
  for (const auto& b : branches) {
    for (const auto& p : b.points) {
      t_lo = std::min(t_lo, p.t);
      t_hi = std::max(t_hi, p.t);
      e_lo = std::min(e_lo, p.energy);
      e_hi = std::max(e_hi, p.energy);
    }
  }
  if (!std::isfinite(t_lo)) throw DomainError("plot_svg: branches contain no points");
  if (t_hi - t_lo < 1e-12) {
    t_lo -= 0.5;
    t_hi += 0.5;
  }
  if (e_hi - e_lo < 1e-12) {
    e_lo -= 0.5;
    e_hi += 0.5;
  }
  const double pad_e = 0.05 * (e_hi - e_lo);
  e_lo -= pad_e;
  e_hi += pad_e;

  const double left = 70.0;
  const double right = 20.0;
  const double top = style.title.empty() ? 20.0 : 40.0;
  const double bottom = 50.0;
  const double w = style.width - left - right;
  const double h = style.height - top - bottom;
  const auto X = [&](double t) { return left + (t - t_lo) / (t_hi - t_lo) * w; };
  const auto Y = [&](double e) { return top + (e_hi - e) / (e_hi - e_lo) * h; };

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << style.width << "\" height=\"" << style.height
      << "\" viewBox=\"0 0 " << style.width << ' ' << style.height << "\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"" << style.width << "\" height=\"" << style.height
      << "\" fill=\"white\"/>\n";
  if (!style.title.empty()) {
    svg << "<text x=\"" << fixed(left + 0.5 * w) << "\" y=\"25\" text-anchor=\"middle\" font-family=\"sans-serif\" "
        << "font-size=\"16\">" << escape_xml(style.title) << "</text>\n";
  }
  svg << "<g class=\"axes\" stroke=\"black\" stroke-width=\"1\" fill=\"none\">\n"
      << "<rect x=\"" << fixed(left) << "\" y=\"" << fixed(top) << "\" width=\"" << fixed(w) << "\" height=\""
      << fixed(h) << "\"/>\n";
  for (double v : ticks(t_lo, t_hi)) {
    svg << "<line x1=\"" << fixed(X(v)) << "\" y1=\"" << fixed(top + h) << "\" x2=\"" << fixed(X(v)) << "\" y2=\""
        << fixed(top + h + 5) << "\"/>\n";
  }
  for (double v : ticks(e_lo, e_hi)) {
    svg << "<line x1=\"" << fixed(left - 5) << "\" y1=\"" << fixed(Y(v)) << "\" x2=\"" << fixed(left)
        << "\" y2=\"" << fixed(Y(v)) << "\"/>\n";
  }
  svg << "</g>\n<g class=\"labels\" font-family=\"sans-serif\" font-size=\"12\" fill=\"black\">\n";
  for (double v : ticks(t_lo, t_hi)) {
    svg << "<text x=\"" << fixed(X(v)) << "\" y=\"" << fixed(top + h + 18) << "\" text-anchor=\"middle\">"
        << tick_label(v) << "</text>\n";
  }
  for (double v : ticks(e_lo, e_hi)) {
    svg << "<text x=\"" << fixed(left - 8) << "\" y=\"" << fixed(Y(v) + 4) << "\" text-anchor=\"end\">"
        << tick_label(v) << "</text>\n";
  }
  svg << "<text x=\"" << fixed(left + 0.5 * w) << "\" y=\"" << fixed(top + h + 40)
      << "\" text-anchor=\"middle\" font-size=\"14\">t</text>\n"
      << "<text x=\"18\" y=\"" << fixed(top + 0.5 * h) << "\" text-anchor=\"middle\" font-size=\"14\">E</text>\n"
      << "</g>\n";
  if (e_lo < 0.0 && e_hi > 0.0) {
    svg << "<line class=\"zero\" x1=\"" << fixed(left) << "\" y1=\"" << fixed(Y(0.0)) << "\" x2=\"" << fixed(left + w)
        << "\" y2=\"" << fixed(Y(0.0)) << "\" stroke=\"gray\" stroke-dasharray=\"4 4\"/>\n";
  }

  const auto is_edge = [](diracdisk::StateClass c) { return c != diracdisk::StateClass::regular; };
  const auto open_line = [&](bool edge) {
    svg << (edge ? "<polyline class=\"edge\" fill=\"none\" stroke=\"black\" stroke-width=\"2\" points=\""
                 : "<polyline class=\"regular\" fill=\"none\" stroke=\"green\" stroke-width=\"1\" points=\"");
  };
  for (const auto& b : branches) {
    const auto& p = b.points;
    if (p.size() == 1) {
      svg << "<circle class=\"" << (is_edge(p[0].state_class) ? "edge" : "regular") << "\" cx=\"" << fixed(X(p[0].t))
          << "\" cy=\"" << fixed(Y(p[0].energy)) << "\" r=\"2\" fill=\""
          << (is_edge(p[0].state_class) ? "black" : "green") << "\"/>\n";
      continue;
    }
    // Runs of segments sharing a style; a segment is edge-styled when both ends are.
    std::size_t k = 0;
    while (k + 1 < p.size()) {
      const bool edge = is_edge(p[k].state_class) && is_edge(p[k + 1].state_class);
      open_line(edge);
      svg << fixed(X(p[k].t)) << ',' << fixed(Y(p[k].energy));
      std::size_t m = k + 1;
      while (true) {
        svg << ' ' << fixed(X(p[m].t)) << ',' << fixed(Y(p[m].energy));
        if (m + 1 >= p.size() || (is_edge(p[m].state_class) && is_edge(p[m + 1].state_class)) != edge) break;
        ++m;
      }
      svg << "\"/>\n";
      k = m;
    }
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace flowlab::io
