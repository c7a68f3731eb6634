// Copyright 2026 The eisrec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Plain tabular output: RFC 4180 CSV and aligned text.

#pragma once

#include <algorithm>
#include <cstdlib>
#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

namespace eisrec {

struct Tabular {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

inline void write_csv(std::ostream& os, const Tabular& t) {
  auto line = [&os](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) os << ',';
      os << csv_field(cells[i]);
    }
    os << "\r\n";
  };
  line(t.header);
  for (const auto& r : t.rows) line(r);
}

inline bool numeric(const std::string& s) {
  if (s.empty()) return false;
  char* end = nullptr;
  std::strtod(s.c_str(), &end);
  return end == s.c_str() + s.size();
}

/// Columns holding only numbers are right-aligned, others left-aligned.
inline void write_text(std::ostream& os, const Tabular& t) {
  std::vector<std::size_t> width(t.header.size(), 0);
  auto grow = [&width](const std::vector<std::string>& cells) {
    if (cells.size() > width.size()) width.resize(cells.size(), 0);
    for (std::size_t i = 0; i < cells.size(); ++i) width[i] = std::max(width[i], cells[i].size());
  };
  grow(t.header);
  for (const auto& r : t.rows) grow(r);
  std::vector<bool> right(width.size(), !t.rows.empty());
  for (const auto& r : t.rows) {
    for (std::size_t i = 0; i < r.size(); ++i) right[i] = right[i] && (r[i].empty() || numeric(r[i]));
  }
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) os << "  ";
      const std::string pad(width[i] - cells[i].size(), ' ');
      if (right[i]) {
        os << pad << cells[i];
      } else if (i + 1 < cells.size()) {
        os << cells[i] << pad;
      } else {
        os << cells[i];
      }
    }
    os << '\n';
  };
  line(t.header);
  std::size_t total = 0;
  for (std::size_t i = 0; i < width.size(); ++i) total += width[i] + (i ? 2 : 0);
  os << std::string(total, '-') << '\n';
  for (const auto& r : t.rows) line(r);
}

}  // namespace eisrec
