// Copyright 2026 The entcap Authors
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

#include "format.hpp"

#include <algorithm>
#include <sstream>

namespace entcap::cli {

std::string num(double v) {
  std::ostringstream os;
  os.precision(12);
  os << (v == 0.0 ? 0.0 : v);
  return os.str();
}

std::string angle(double radians, bool degrees) {
  return num(degrees ? radians * 180.0 / kPi : radians);
}

std::string angles(std::initializer_list<double> radians, bool degrees) {
  std::string out;
  for (double r : radians) {
    if (!out.empty()) out += "  ";
    out += angle(r, degrees);
  }
  return out;
}

void Table::add(std::string key, std::string value) {
  rows_.emplace_back(std::move(key), std::move(value));
}

void Table::section(std::string title) { rows_.emplace_back("[" + title + "]", std::string()); }

std::string Table::str() const {
  std::size_t width = 0;
  for (const auto& [k, v] : rows_)
    if (!v.empty()) width = std::max(width, k.size());
  std::ostringstream os;
  for (const auto& [k, v] : rows_) {
    if (v.empty()) {
      os << k << '\n';
      continue;
    }
    os << "  " << k << std::string(width - k.size() + 2, ' ') << v << '\n';
  }
  return os.str();
}

std::string matrix_rows(const Eigen::MatrixXcd& m) {
  std::ostringstream os;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    os << "    ";
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      const Complex z = m(r, c);
      os << (c ? "  " : "") << num(z.real()) << (z.imag() < 0 ? " - " : " + ")
         << num(std::abs(z.imag())) << 'i';
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace entcap::cli
