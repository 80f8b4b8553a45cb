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

#pragma once

#include <string>
#include <utility>
#include <vector>

#include <entcap/linalg.hpp>

namespace entcap::cli {

/// 12 significant digits, shortest of fixed/scientific.
std::string num(double v);
/// Radians, or degrees when requested, at num() precision.
std::string angle(double radians, bool degrees);
std::string angles(std::initializer_list<double> radians, bool degrees);

/// Two-column key/value listing with aligned values.
class Table {
 public:
  void add(std::string key, std::string value);
  void section(std::string title);
  std::string str() const;

 private:
  std::vector<std::pair<std::string, std::string>> rows_;
};

std::string matrix_rows(const Eigen::MatrixXcd& m);

}  // namespace entcap::cli
