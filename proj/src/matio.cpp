/*
 * Copyright 2026 The Ortholog Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "ortholog/matio.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

namespace ortholog {

namespace {

Mat matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("matrix JSON must be an object");
  if (!j.contains("n") || !j.contains("data")) {
    // accept CLI output objects that wrap a matrix
    if (j.contains("B")) return matrix_from_json(j.at("B"));
    if (j.contains("matrix")) return matrix_from_json(j.at("matrix"));
    throw ParseError("matrix JSON needs \"n\" and \"data\" fields");
  }
  if (!j.at("n").is_number_integer() || j.at("n").get<long>() < 1)
    throw ParseError("matrix order \"n\" must be a positive integer");
  const int n = j.at("n").get<int>();
  const auto& data = j.at("data");
  if (!data.is_array() ||
      data.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
    throw ParseError("matrix \"data\" must hold n*n numbers");
  Mat m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const auto& cell = data[static_cast<std::size_t>(i) * n + k];
      if (!cell.is_number()) throw ParseError("matrix entries must be numbers");
      const double x = cell.get<double>();
      if (!std::isfinite(x)) throw ParseError("matrix entries must be finite");
      m(i, k) = x;
    }
  }
  return m;
}

Mat matrix_from_text(const std::string& text) {
  std::vector<std::vector<double>> rows;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    std::istringstream cells(line);
    std::vector<double> row;
    double x;
    while (cells >> x) {
      if (!std::isfinite(x)) throw ParseError("matrix entries must be finite");
      row.push_back(x);
    }
    if (!cells.eof())
      throw ParseError("matrix text contains a non-numeric token");
    if (!row.empty()) rows.push_back(std::move(row));
  }
  const std::size_t n = rows.size();
  if (n == 0) throw ParseError("matrix text is empty");
  for (const auto& row : rows)
    if (row.size() != n)
      throw ParseError("matrix text must be square (one row per line)");
  Mat m(static_cast<int>(n), static_cast<int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) m(static_cast<int>(i), static_cast<int>(k)) = rows[i][k];
  return m;
}

}  // namespace

Mat parse_matrix(const std::string& text) {
  const std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw ParseError("matrix input is empty");
  if (text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return matrix_from_json(j);
  }
  return matrix_from_text(text);
}

Mat read_matrix(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  return parse_matrix(text);
}

std::string json_number(double x) {
  if (!std::isfinite(x)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string matrix_to_json(const Mat& m) {
  std::string out = "{\"n\": " + std::to_string(m.rows()) + ", \"data\": [";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index k = 0; k < m.cols(); ++k) {
      if (i != 0 || k != 0) out += ", ";
      out += json_number(m(i, k));
    }
  }
  out += "]}";
  return out;
}

}  // namespace ortholog
