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

#pragma once

#include "ortholog/types.hpp"

#include <string>

namespace ortholog {

/// Parse a square matrix from either the JSON object form
/// {"n": int, "data": [row-major floats]} or whitespace-separated text with
/// one row per line. Objects produced by the CLI that wrap a matrix under a
/// "B" or "matrix" key are accepted too, so command output can be piped
/// back in.
Mat parse_matrix(const std::string& text);

/// Read a matrix from a file path, or from stdin when the path is "-".
Mat read_matrix(const std::string& path);

/// Number formatted with up to 17 significant digits (round-trip exact);
/// non-finite values map to JSON null.
std::string json_number(double x);

/// {"n": ..., "data": [...]} on one line.
std::string matrix_to_json(const Mat& m);

}  // namespace ortholog
