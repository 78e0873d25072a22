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

#include "testutil.hpp"

#include <doctest.h>

using namespace ortholog;
using namespace ortholog::testutil;

TEST_SUITE("matio") {

TEST_CASE("JSON matrix parsing") {
  const Mat m = parse_matrix(R"({"n": 2, "data": [0, 1, -1, 0]})");
  CHECK((m - e0()).norm() == 0.0);
  // wrapped forms produced by the command-line tool
  const Mat b = parse_matrix(R"({"B": {"n": 2, "data": [1, 0, 0, 1]}})");
  CHECK((b - identity(2)).norm() == 0.0);
}

TEST_CASE("text matrix parsing") {
  const Mat m = parse_matrix("0 1\n-1 0\n");
  CHECK((m - e0()).norm() == 0.0);
  const Mat one = parse_matrix("  3.5 ");
  CHECK(one.rows() == 1);
  CHECK(one(0, 0) == 3.5);
}

TEST_CASE("malformed input is rejected") {
  CHECK_THROWS_AS(parse_matrix(""), ParseError);
  CHECK_THROWS_AS(parse_matrix("{\"n\": 2}"), ParseError);
  CHECK_THROWS_AS(parse_matrix(R"({"n": 2, "data": [1, 2, 3]})"), ParseError);
  CHECK_THROWS_AS(parse_matrix(R"({"n": 0, "data": []})"), ParseError);
  CHECK_THROWS_AS(parse_matrix("1 2\n3\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix("1 x\ny 1\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix(R"({"n": 1, "data": ["a"]})"), ParseError);
}

TEST_CASE("serialization round trip is bit exact") {
  Rng rng(3001);
  const Mat m = random_gaussian(5, rng) * 1e3;
  const Mat back = parse_matrix(matrix_to_json(m));
  CHECK((m - back).norm() == 0.0);
  CHECK(json_number(0.1) == "0.10000000000000001");
  CHECK(json_number(std::numeric_limits<double>::quiet_NaN()) == "null");
}

}  // TEST_SUITE
