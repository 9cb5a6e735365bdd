// Copyright 2026 The Kavram Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "kavram/results_io.hpp"

#include <sstream>
#include <string>

#include "doctest.h"
#include "kavram/errors.hpp"

using namespace kavram;

namespace {

ResultsFile sample() {
  ResultsFile results;
  results.algorithm_id = "simple-l2-freq";
  results.k = 3;
  DocumentResult d1;
  d1.doc_id = "d1";
  d1.concepts.items = {{"spor", 3.0}, {"takım", 1.5}, {"gol", 0.25}};
  DocumentResult d2;
  d2.doc_id = "d2";  // an empty ranking must survive the round trip
  results.documents = {d1, d2};
  return results;
}

}  // namespace

TEST_CASE("results round-trip through the JSON-lines form") {
  const ResultsFile original = sample();
  std::ostringstream out;
  write_results_jsonl(original, out);

  std::istringstream in(out.str());
  const ResultsFile restored = read_results_jsonl(in);
  CHECK(restored.algorithm_id == original.algorithm_id);
  CHECK(restored.k == original.k);
  REQUIRE(restored.documents.size() == 2);
  CHECK(restored.documents[0].doc_id == "d1");
  CHECK(restored.documents[0].concepts.items ==
        original.documents[0].concepts.items);
  CHECK(restored.documents[1].concepts.empty());
}

TEST_CASE("the TSV form is one readable record per document") {
  std::ostringstream out;
  write_results_tsv(sample(), out);
  const std::string tsv = out.str();
  CHECK(tsv.find("d1\tsimple-l2-freq\t3\tspor:3,takım:1.5,gol:0.25") !=
        std::string::npos);
  CHECK(tsv.find("d2\tsimple-l2-freq\t3\t\n") != std::string::npos);
}

TEST_CASE("scores keep enough digits to round-trip exactly") {
  ResultsFile results;
  results.algorithm_id = "simple-l4-freq";
  results.k = 1;
  DocumentResult doc;
  doc.doc_id = "d";
  doc.concepts.items = {{"x", 0.125 * 7.0}, {"y", 1.0 / 3.0}};
  results.documents = {doc};

  std::ostringstream out;
  write_results_jsonl(results, out);
  std::istringstream in(out.str());
  const auto restored = read_results_jsonl(in);
  CHECK(restored.documents[0].concepts.items[0].second == 0.875);
  // 1/3 is not representable in decimal; 12 significant digits keep the
  // error far below any tie threshold the rankings care about.
  CHECK(restored.documents[0].concepts.items[1].second ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-11));
}

TEST_CASE("read_results_jsonl rejects damaged input") {
  SUBCASE("malformed JSON") {
    std::istringstream in("{\"doc_id\": \"d\", nope\n");
    CHECK_THROWS_AS(read_results_jsonl(in), ParseError);
  }
  SUBCASE("mixed algorithm ids") {
    std::istringstream in(
        "{\"doc_id\":\"a\",\"algorithm\":\"simple-l2-freq\",\"k\":3,\"concepts\":[]}\n"
        "{\"doc_id\":\"b\",\"algorithm\":\"context-freq\",\"k\":3,\"concepts\":[]}\n");
    CHECK_THROWS_AS(read_results_jsonl(in), ParseError);
  }
  SUBCASE("missing fields") {
    std::istringstream in("{\"doc_id\":\"a\"}\n");
    CHECK_THROWS_AS(read_results_jsonl(in), ParseError);
  }
  SUBCASE("blank lines are fine, garbage is not") {
    std::istringstream in(
        "\n{\"doc_id\":\"a\",\"algorithm\":\"x\",\"k\":1,\"concepts\":[]}\n\n");
    CHECK(read_results_jsonl(in).documents.size() == 1);
  }
}
