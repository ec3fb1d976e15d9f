// Copyright 2026 The diffbasis Authors.
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

#include "diffbasis/set_io.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "diffbasis/errors.hpp"

namespace diffbasis {
namespace {

using nlohmann::json;

TEST(SetIo, IntegerRoundTrip) {
  GroupedSet s(GroupSpec::integers(), {0, 1, 3});
  auto j = set_to_json(s);
  EXPECT_EQ(j.dump(), R"({"group":{"kind":"int"},"elements":[0,1,3]})");
  EXPECT_EQ(set_from_json(json::parse(j.dump())), s);
}

TEST(SetIo, CyclicAndVectorRoundTrip) {
  GroupedSet c(GroupSpec::cyclic(13), {0, 1, 3, 9});
  EXPECT_EQ(set_to_json(c).dump(),
            R"({"group":{"kind":"cyclic","m":13},"elements":[0,1,3,9]})");
  EXPECT_EQ(set_from_json(json::parse(set_to_json(c).dump())), c);

  const auto v = GroupSpec::vector(3, 2);
  GroupedSet s(v, {0, 1, 3, 8});
  EXPECT_EQ(set_to_json(s).dump(),
            R"({"group":{"kind":"vector","p":3,"n":2},"elements":[[0,0],[1,0],[0,1],[2,2]]})");
  EXPECT_EQ(set_from_json(json::parse(set_to_json(s).dump())), s);
}

TEST(SetIo, ProvenanceHeaderComesFirst) {
  GroupedSet s(GroupSpec::integers(), {1, 2});
  Provenance prov{"lemma2", {{"n", 1}}, "1-difference basis for [1, 1]"};
  auto j = set_to_json(s, prov);
  EXPECT_EQ(j.begin().key(), "provenance");
  EXPECT_EQ(j["provenance"]["size"], 2);
  EXPECT_EQ(j["provenance"]["construction"], "lemma2");
  EXPECT_EQ(set_from_json(json::parse(j.dump())), s);
}

TEST(SetIo, RejectsMalformedInput) {
  EXPECT_THROW(set_from_json(json::parse(R"({"group":{"kind":"int"},"elements":[1,1]})")),
               InputError);
  EXPECT_THROW(set_from_json(json::parse(R"({"group":{"kind":"cyclic","m":5},"elements":[5]})")),
               InputError);
  EXPECT_THROW(set_from_json(json::parse(R"({"group":{"kind":"ring"},"elements":[]})")),
               InputError);
  EXPECT_THROW(set_from_json(json::parse(R"({"elements":[1]})")), InputError);
  EXPECT_THROW(set_from_json(json::parse(
                   R"({"group":{"kind":"vector","p":3,"n":2},"elements":[[0]]})")),
               InputError);
  EXPECT_THROW(set_from_json(json::parse(R"({"group":{"kind":"int"},"elements":["a"]})")),
               InputError);
}

TEST(SetIo, IgnoresUnknownKeys) {
  auto s = set_from_json(json::parse(
      R"({"comment":"x","group":{"kind":"int"},"elements":[3,1]})"));
  EXPECT_EQ(s.vec(), (std::vector<Element>{1, 3}));
}

TEST(SetIo, FileRoundTrip) {
  auto path = std::filesystem::temp_directory_path() / "diffbasis_set_io_test.json";
  GroupedSet s(GroupSpec::cyclic(7), {1, 2, 4});
  write_set_file(path, s, Provenance{"singer", {{"q", 2}}, "perfect"});
  EXPECT_EQ(read_set_file(path), s);
  std::filesystem::remove(path);
  EXPECT_THROW(read_set_file(path), InputError);
}

TEST(SetIo, BadJsonFileIsInputError) {
  auto path = std::filesystem::temp_directory_path() / "diffbasis_bad.json";
  std::ofstream(path) << "{not json";
  EXPECT_THROW(read_set_file(path), InputError);
  std::filesystem::remove(path);
}

TEST(SetIo, ProfileCsv) {
  GroupedSet s(GroupSpec::integers(), {0, 1, 3});
  auto csv = profile_to_csv(diff_profile(s, Domain::interval(1, 3)));
  EXPECT_EQ(csv, "x,count\n1,1\n2,1\n3,1\n");
  const auto v = GroupSpec::vector(3, 1);
  auto vcsv = profile_to_csv(diff_profile(GroupedSet(v, {0, 1}), Domain::full(v)));
  EXPECT_EQ(vcsv, "x,count\n0,2\n1,1\n2,1\n");
  EXPECT_EQ(format_element(GroupSpec::vector(3, 2), 5), "2;1");
}

}  // namespace
}  // namespace diffbasis
