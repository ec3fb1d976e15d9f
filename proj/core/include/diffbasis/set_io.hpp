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

#ifndef DIFFBASIS_SET_IO_HPP_
#define DIFFBASIS_SET_IO_HPP_

#include <filesystem>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "diffbasis/group.hpp"
#include "diffbasis/profile.hpp"

namespace diffbasis {

// Header written in front of constructed sets: what built the set, with
// which parameters, and what property was verified.
struct Provenance {
  std::string construction;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  std::string certifies;
};

nlohmann::ordered_json group_to_json(const GroupSpec& spec);
GroupSpec group_from_json(const nlohmann::json& j);

// {"group": {...}, "elements": [...]}, optionally preceded by
// "provenance". Vector elements are written as digit arrays.
nlohmann::ordered_json set_to_json(
    const GroupedSet& set, const std::optional<Provenance>& prov = {});
// Rejects duplicates, invalid elements and unknown group kinds with
// InputError. Unknown top-level keys are ignored.
GroupedSet set_from_json(const nlohmann::json& j);

GroupedSet read_set_file(const std::filesystem::path& path);
void write_set_file(const std::filesystem::path& path, const GroupedSet& set,
                    const std::optional<Provenance>& prov = {});

nlohmann::ordered_json element_to_json(const GroupSpec& spec, Element x);
Element element_from_json(const GroupSpec& spec, const nlohmann::json& j);

// Text form used in CSV cells: the integer itself, or the digits joined
// with ';' for vectors.
std::string format_element(const GroupSpec& spec, Element x);

// "x,count" header followed by one row per domain element.
std::string profile_to_csv(const RepProfile& profile);

}  // namespace diffbasis

#endif  // DIFFBASIS_SET_IO_HPP_
