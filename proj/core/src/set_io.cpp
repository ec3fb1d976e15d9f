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

#include <fstream>
#include <sstream>

#include "diffbasis/errors.hpp"

namespace diffbasis {

nlohmann::ordered_json group_to_json(const GroupSpec& spec) {
  nlohmann::ordered_json g;
  switch (spec.kind()) {
    case GroupKind::kIntegers:
      g["kind"] = "int";
      break;
    case GroupKind::kCyclic:
      g["kind"] = "cyclic";
      g["m"] = spec.modulus();
      break;
    case GroupKind::kVector:
      g["kind"] = "vector";
      g["p"] = spec.prime();
      g["n"] = spec.dimension();
      break;
  }
  return g;
}

GroupSpec group_from_json(const nlohmann::json& j) {
  try {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "int") return GroupSpec::integers();
    if (kind == "cyclic") return GroupSpec::cyclic(j.at("m").get<std::int64_t>());
    if (kind == "vector") {
      return GroupSpec::vector(j.at("p").get<std::int64_t>(),
                               j.at("n").get<int>());
    }
    throw InputError("unknown group kind '" + kind + "'");
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed group: ") + e.what());
  }
}

nlohmann::ordered_json element_to_json(const GroupSpec& spec, Element x) {
  if (spec.kind() == GroupKind::kVector) return spec.digits(x);
  return x;
}

Element element_from_json(const GroupSpec& spec, const nlohmann::json& j) {
  try {
    if (spec.kind() == GroupKind::kVector) {
      auto digits = j.get<std::vector<std::int64_t>>();
      return spec.from_digits(digits);
    }
    Element x = j.get<Element>();
    spec.check(x);
    return x;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed element: ") + e.what());
  }
}

nlohmann::ordered_json set_to_json(const GroupedSet& set,
                                   const std::optional<Provenance>& prov) {
  nlohmann::ordered_json out;
  if (prov) {
    nlohmann::ordered_json h;
    h["construction"] = prov->construction;
    h["params"] = prov->params;
    h["size"] = set.size();
    h["certifies"] = prov->certifies;
    out["provenance"] = std::move(h);
  }
  out["group"] = group_to_json(set.spec());
  auto elems = nlohmann::ordered_json::array();
  for (Element x : set) elems.push_back(element_to_json(set.spec(), x));
  out["elements"] = std::move(elems);
  return out;
}

GroupedSet set_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InputError("set file must be a JSON object");
  if (!j.contains("group") || !j.contains("elements")) {
    throw InputError("set file needs 'group' and 'elements'");
  }
  GroupSpec spec = group_from_json(j.at("group"));
  const auto& arr = j.at("elements");
  if (!arr.is_array()) throw InputError("'elements' must be an array");
  std::vector<Element> xs;
  xs.reserve(arr.size());
  for (const auto& e : arr) xs.push_back(element_from_json(spec, e));
  return GroupedSet::distinct(spec, std::move(xs));
}

GroupedSet read_set_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(path.string() + ": " + e.what());
  }
  return set_from_json(j);
}

void write_set_file(const std::filesystem::path& path, const GroupedSet& set,
                    const std::optional<Provenance>& prov) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path.string());
  out << set_to_json(set, prov).dump(2) << '\n';
}

std::string format_element(const GroupSpec& spec, Element x) {
  if (spec.kind() != GroupKind::kVector) return std::to_string(x);
  std::string s;
  for (auto d : spec.digits(x)) {
    if (!s.empty()) s += ';';
    s += std::to_string(d);
  }
  return s;
}

std::string profile_to_csv(const RepProfile& profile) {
  std::ostringstream os;
  os << "x,count\n";
  for (std::size_t i = 0; i < profile.domain.size(); ++i) {
    os << format_element(profile.spec, profile.domain.at(i)) << ','
       << profile.counts[i] << '\n';
  }
  return os.str();
}

}  // namespace diffbasis
