#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "idealtop/search.hpp"
#include "idealtop/star.hpp"
#include "idealtop/theorems.hpp"

namespace idealtop {

using Json = nlohmann::ordered_json;

// Output shapes. Subsets are sorted point arrays; topologies always list
// every open set, ∅ and the whole space included, ascending by mask.
Json subset_to_json(SubsetMask a);
Json to_json(const Topology& t);
Json to_json(const Ideal& i);
Json to_json(const IdealSpace& s);
Json to_json(const FiniteMap& f);
Json to_json(const Instance& inst);
Json to_json(const Witness& w);
Json to_json(const Verdict& v);
Json to_json(const SearchReport& r);

// Input shapes. Errors throw Error(Parse) naming the offending location,
// e.g. "X.topology.opens[2]". Validation failures (NotATopology, BadMask,
// ...) keep their code and gain the location prefix.
SubsetMask subset_from_json(const Json& j, int n, const std::string& where);
/// ∅ and the whole space may be omitted from "opens".
Topology topology_from_json(const Json& j, const std::string& where = "topology");
/// Accepts {"n", "carrier"} or {"n", "generators"}; n defaults to n_hint.
Ideal ideal_from_json(const Json& j, std::optional<int> n_hint, const std::string& where = "ideal");
FiniteMap map_from_json(const Json& j, const std::string& where = "f");

/// {"topology": ..., "ideal": ..., "labels": [...]?}. Labels are carried
/// along untouched.
struct SpaceFile {
  IdealSpace space;
  std::optional<Json> labels;
};

SpaceFile space_from_json(const Json& j, const std::string& where = "space");

/// {"X": space, "Y": space, "f": map}.
struct InstanceFile {
  Instance instance;
  std::optional<Json> labels_x;
  std::optional<Json> labels_y;
};

InstanceFile instance_from_json(const Json& j);

/// Parses text, reporting syntax errors with their byte offset.
Json parse_json_text(std::string_view text, const std::string& source);
/// Reads and parses a file; unreadable files throw Error(Parse).
Json read_json_file(const std::string& path);

}  // namespace idealtop
