#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "declustr/layout.hpp"

namespace declustr {

using nlohmann::json;

// {"t":3,"n":8,"k":4,"lambda":1,"blocks":[[0,1,2,3],...]}. Unknown top-level
// fields are reported through `warnings` and otherwise ignored. Malformed
// input raises FormatError; a well-formed non-design raises the validation
// error from validate_design.
json design_to_json(const Design& design);
Design design_from_json(const json& doc, std::vector<std::string>& warnings);

// {"code":"rdp","p":3} or {"code":"rs","k":5,"delta":2}; "family" is added
// when it is not "balanced".
json group_to_json(const ParityGroup& group);
ParityGroup group_from_json(const json& doc, std::vector<std::string>& warnings);

// {"n":8,"design":{...},"group":{...},"placements":[[...],...]}.
// Placements are cross-checked against the design (InvariantError).
json layout_to_json(const DeclusteredLayout& layout);
DeclusteredLayout layout_from_json(const json& doc, std::vector<std::string>& warnings);

// Parses text into json, mapping parse failures to FormatError.
json parse_json(const std::string& text);
json read_json_file(const std::string& path);

}  // namespace declustr
