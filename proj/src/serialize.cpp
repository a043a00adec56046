#include "declustr/serialize.hpp"

#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include "declustr/error.hpp"

namespace declustr {
namespace {

void note_unknown(const json& doc, std::initializer_list<const char*> known, const std::string& where,
                  std::vector<std::string>& warnings) {
  const std::set<std::string> names(known.begin(), known.end());
  for (const auto& [key, value] : doc.items()) {
    if (!names.count(key)) warnings.push_back("ignoring unknown field '" + key + "' in " + where);
  }
}

template <typename T>
T field(const json& doc, const char* name, const std::string& where) {
  if (!doc.is_object()) throw FormatError(where + " must be a JSON object");
  const auto it = doc.find(name);
  if (it == doc.end()) throw FormatError(where + " is missing field '" + name + "'");
  try {
    return it->template get<T>();
  } catch (const json::exception& e) {
    throw FormatError(where + " field '" + name + "' has the wrong type: " + e.what());
  }
}

}  // namespace

json design_to_json(const Design& design) {
  const auto& p = design.params();
  return json{{"t", p.t}, {"n", p.n}, {"k", p.k}, {"lambda", p.lambda}, {"blocks", design.blocks()}};
}

Design design_from_json(const json& doc, std::vector<std::string>& warnings) {
  const std::string where = "design";
  DesignParams params;
  params.t = field<int>(doc, "t", where);
  params.n = field<int>(doc, "n", where);
  params.k = field<int>(doc, "k", where);
  params.lambda = field<std::int64_t>(doc, "lambda", where);
  auto blocks = field<std::vector<Block>>(doc, "blocks", where);
  note_unknown(doc, {"t", "n", "k", "lambda", "blocks"}, where, warnings);
  return validate_design(params, std::move(blocks));
}

json group_to_json(const ParityGroup& group) {
  const HorizontalCode& code = group.code();
  json out;
  if (code.kind() == CodeKind::rdp) {
    out = {{"code", "rdp"}, {"p", code.prime()}};
  } else {
    out = {{"code", "rs"}, {"k", code.k()}, {"delta", code.delta()}};
  }
  if (group.family() != GroupFamily::balanced) out["family"] = to_string(group.family());
  return out;
}

ParityGroup group_from_json(const json& doc, std::vector<std::string>& warnings) {
  const std::string where = "group";
  const auto kind = field<std::string>(doc, "code", where);
  GroupFamily family = GroupFamily::balanced;
  if (doc.contains("family")) family = parse_group_family(field<std::string>(doc, "family", where));
  if (kind == "rdp") {
    note_unknown(doc, {"code", "p", "family"}, where, warnings);
    return make_group(HorizontalCode::rdp(field<int>(doc, "p", where)), family);
  }
  if (kind == "rs") {
    note_unknown(doc, {"code", "k", "delta", "family"}, where, warnings);
    return make_group(HorizontalCode::rs(field<int>(doc, "k", where), field<int>(doc, "delta", where)),
                      family);
  }
  throw FormatError("unknown code '" + kind + "'");
}

json layout_to_json(const DeclusteredLayout& layout) {
  return json{{"n", layout.disks()},
              {"design", design_to_json(layout.design())},
              {"group", group_to_json(layout.group())},
              {"placements", layout.placements()}};
}

DeclusteredLayout layout_from_json(const json& doc, std::vector<std::string>& warnings) {
  const std::string where = "layout";
  const int n = field<int>(doc, "n", where);
  const auto placements = field<std::vector<std::vector<int>>>(doc, "placements", where);
  if (!doc.contains("design") || !doc.contains("group")) {
    throw FormatError("layout needs 'design' and 'group'");
  }
  note_unknown(doc, {"n", "design", "group", "placements"}, where, warnings);

  // Placement range checks come first so that a bad disk index is reported
  // as a layout problem even when it also breaks the inline design.
  for (std::size_t i = 0; i < placements.size(); ++i) {
    std::set<int> seen;
    for (int d : placements[i]) {
      if (d < 0 || d >= n) {
        throw InvariantError("placement " + std::to_string(i) + " names disk " +
                             std::to_string(d) + " outside 0.." + std::to_string(n - 1));
      }
      if (!seen.insert(d).second) {
        throw InvariantError("placement " + std::to_string(i) +
                             " puts two units of one group on disk " + std::to_string(d));
      }
    }
  }

  std::optional<Design> parsed;
  try {
    parsed = design_from_json(doc["design"], warnings);
  } catch (const FormatError&) {
    throw;
  } catch (const Error& e) {
    throw InvariantError(std::string("layout design is invalid: ") + e.what());
  }
  Design design = std::move(*parsed);
  if (design.params().n != n) throw InvariantError("layout n differs from its design");
  ParityGroup group = group_from_json(doc["group"], warnings);
  return DeclusteredLayout(std::move(design), std::move(group), placements);
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str());
}

}  // namespace declustr
