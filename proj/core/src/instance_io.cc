// Copyright 2026 The leafsel Authors
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

#include "leafsel/instance_io.h"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "leafsel/errors.h"

namespace leafsel {

namespace {

using Json = nlohmann::ordered_json;

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

const Json& field(const Json& obj, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw InvalidInput(std::string("missing field \"") + key + "\"");
  return *it;
}

NodeId node_id(const Json& v) {
  if (!v.is_number_integer()) throw InvalidInput("node ids must be integers, got " + v.dump());
  const auto x = v.get<std::int64_t>();
  if (x < 0 || x >= static_cast<std::int64_t>(kNoNode)) {
    throw InvalidInput("node id out of range: " + v.dump());
  }
  return static_cast<NodeId>(x);
}

std::vector<NodeId> id_list(const Json& v, const char* what) {
  if (!v.is_array()) throw InvalidInput(std::string(what) + " must be an array");
  std::vector<NodeId> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(node_id(x));
  return out;
}

Json id_array(std::span<const NodeId> ids) {
  Json out = Json::array();
  for (NodeId v : ids) out.push_back(v);
  return out;
}

Json maybe_id(NodeId v) { return v == kNoNode ? Json(nullptr) : Json(v); }

}  // namespace

MarkedTree parse_instance(std::string_view text) {
  const Json doc = parse_json(text);
  if (!doc.is_object()) throw InvalidInput("instance must be a JSON object");
  const Json& version = field(doc, "version");
  if (!version.is_number_integer() || version.get<std::int64_t>() != 1) {
    throw InvalidInput("unsupported instance version " + version.dump());
  }
  const Json& nodes = field(doc, "nodes");
  if (!nodes.is_array()) throw InvalidInput("\"nodes\" must be an array");
  std::vector<std::vector<NodeId>> rotations(nodes.size());
  std::vector<bool> seen(nodes.size(), false);
  for (const auto& node : nodes) {
    if (!node.is_object()) throw InvalidInput("node entries must be objects");
    const NodeId id = node_id(field(node, "id"));
    if (id >= nodes.size()) {
      throw InvalidInput("node ids must be 0.." + std::to_string(nodes.size() - 1) + ", got " +
                         std::to_string(id));
    }
    if (seen[id]) throw InvalidInput("node " + std::to_string(id) + " listed twice");
    seen[id] = true;
    rotations[id] = id_list(field(node, "nbrs"), "\"nbrs\"");
  }
  PlaneTree tree(std::move(rotations));

  const std::vector<NodeId> marked = id_list(field(doc, "marked"), "\"marked\"");
  const Json& hoods = field(doc, "neighborhoods");
  if (!hoods.is_object()) throw InvalidInput("\"neighborhoods\" must be an object");
  if (hoods.size() != marked.size()) {
    throw InvalidInput("\"neighborhoods\" must have exactly one entry per marked leaf");
  }
  MarkedTree::NeighborhoodList list;
  list.reserve(marked.size());
  for (NodeId leaf : marked) {
    const auto it = hoods.find(std::to_string(leaf));
    if (it == hoods.end()) {
      throw InvalidInput("marked leaf " + std::to_string(leaf) + " has no neighborhood");
    }
    list.emplace_back(leaf, id_list(*it, "a neighborhood"));
  }
  return MarkedTree(std::move(tree), std::move(list));
}

std::string serialize_instance(const MarkedTree& mt) {
  Json doc;
  doc["version"] = 1;
  Json nodes = Json::array();
  const PlaneTree& t = mt.tree();
  for (NodeId v = 0; v < t.node_count(); ++v) {
    Json node;
    node["id"] = v;
    node["nbrs"] = id_array(t.rotation(v));
    nodes.push_back(std::move(node));
  }
  doc["nodes"] = std::move(nodes);
  doc["marked"] = id_array(mt.marked());
  Json hoods = Json::object();
  for (std::size_t i = 0; i < mt.marked_count(); ++i) {
    hoods[std::to_string(mt.marked()[i])] = id_array(mt.neighborhood_at(i));
  }
  doc["neighborhoods"] = std::move(hoods);
  return doc.dump() + "\n";
}

std::string serialize_selection(const Selection& sel) {
  Json doc;
  doc["selected"] = id_array(sel.leaves);
  doc["steps"] = sel.total_steps;
  doc["components"] = {{"L", sel.l_components},
                       {"five", sel.five_components},
                       {"ungrouped", sel.ungrouped}};
  doc["outcomes"] = {{"completed", sel.completed},
                     {"delimiterHit", sel.delimiter_hits},
                     {"exhausted", sel.exhausted}};
  return doc.dump(2) + "\n";
}

std::vector<NodeId> parse_selection(std::string_view text) {
  const Json doc = parse_json(text);
  if (doc.is_array()) return id_list(doc, "selection");
  if (!doc.is_object()) throw InvalidInput("selection must be an object or an array");
  return id_list(field(doc, "selected"), "\"selected\"");
}

std::string to_json(const ValidationReport& report) {
  Json doc;
  doc["ok"] = report.ok();
  Json list = Json::array();
  for (const Violation& v : report.violations) {
    Json item;
    item["kind"] = std::string(to_string(v.kind));
    item["node"] = maybe_id(v.node);
    item["other"] = maybe_id(v.other);
    item["witness"] = maybe_id(v.witness);
    item["message"] = v.message;
    list.push_back(std::move(item));
  }
  doc["violations"] = std::move(list);
  return doc.dump(2) + "\n";
}

std::string to_json(const VerificationReport& report) {
  Json doc;
  doc["ok"] = report.ok();
  Json overlaps = Json::array();
  for (const Overlap& o : report.overlaps) {
    overlaps.push_back({{"a", o.a}, {"b", o.b}, {"witness", o.witness}});
  }
  Json bridges = Json::array();
  for (const BridgingEdge& e : report.bridging_edges) {
    bridges.push_back({{"u", e.u}, {"v", e.v}, {"a", e.a}, {"b", e.b}});
  }
  doc["overlaps"] = std::move(overlaps);
  doc["bridgingEdges"] = std::move(bridges);
  return doc.dump(2) + "\n";
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file_atomic(const std::filesystem::path& path, std::string_view contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InvalidInput("cannot write " + tmp.string());
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw InvalidInput("write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw InvalidInput("cannot move output into place at " + path.string());
  }
}

}  // namespace leafsel
