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

#include "leafsel/render.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <sstream>

#include "leafsel/components.h"

namespace leafsel {

namespace {

constexpr std::array<const char*, 6> kPalette = {"#f4a582", "#92c5de", "#b8e186",
                                                 "#fdb863", "#c2a5cf", "#80cdc1"};
constexpr std::uint32_t kNone = 0xffffffffu;

enum class NodeClass { kL, kC, kJ, kUnlabeled, kMarkedLeaf, kUnmarkedLeaf };

const char* class_name(NodeClass c) {
  switch (c) {
    case NodeClass::kL: return "L";
    case NodeClass::kC: return "C";
    case NodeClass::kJ: return "J";
    case NodeClass::kUnlabeled: return "unlabeled";
    case NodeClass::kMarkedLeaf: return "marked-leaf";
    case NodeClass::kUnmarkedLeaf: return "unmarked-leaf";
  }
  return "unlabeled";
}

// Everything both renderers need: node classes, component of each node and
// the selected neighborhood (as an index into `selected`) covering each node.
struct Scene {
  std::vector<NodeClass> cls;
  std::vector<std::uint32_t> component;
  std::vector<std::uint32_t> hood;
  std::vector<bool> selected;
  std::size_t components = 0;
  std::vector<ComponentKind> kinds;
};

Scene build_scene(const MarkedTree& mt, std::span<const NodeId> selected) {
  const PlaneTree& t = mt.tree();
  const std::size_t n = t.node_count();
  Scene s;
  s.cls.resize(n);
  s.component.assign(n, kNone);
  s.hood.assign(n, kNone);
  s.selected.assign(n, false);

  std::optional<Decomposition> d;
  if (mt.marked_count() >= 4) {
    try {
      d = decompose(mt);
    } catch (const std::exception&) {
      d.reset();  // draw without labels
    }
  }
  for (NodeId v = 0; v < n; ++v) {
    if (t.is_leaf(v)) {
      s.cls[v] = mt.is_marked(v) ? NodeClass::kMarkedLeaf : NodeClass::kUnmarkedLeaf;
      continue;
    }
    s.cls[v] = NodeClass::kUnlabeled;
    if (!d) continue;
    switch (d->labeling.label[v]) {
      case NodeLabel::kL: s.cls[v] = NodeClass::kL; break;
      case NodeLabel::kC: s.cls[v] = NodeClass::kC; break;
      case NodeLabel::kJ: s.cls[v] = NodeClass::kJ; break;
      case NodeLabel::kUnlabeled: break;
    }
  }
  if (d) {
    const MembershipIndex index(mt, *d);
    s.components = d->components.components.size();
    for (std::size_t i = 0; i < s.components; ++i) {
      s.kinds.push_back(d->components.components[i].kind);
      for (NodeId v : index.members(i)) s.component[v] = static_cast<std::uint32_t>(i);
    }
  }
  for (std::size_t i = 0; i < selected.size(); ++i) {
    const NodeId leaf = selected[i];
    if (leaf >= n || !mt.is_marked(leaf)) continue;
    s.selected[leaf] = true;
    for (NodeId v : mt.neighborhood(leaf)) {
      if (s.hood[v] == kNone) s.hood[v] = static_cast<std::uint32_t>(i);
    }
  }
  return s;
}

void dot_node(std::ostringstream& out, const Scene& s, NodeId v) {
  out << "    " << v << " [class=\"" << class_name(s.cls[v]) << "\"";
  switch (s.cls[v]) {
    case NodeClass::kL: out << ", shape=square, label=\"L\""; break;
    case NodeClass::kC: out << ", shape=circle, label=\"C\""; break;
    case NodeClass::kJ: out << ", shape=square, label=\"J\", fontcolor=white"; break;
    case NodeClass::kUnlabeled: out << ", shape=point, width=0.08"; break;
    case NodeClass::kMarkedLeaf: out << ", shape=doublecircle, label=\"" << v << "\""; break;
    case NodeClass::kUnmarkedLeaf: out << ", shape=plaintext, label=\"" << v << "\""; break;
  }
  if (s.hood[v] != kNone) {
    out << ", style=filled, fillcolor=\"" << kPalette[s.hood[v] % kPalette.size()] << "\"";
  } else if (s.cls[v] == NodeClass::kJ) {
    out << ", style=filled, fillcolor=black";
  }
  if (s.selected[v]) out << ", penwidth=3, color=red";
  out << "];\n";
}

}  // namespace

std::string render_dot(const MarkedTree& mt, std::span<const NodeId> selected) {
  const PlaneTree& t = mt.tree();
  const Scene s = build_scene(mt, selected);
  std::ostringstream out;
  out << "graph marked_tree {\n";
  out << "  graph [layout=neato, overlap=false];\n";
  for (std::size_t i = 0; i < s.components; ++i) {
    const bool is_l = s.kinds[i] == ComponentKind::kL;
    out << "  subgraph cluster_" << i << " {\n";
    out << "    label=\"" << (is_l ? "L-component " : "5-component ") << i << "\";\n";
    out << "    style=filled; fillcolor=\"" << (is_l ? "#eeeeee" : "#dddddd") << "\";\n";
    for (NodeId v = 0; v < t.node_count(); ++v) {
      if (s.component[v] == i) dot_node(out, s, v);
    }
    out << "  }\n";
  }
  for (NodeId v = 0; v < t.node_count(); ++v) {
    if (s.component[v] == kNone) dot_node(out, s, v);
  }
  for (NodeId u = 0; u < t.node_count(); ++u) {
    for (NodeId v : t.rotation(u)) {
      if (u < v) out << "  " << u << " -- " << v << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string render_svg(const MarkedTree& mt, std::span<const NodeId> selected) {
  const PlaneTree& t = mt.tree();
  const std::size_t n = t.node_count();
  const Scene s = build_scene(mt, selected);

  // Root at a center found by peeling leaves layer by layer.
  NodeId root = 0;
  {
    std::vector<std::uint32_t> deg(n);
    std::vector<NodeId> layer;
    for (NodeId v = 0; v < n; ++v) {
      deg[v] = static_cast<std::uint32_t>(t.degree(v));
      if (deg[v] <= 1) layer.push_back(v);
    }
    std::size_t left = n;
    while (left > 2 && !layer.empty()) {
      left -= layer.size();
      std::vector<NodeId> next;
      for (NodeId v : layer) {
        for (NodeId w : t.rotation(v)) {
          if (--deg[w] == 1) next.push_back(w);
        }
      }
      layer = std::move(next);
    }
    if (!layer.empty()) root = *std::min_element(layer.begin(), layer.end());
  }

  // DFS taking children after the arrival edge in rotation order, so leaves
  // come out in the face-walk order. Leaves sit on a circle; inner nodes get
  // the mean angle of their leaf range and a radius proportional to depth.
  std::vector<NodeId> parent(n, kNoNode);
  std::vector<std::uint32_t> depth(n, 0);
  std::vector<double> lo(n, 0), hi(n, 0);
  std::vector<NodeId> post;
  post.reserve(n);
  std::size_t leaf_count = 0;
  std::uint32_t max_depth = 1;
  {
    struct Frame {
      NodeId node;
      std::uint32_t next;
    };
    std::vector<Frame> stack{{root, 0}};
    parent[root] = root;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const NodeId v = f.node;
      const auto rot = t.rotation(v);
      const std::size_t deg = rot.size();
      const bool is_root = v == root;
      const std::size_t children = is_root ? deg : deg - 1;
      if (f.next == children) {
        if (children == 0) {
          lo[v] = hi[v] = static_cast<double>(leaf_count++);
        }
        post.push_back(v);
        stack.pop_back();
        continue;
      }
      const std::size_t base = is_root ? 0 : t.index_of(v, parent[v]) + 1;
      const NodeId w = rot[(base + f.next) % deg];
      ++f.next;
      if (parent[w] != kNoNode) continue;
      parent[w] = v;
      depth[w] = depth[v] + 1;
      max_depth = std::max(max_depth, depth[w]);
      stack.push_back({w, 0});
    }
  }
  for (NodeId v : post) {
    if (t.rotation(v).size() - (v == root ? 0 : 1) == 0) continue;
    bool first = true;
    for (NodeId w : t.rotation(v)) {
      if (w == parent[v] && v != root) continue;
      lo[v] = first ? lo[w] : std::min(lo[v], lo[w]);
      hi[v] = first ? hi[w] : std::max(hi[v], hi[w]);
      first = false;
    }
  }

  constexpr double kSize = 1000;
  constexpr double kRadius = 460;
  const double leaves = std::max<double>(1, static_cast<double>(leaf_count));
  std::vector<long> x(n), y(n);
  for (NodeId v = 0; v < n; ++v) {
    const double angle = 2 * std::numbers::pi * ((lo[v] + hi[v]) / 2) / leaves;
    const double radius = kRadius * depth[v] / max_depth;
    x[v] = std::lround(kSize / 2 + radius * std::cos(angle));
    y[v] = std::lround(kSize / 2 - radius * std::sin(angle));
  }

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\"" << kSize
      << "\" viewBox=\"0 0 " << kSize << " " << kSize << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (NodeId v = 0; v < n; ++v) {
    if (s.component[v] == kNone) continue;
    const bool is_l = s.kinds[s.component[v]] == ComponentKind::kL;
    out << "<circle class=\"component\" cx=\"" << x[v] << "\" cy=\"" << y[v]
        << "\" r=\"14\" fill=\"" << (is_l ? "#e6e6e6" : "#cfcfcf") << "\"/>\n";
  }
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v : t.rotation(u)) {
      if (u >= v) continue;
      out << "<line x1=\"" << x[u] << "\" y1=\"" << y[u] << "\" x2=\"" << x[v] << "\" y2=\""
          << y[v] << "\" stroke=\"#555\" stroke-width=\"1\"/>\n";
    }
  }
  for (NodeId v = 0; v < n; ++v) {
    const char* fill = s.hood[v] != kNone ? kPalette[s.hood[v] % kPalette.size()] : "white";
    const char* stroke = s.selected[v] ? "red" : "black";
    const int width = s.selected[v] ? 3 : 1;
    out << "<g class=\"" << class_name(s.cls[v]) << (s.selected[v] ? " selected" : "") << "\" id=\"n"
        << v << "\">";
    switch (s.cls[v]) {
      case NodeClass::kC:
        out << "<circle cx=\"" << x[v] << "\" cy=\"" << y[v] << "\" r=\"7\" fill=\"" << fill
            << "\" stroke=\"" << stroke << "\" stroke-width=\"" << width << "\"/>";
        break;
      case NodeClass::kL:
      case NodeClass::kJ:
        out << "<rect x=\"" << x[v] - 6 << "\" y=\"" << y[v] - 6
            << "\" width=\"12\" height=\"12\" fill=\""
            << (s.cls[v] == NodeClass::kJ && s.hood[v] == kNone ? "black" : fill) << "\" stroke=\""
            << stroke << "\" stroke-width=\"" << width << "\"/>";
        break;
      case NodeClass::kUnlabeled:
        out << "<circle cx=\"" << x[v] << "\" cy=\"" << y[v] << "\" r=\"3\" fill=\""
            << (s.hood[v] == kNone ? "#555" : fill) << "\"/>";
        break;
      case NodeClass::kMarkedLeaf:
        out << "<circle cx=\"" << x[v] << "\" cy=\"" << y[v] << "\" r=\"5\" fill=\"" << fill
            << "\" stroke=\"" << stroke << "\" stroke-width=\"" << width << "\"/>";
        break;
      case NodeClass::kUnmarkedLeaf:
        out << "<circle cx=\"" << x[v] << "\" cy=\"" << y[v] << "\" r=\"3\" fill=\"" << fill
            << "\" stroke=\"#999\" stroke-width=\"1\"/>";
        break;
    }
    out << "</g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace leafsel
