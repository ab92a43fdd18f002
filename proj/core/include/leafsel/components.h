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

// Partition of a labeled marked tree into L-components (one per L-node) and
// 5-components (five successive C-nodes of a spine), plus the data the
// selector needs per component: a representative leaf and delimiting nodes.

#ifndef LEAFSEL_COMPONENTS_H_
#define LEAFSEL_COMPONENTS_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "leafsel/contraction.h"
#include "leafsel/labeling.h"
#include "leafsel/leaf_order.h"
#include "leafsel/marked_tree.h"

namespace leafsel {

enum class ComponentKind : std::uint8_t { kL, kFive };

struct Component {
  ComponentKind kind = ComponentKind::kL;
  // L: the defining L-node. Five: c_i..c_{i+4} in spine order, so the
  // extreme nodes are front() and back().
  std::vector<NodeId> core;
  // Marked leaves owned by the component. L: both leaves of the L-node.
  // Five: the leaf of each core node, aligned with `core`.
  std::vector<NodeId> marked_leaves;
  // Five only: side of each core node's leaf, aligned with `core`.
  std::vector<SpineSide> sides;

  NodeId representative = kNoNode;
  // L: {L-node, kNoNode}. Five: {q, t}.
  std::array<NodeId, 2> delimiting{kNoNode, kNoNode};
  // Leaf to select when delimiting[k] is reached by the representative's
  // neighborhood. L: the other marked leaf. Five: the leaves of q and t.
  std::array<NodeId, 2> redirect{kNoNode, kNoNode};

  NodeId defining_node() const { return core.front(); }
};

struct ComponentSet {
  std::vector<Component> components;
  std::vector<NodeId> ungrouped;  // C-nodes left over after grouping
  std::size_t l_count = 0;
  std::size_t five_count = 0;
  std::size_t steps = 0;
};

// Groups each spine into fives from its anchor end and adds one L-component
// per L-node. Representatives and delimiters are filled in.
ComponentSet build_components(const MarkedTree& mt, const LeafOrder& order,
                              const Labeling& labeling, const std::vector<Spine>& spines);

// L: the first of the two leaves in marked_order is the representative.
// Five: on the side holding at least three leaves, the first three in spine
// order (a, b, c) give representative b and delimiters (C-node of a, C-node
// of c).
void assign_representative(Component& component, const LeafOrder& order);

// Everything one needs to run the pipeline on an instance.
struct Decomposition {
  LeafOrder order;
  ContractedTree contracted;
  Labeling labeling;
  std::vector<Spine> spines;
  ComponentSet components;
  std::size_t steps = 0;
};

// Throws DegenerateTree if the contracted tree has no labelable core.
Decomposition decompose(const MarkedTree& mt);

// Member sets per Definition of components: the core (the L-node, or the
// original path c_i..c_{i+4}) plus every incident subtree that holds no
// labeled node. Computing all of them is linear in the tree size.
class MembershipIndex {
 public:
  MembershipIndex(const MarkedTree& mt, const Decomposition& d);

  // Sorted member ids of component `index`.
  std::vector<NodeId> members(std::size_t index) const;
  // Original path c_i..c_{i+4} (or just the L-node).
  std::vector<NodeId> core_path(std::size_t index) const;

 private:
  // True if the subtree reached by stepping from `from` to `to` holds no
  // labeled node.
  bool label_free(NodeId from, NodeId to) const;

  const MarkedTree* mt_;
  const Decomposition* d_;
  std::vector<NodeId> parent_;
  std::vector<std::uint32_t> labeled_below_;
  std::uint32_t labeled_total_ = 0;
};

}  // namespace leafsel

#endif  // LEAFSEL_COMPONENTS_H_
