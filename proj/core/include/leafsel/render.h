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

#ifndef LEAFSEL_RENDER_H_
#define LEAFSEL_RENDER_H_

#include <span>
#include <string>

#include "leafsel/marked_tree.h"

namespace leafsel {

// Graphviz DOT. L-nodes are boxes, C-nodes circles, J-nodes filled boxes,
// unlabeled nodes points; marked leaves are blue dots and unmarked leaves
// orange squares. Components become clusters and the neighborhoods of
// `selected` leaves are filled.
std::string render_dot(const MarkedTree& mt, std::span<const NodeId> selected = {});

// Standalone SVG with a radial layout that follows the leaf order, so the
// drawing respects the rotation system.
std::string render_svg(const MarkedTree& mt, std::span<const NodeId> selected = {});

}  // namespace leafsel

#endif  // LEAFSEL_RENDER_H_
