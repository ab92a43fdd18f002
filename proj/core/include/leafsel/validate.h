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

#ifndef LEAFSEL_VALIDATE_H_
#define LEAFSEL_VALIDATE_H_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "leafsel/marked_tree.h"
#include "leafsel/plane_tree.h"

namespace leafsel {

enum class ViolationKind {
  kEmptyTree,
  kBadDegree,             // degree other than 1 or 3; degree 2 is the usual one
  kDuplicateNeighbor,
  kAsymmetricAdjacency,
  kNotATree,              // disconnected or cyclic
  kNoMarkedLeaves,
  kMarkedNotLeaf,
  kLeafNotInNeighborhood,
  kDisconnectedNeighborhood,
  kImproperNeighborhood,  // some node has exactly two neighbors inside nh
  kConsecutiveOverlap,
};

std::string_view to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  NodeId node = kNoNode;     // offending node or first leaf of the pair
  NodeId other = kNoNode;    // second leaf of an overlapping pair / other end
  NodeId witness = kNoNode;  // shared node for overlaps
  std::string message;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool contains(ViolationKind kind) const;
  std::string to_string() const;
};

ValidationReport validate(const PlaneTree& tree);
// Reports every broken tree or marked-tree property. Order-dependent checks
// (consecutive overlap) are skipped when the tree itself is broken.
ValidationReport validate(const MarkedTree& mt);

class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(ValidationReport report);
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

}  // namespace leafsel

#endif  // LEAFSEL_VALIDATE_H_
