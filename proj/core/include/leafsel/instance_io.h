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

// JSON files exchanged by the command line tool.
//
// Instance (version 1):
//   {"version": 1,
//    "nodes": [{"id": 0, "nbrs": [..counterclockwise..]}, ...],
//    "marked": [ids...],
//    "neighborhoods": {"<leaf id>": [ids...], ...}}
//
// Selection:
//   {"selected": [ids], "steps": int,
//    "components": {"L": int, "five": int, "ungrouped": int},
//    "outcomes": {"completed": int, "delimiterHit": int, "exhausted": int}}

#ifndef LEAFSEL_INSTANCE_IO_H_
#define LEAFSEL_INSTANCE_IO_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "leafsel/marked_tree.h"
#include "leafsel/oracle.h"
#include "leafsel/selector.h"
#include "leafsel/validate.h"

namespace leafsel {

// Throws InvalidInput on malformed JSON or schema violations.
MarkedTree parse_instance(std::string_view text);
std::string serialize_instance(const MarkedTree& mt);

std::string serialize_selection(const Selection& selection);
// Extracts "selected" from a selection document.
std::vector<NodeId> parse_selection(std::string_view text);

std::string to_json(const ValidationReport& report);
std::string to_json(const VerificationReport& report);

// Throws InvalidInput if the file cannot be read.
std::string read_file(const std::filesystem::path& path);
// Writes to a sibling temporary and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);

}  // namespace leafsel

#endif  // LEAFSEL_INSTANCE_IO_H_
