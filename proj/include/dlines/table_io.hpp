// Copyright 2026 The dlines Authors.
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

// Plain-text table files. One entry per line:
//
//   <algebra> conv <atom> = {<atom>, ...}
//   <algebra> rot <atom> = {<atom>, ...}
//   <algebra> comp <atom>,<atom> = {<atom>, ...}
//
// Blank lines and lines starting with '#' are ignored.

#ifndef DLINES_TABLE_IO_HPP_
#define DLINES_TABLE_IO_HPP_

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dlines/relation.hpp"

namespace dlines {

enum class TableOp { conv, rot, comp };

struct TableEntry {
  TableOp op;
  AtomId a = 0;
  AtomId b = 0;  // second argument, comp only
  Relation value;
  int line = 0;
};

/// Thrown for malformed table text; the message carries the line number.
class TableParseError : public std::runtime_error {
 public:
  TableParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

std::string format_entry(const AtomTables& t, const TableEntry& e);

/// Named group of composition entries, dumped under a comment header.
struct CompGroup {
  std::string title;
  std::vector<std::pair<AtomId, AtomId>> cells;
};

/// Converse, rotation and every composition cell, row-major unless groups
/// are given. Groups must cover each cell exactly once.
std::string dump_tables(const AtomTables& t,
                        const std::vector<CompGroup>& groups = {});

/// Parses entries for the algebra of `names_from`; atom names are resolved
/// against it. Entries for other algebras are rejected.
std::vector<TableEntry> parse_table_text(std::string_view text,
                                         const AtomTables& names_from);

/// Cell-level comparison: one line per differing entry, empty when equal.
std::vector<std::string> diff_tables(const AtomTables& expected,
                                     const AtomTables& actual);

}  // namespace dlines

#endif  // DLINES_TABLE_IO_HPP_
