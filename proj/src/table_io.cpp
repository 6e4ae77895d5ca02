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

#include "dlines/table_io.hpp"

#include <sstream>

namespace dlines {

namespace {

std::string_view op_name(TableOp op) {
  switch (op) {
    case TableOp::conv:
      return "conv";
    case TableOp::rot:
      return "rot";
    case TableOp::comp:
      return "comp";
  }
  return "?";
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

AtomId resolve(const AtomTables& t, std::string_view name, int line) {
  auto a = t.find(trim(name));
  if (!a)
    throw TableParseError(line, "unknown " + std::string(algebra_tag(t.algebra())) +
                                    " atom '" + std::string(trim(name)) + "'");
  return *a;
}

}  // namespace

std::string format_entry(const AtomTables& t, const TableEntry& e) {
  std::string out(algebra_tag(t.algebra()));
  out += ' ';
  out += op_name(e.op);
  out += ' ';
  out += t.name(e.a);
  if (e.op == TableOp::comp) {
    out += ',';
    out += t.name(e.b);
  }
  out += " = ";
  out += t.format(e.value);
  return out;
}

std::string dump_tables(const AtomTables& t,
                        const std::vector<CompGroup>& groups) {
  std::ostringstream os;
  const int n = t.size();
  for (AtomId a = 0; a < n; ++a)
    os << format_entry(t, {TableOp::conv, a, 0, t.converse(a)}) << '\n';
  for (AtomId a = 0; a < n; ++a)
    os << format_entry(t, {TableOp::rot, a, 0, t.rotation(a)}) << '\n';
  if (groups.empty()) {
    for (AtomId a = 0; a < n; ++a)
      for (AtomId b = 0; b < n; ++b)
        os << format_entry(t, {TableOp::comp, a, b, t.composition(a, b)})
           << '\n';
    return os.str();
  }
  std::vector<char> seen(static_cast<size_t>(n) * n, 0);
  for (const auto& g : groups) {
    os << "# " << g.title << '\n';
    for (auto [a, b] : g.cells) {
      char& s = seen.at(static_cast<size_t>(a) * n + b);
      if (s) throw std::logic_error("composition cell dumped twice");
      s = 1;
      os << format_entry(t, {TableOp::comp, a, b, t.composition(a, b)})
         << '\n';
    }
  }
  for (char s : seen)
    if (!s) throw std::logic_error("composition groups miss a cell");
  return os.str();
}

std::vector<TableEntry> parse_table_text(std::string_view text,
                                         const AtomTables& t) {
  std::vector<TableEntry> out;
  int line_no = 0;
  while (!text.empty()) {
    size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{}
                                        : text.substr(nl + 1);
    ++line_no;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;

    size_t eq = line.find('=');
    if (eq == std::string_view::npos)
      throw TableParseError(line_no, "missing '='");
    std::string_view lhs = trim(line.substr(0, eq));
    std::string_view rhs = trim(line.substr(eq + 1));

    std::istringstream ls{std::string(lhs)};
    std::string alg, op, args, extra;
    ls >> alg >> op >> args;
    if (args.empty() || (ls >> extra))
      throw TableParseError(line_no, "expected '<algebra> <op> <atoms>'");
    if (alg != algebra_tag(t.algebra()))
      throw TableParseError(line_no, "entry for algebra '" + alg +
                                         "' in a " +
                                         std::string(algebra_tag(t.algebra())) +
                                         " table");
    TableEntry e;
    e.line = line_no;
    if (op == "conv") {
      e.op = TableOp::conv;
    } else if (op == "rot") {
      e.op = TableOp::rot;
    } else if (op == "comp") {
      e.op = TableOp::comp;
    } else {
      throw TableParseError(line_no, "unknown operation '" + op + "'");
    }
    size_t comma = args.find(',');
    if (e.op == TableOp::comp) {
      if (comma == std::string::npos)
        throw TableParseError(line_no, "comp entry needs two atoms");
      e.a = resolve(t, std::string_view(args).substr(0, comma), line_no);
      e.b = resolve(t, std::string_view(args).substr(comma + 1), line_no);
    } else {
      if (comma != std::string::npos)
        throw TableParseError(line_no, "unary entry takes one atom");
      e.a = resolve(t, args, line_no);
    }

    if (rhs.size() < 2 || rhs.front() != '{' || rhs.back() != '}')
      throw TableParseError(line_no, "value must be a braced atom list");
    rhs = trim(rhs.substr(1, rhs.size() - 2));
    e.value = Relation(t.algebra());
    while (!rhs.empty()) {
      size_t c = rhs.find(',');
      std::string_view name = trim(rhs.substr(0, c));
      if (name.empty()) throw TableParseError(line_no, "empty atom name");
      e.value.insert(resolve(t, name, line_no));
      rhs = c == std::string_view::npos ? std::string_view{}
                                        : trim(rhs.substr(c + 1));
    }
    out.push_back(e);
  }
  return out;
}

std::vector<std::string> diff_tables(const AtomTables& expected,
                                     const AtomTables& actual) {
  if (expected.algebra() != actual.algebra() ||
      expected.names() != actual.names())
    return {"atom sets differ"};
  std::vector<std::string> out;
  auto report = [&](const TableEntry& e, const Relation& got) {
    out.push_back(format_entry(expected, e) +
                  "  (found " + expected.format(got) + ")");
  };
  const int n = expected.size();
  for (AtomId a = 0; a < n; ++a) {
    if (expected.converse(a) != actual.converse(a))
      report({TableOp::conv, a, 0, expected.converse(a)}, actual.converse(a));
  }
  for (AtomId a = 0; a < n; ++a) {
    if (expected.rotation(a) != actual.rotation(a))
      report({TableOp::rot, a, 0, expected.rotation(a)}, actual.rotation(a));
  }
  for (AtomId a = 0; a < n; ++a)
    for (AtomId b = 0; b < n; ++b)
      if (expected.composition(a, b) != actual.composition(a, b))
        report({TableOp::comp, a, b, expected.composition(a, b)},
               actual.composition(a, b));
  return out;
}

}  // namespace dlines
