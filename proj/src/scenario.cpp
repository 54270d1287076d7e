// Copyright 2026 The locality-lab Authors
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

#include "locality_lab/scenario.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "locality_lab/errors.hpp"

namespace locality_lab {

namespace {

ParseError line_error(std::size_t line, const std::string &msg) {
  return ParseError("line " + std::to_string(line) + ": " + msg, line, true);
}

std::string join(const std::vector<std::string> &tokens, std::size_t from) {
  std::string out;
  for (std::size_t i = from; i < tokens.size(); ++i) {
    if (i > from) out += ' ';
    out += tokens[i];
  }
  return out;
}

double parse_number(const std::string &tok, std::size_t line) {
  double v = 0;
  const char *first = tok.data();
  const char *last = tok.data() + tok.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) {
    throw line_error(line, "expected a number, found '" + tok + "'");
  }
  return v;
}

Assertion parse_assertion(const std::vector<std::string> &tokens,
                          std::size_t line, unsigned n) {
  if (tokens.size() < 2) throw line_error(line, "empty assert");
  Assertion a{};
  a.line = line;
  a.text = join(tokens, 0);
  const std::string &what = tokens[1];
  if (what == "equal" || what == "notequal") {
    if (tokens.size() != 4) {
      throw line_error(line, "usage: assert " + what + " LABEL LABEL");
    }
    a.kind = what == "equal" ? AssertionKind::Equal : AssertionKind::NotEqual;
    a.first = tokens[2];
    a.second = tokens[3];
  } else if (what == "factordiff" || what == "descdiff") {
    if (tokens.size() < 5) {
      throw line_error(line, "usage: assert " + what + " LABEL LABEL {i,...}");
    }
    a.kind = what == "factordiff" ? AssertionKind::FactorDiff
                                  : AssertionKind::DescDiff;
    a.first = tokens[2];
    a.second = tokens[3];
    try {
      a.expected = parse_index_set(join(tokens, 4));
    } catch (const ParseError &e) {
      throw line_error(line, e.what());
    }
    if (a.kind == AssertionKind::DescDiff) {
      for (unsigned q : a.expected) {
        if (q >= n) throw line_error(line, "qubit out of range in index set");
      }
    }
  } else if (what == "expect") {
    if (tokens.size() != 6) {
      throw line_error(line, "usage: assert expect LABEL WORD VALUE TOL");
    }
    a.kind = AssertionKind::Expect;
    a.first = tokens[2];
    try {
      a.observable = parse_pauli(tokens[3], n);
    } catch (const ParseError &e) {
      throw line_error(line, e.what());
    }
    a.value = parse_number(tokens[4], line);
    a.tolerance = parse_number(tokens[5], line);
    if (a.tolerance < 0) throw line_error(line, "tolerance must be >= 0");
  } else {
    throw line_error(line, "unknown assertion '" + what + "'");
  }
  return a;
}

}  // namespace

std::vector<std::string> Scenario::labels() const {
  std::vector<std::string> out;
  for (const Step &s : steps) {
    if (s.kind == StepKind::Label) out.push_back(s.name);
  }
  return out;
}

std::vector<unsigned> parse_index_set(std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  }
  if (compact.size() < 2 || compact.front() != '{' || compact.back() != '}') {
    throw ParseError("expected an index set like {1,2}", 0);
  }
  std::set<unsigned> out;
  const std::string_view body =
      std::string_view(compact).substr(1, compact.size() - 2);
  std::size_t pos = 0;
  while (pos < body.size()) {
    std::size_t comma = body.find(',', pos);
    if (comma == std::string_view::npos) comma = body.size();
    const std::string_view item = body.substr(pos, comma - pos);
    unsigned v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size() ||
        v == 0) {
      throw ParseError("bad index '" + std::string(item) + "' in set", pos);
    }
    if (!out.insert(v - 1).second) {
      throw ParseError("index " + std::to_string(v) + " repeated in set", pos);
    }
    pos = comma + 1;
    if (comma + 1 == body.size()) {
      throw ParseError("trailing comma in index set", comma);
    }
  }
  return {out.begin(), out.end()};
}

std::string render_index_set(const std::vector<unsigned> &indices) {
  std::string out = "{";
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(indices[i] + 1);
  }
  return out + "}";
}

Scenario parse_scenario(std::string_view text) {
  Scenario sc;
  std::set<std::string> labels;
  bool timeline_started = false;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    const auto tokens = split_ws(raw);
    if (tokens.empty()) continue;
    const std::string &head = tokens[0];

    if (head == "qubits") {
      if (sc.n != 0) throw line_error(line_no, "qubit count given twice");
      unsigned n = 0;
      if (tokens.size() == 2) {
        auto [ptr, ec] = std::from_chars(
            tokens[1].data(), tokens[1].data() + tokens[1].size(), n);
        if (ec != std::errc() || ptr != tokens[1].data() + tokens[1].size()) {
          n = 0;
        }
      }
      if (n == 0 || n > kMaxQubits) {
        throw line_error(line_no, "usage: qubits N with 1 <= N <= 64");
      }
      sc.n = n;
      continue;
    }
    if (sc.n == 0) throw line_error(line_no, "'qubits N' must come first");

    if (head == "prep" || head == "gate") {
      Gate g;
      try {
        g = parse_gate(std::span<const std::string>(tokens).subspan(1), sc.n);
      } catch (const ParseError &e) {
        throw line_error(line_no, e.what());
      }
      if (head == "prep") {
        if (timeline_started) {
          throw line_error(line_no, "prep gates must precede the timeline");
        }
        if (!g.is_clifford()) {
          throw line_error(line_no, "prep gates must be Clifford");
        }
        sc.prep.push_back(std::move(g));
      } else {
        timeline_started = true;
        sc.steps.push_back({StepKind::Gate, line_no, std::move(g), {}});
      }
    } else if (head == "factors") {
      if (sc.factors) throw line_error(line_no, "factors given twice");
      if (timeline_started) {
        throw line_error(line_no, "factors must precede the timeline");
      }
      std::vector<PauliWord> words;
      std::string rest = join(tokens, 1);
      std::size_t start = 0;
      while (true) {
        const std::size_t semi = rest.find(';', start);
        const std::string piece = rest.substr(
            start, semi == std::string::npos ? std::string::npos : semi - start);
        try {
          words.push_back(parse_pauli(piece, sc.n));
        } catch (const ParseError &e) {
          throw line_error(line_no, e.what());
        }
        if (semi == std::string::npos) break;
        start = semi + 1;
      }
      sc.factors = std::move(words);
      sc.factors_line = line_no;
    } else if (head == "label") {
      if (tokens.size() != 2) throw line_error(line_no, "usage: label NAME");
      if (!labels.insert(tokens[1]).second) {
        throw line_error(line_no, "duplicate label '" + tokens[1] + "'");
      }
      timeline_started = true;
      sc.steps.push_back({StepKind::Label, line_no, std::nullopt, tokens[1]});
    } else if (head == "branch") {
      if (tokens.size() != 2) throw line_error(line_no, "usage: branch LABEL");
      if (!labels.count(tokens[1])) {
        throw line_error(line_no, "branch from undefined label '" + tokens[1] +
                                      "'");
      }
      timeline_started = true;
      sc.steps.push_back({StepKind::Branch, line_no, std::nullopt, tokens[1]});
    } else if (head == "assert") {
      sc.assertions.push_back(parse_assertion(tokens, line_no, sc.n));
    } else {
      throw line_error(line_no, "unknown directive '" + head + "'");
    }
  }
  if (sc.n == 0) throw line_error(line_no, "missing 'qubits N'");
  for (const Assertion &a : sc.assertions) {
    for (const std::string *name : {&a.first, &a.second}) {
      if (!name->empty() && !labels.count(*name)) {
        throw line_error(a.line, "assertion references undefined label '" +
                                     *name + "'");
      }
    }
  }
  return sc;
}

Scenario load_scenario(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot read scenario file '" + path.string() + "'", 0,
                     true);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

}  // namespace locality_lab
