#include "addrep/dfao.hpp"

#include <map>
#include <sstream>
#include <vector>

#include "addrep/digits.hpp"

namespace addrep {

int Dfao::value(std::uint64_t n) const {
  int s = initial;
  for (int d : canonical_digits(base, n)) s = next[static_cast<std::size_t>(s)][static_cast<std::size_t>(d)];
  return outputs[static_cast<std::size_t>(s)];
}

namespace {

struct Line {
  std::string text;
  int number;  // 1-based
};

std::vector<Line> split_lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    out.push_back({line, no});
  }
  return out;
}

bool is_blank(const std::string& s) {
  return s.find_first_not_of(" \t") == std::string::npos;
}

}  // namespace

Dfao parse_dfao(const std::string& text) {
  auto lines = split_lines(text);
  std::size_t i = 0;
  while (i < lines.size() && is_blank(lines[i].text)) ++i;
  if (i == lines.size()) throw DfaoParseError("empty automaton file", 1);

  // header msd_k
  {
    std::istringstream hs(lines[i].text);
    std::string word, extra;
    hs >> word;
    if (hs >> extra) throw DfaoParseError("unexpected text after header", lines[i].number);
    if (word.rfind("msd_", 0) != 0)
      throw DfaoParseError("unknown header '" + word + "' (expected msd_k)", lines[i].number);
    std::string base_part = word.substr(4);
    if (base_part.empty() || base_part.find_first_not_of("0123456789") != std::string::npos)
      throw DfaoParseError("unknown header '" + word + "'", lines[i].number);
    int k = std::stoi(base_part);
    if (k < 2) throw DfaoParseError("base must be at least 2", lines[i].number);
    ++i;

    struct Block {
      int state, output, line;
      std::vector<int> targets;  // per digit, -1 = missing
    };
    std::vector<Block> blocks;
    std::map<int, int> declared;  // state -> block index

    while (i < lines.size()) {
      if (is_blank(lines[i].text)) {
        ++i;
        continue;
      }
      std::istringstream ss(lines[i].text);
      int state, output;
      std::string trail;
      if (!(ss >> state >> output) || (ss >> trail))
        throw DfaoParseError("expected 'state output'", lines[i].number);
      if (declared.count(state))
        throw DfaoParseError("duplicate state " + std::to_string(state), lines[i].number);
      Block b{state, output, lines[i].number, std::vector<int>(static_cast<std::size_t>(k), -1)};
      ++i;
      while (i < lines.size() && !is_blank(lines[i].text)) {
        std::istringstream ts(lines[i].text);
        int digit, target;
        std::string arrow, rest;
        if (!(ts >> digit >> arrow >> target) || arrow != "->" || (ts >> rest))
          throw DfaoParseError("expected 'digit -> state'", lines[i].number);
        if (digit < 0 || digit >= k)
          throw DfaoParseError("digit " + std::to_string(digit) + " out of range for base " +
                                   std::to_string(k),
                               lines[i].number);
        if (b.targets[static_cast<std::size_t>(digit)] != -1)
          throw DfaoParseError("duplicate transition for digit " + std::to_string(digit),
                               lines[i].number);
        b.targets[static_cast<std::size_t>(digit)] = target;
        ++i;
      }
      declared[state] = static_cast<int>(blocks.size());
      blocks.push_back(std::move(b));
    }
    if (blocks.empty()) throw DfaoParseError("no states declared", lines.back().number);

    for (const auto& b : blocks) {
      for (int d = 0; d < k; ++d) {
        int t = b.targets[static_cast<std::size_t>(d)];
        if (t == -1)
          throw DfaoParseError("state " + std::to_string(b.state) + " is missing the transition for digit " +
                                   std::to_string(d),
                               b.line);
        if (!declared.count(t))
          throw DfaoParseError("transition to undeclared state " + std::to_string(t), b.line);
      }
    }

    // Normalization pass: keep only states reachable from the initial block,
    // renumbering in declaration order.
    std::vector<bool> seen(blocks.size(), false);
    std::vector<int> stack = {0};
    seen[0] = true;
    while (!stack.empty()) {
      int bi = stack.back();
      stack.pop_back();
      for (int t : blocks[static_cast<std::size_t>(bi)].targets) {
        int ti = declared[t];
        if (!seen[static_cast<std::size_t>(ti)]) {
          seen[static_cast<std::size_t>(ti)] = true;
          stack.push_back(ti);
        }
      }
    }
    std::map<int, int> renum;  // old state id -> new index
    std::vector<int> keep;
    for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
      if (seen[bi]) {
        renum[blocks[bi].state] = static_cast<int>(keep.size());
        keep.push_back(static_cast<int>(bi));
      }
    }

    Dfao m;
    m.base = k;
    m.initial = 0;
    for (int bi : keep) {
      const auto& b = blocks[static_cast<std::size_t>(bi)];
      m.outputs.push_back(b.output);
      std::vector<int> row;
      row.reserve(static_cast<std::size_t>(k));
      for (int t : b.targets) row.push_back(renum[t]);
      m.next.push_back(std::move(row));
    }
    // Preserve the file's numbering when it was already 0..n-1 in order.
    bool identity = true;
    for (std::size_t j = 0; j < keep.size(); ++j)
      if (blocks[static_cast<std::size_t>(keep[j])].state != static_cast<int>(j)) identity = false;
    (void)identity;
    return m;
  }
}

std::string to_walnut(const Dfao& m) {
  std::ostringstream out;
  out << "msd_" << m.base << "\n";
  for (int s = 0; s < m.state_count(); ++s) {
    int q = (s == 0) ? m.initial : (s <= m.initial ? s - 1 : s);
    out << q << " " << m.outputs[static_cast<std::size_t>(q)] << "\n";
    for (int d = 0; d < m.base; ++d)
      out << d << " -> " << m.next[static_cast<std::size_t>(q)][static_cast<std::size_t>(d)] << "\n";
    if (s + 1 < m.state_count()) out << "\n";
  }
  return out.str();
}

std::string to_dot(const Dfao& m) {
  std::ostringstream out;
  out << "digraph dfao {\n  rankdir=LR;\n  node [shape=circle];\n";
  out << "  init [shape=point];\n  init -> s" << m.initial << ";\n";
  for (int s = 0; s < m.state_count(); ++s)
    out << "  s" << s << " [label=\"" << s << "/" << m.outputs[static_cast<std::size_t>(s)] << "\"];\n";
  for (int s = 0; s < m.state_count(); ++s)
    for (int d = 0; d < m.base; ++d)
      out << "  s" << s << " -> s" << m.next[static_cast<std::size_t>(s)][static_cast<std::size_t>(d)]
          << " [label=\"" << d << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace addrep
