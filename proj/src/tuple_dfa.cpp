#include "addrep/tuple_dfa.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "addrep/digits.hpp"

namespace addrep {

int TupleDfa::letters() const { return letter_count(base, track_count()); }
int TupleNfa::letters() const { return letter_count(base, static_cast<int>(tracks.size())); }

namespace {

bool apply_connective(Connective op, bool x, bool y) {
  switch (op) {
    case Connective::And: return x && y;
    case Connective::Or: return x || y;
    case Connective::Implies: return !x || y;
    case Connective::Iff: return x == y;
  }
  return false;
}

// Letter translation table from the union track list down to a sub list.
std::vector<int> sub_letter_table(int base, const std::vector<std::string>& all,
                                  const std::vector<std::string>& sub) {
  std::vector<int> pos;
  pos.reserve(sub.size());
  for (const auto& t : sub) {
    auto it = std::find(all.begin(), all.end(), t);
    pos.push_back(static_cast<int>(it - all.begin()));
  }
  int nl = letter_count(base, static_cast<int>(all.size()));
  std::vector<int> tab(static_cast<std::size_t>(nl));
  for (int L = 0; L < nl; ++L) {
    int v = 0;
    for (int p : pos) v = v * base + letter_digit(base, static_cast<int>(all.size()), L, p);
    tab[static_cast<std::size_t>(L)] = v;
  }
  return tab;
}

// Completes the transition table by materializing the implicit sink, if any.
TupleDfa complete(const TupleDfa& a) {
  bool needs = false;
  for (const auto& row : a.next)
    for (std::int32_t t : row)
      if (t == kDeadState) needs = true;
  if (!needs) return a;
  TupleDfa b = a;
  std::int32_t sink = static_cast<std::int32_t>(b.state_count());
  for (auto& row : b.next)
    for (auto& t : row)
      if (t == kDeadState) t = sink;
  b.next.emplace_back(static_cast<std::size_t>(b.letters()), sink);
  b.accepting.push_back(false);
  return b;
}

}  // namespace

TupleDfa product(const TupleDfa& a, const TupleDfa& b, Connective op) {
  if (a.base != b.base) throw std::invalid_argument("product: base mismatch");
  std::set<std::string> names(a.tracks.begin(), a.tracks.end());
  names.insert(b.tracks.begin(), b.tracks.end());
  std::vector<std::string> tracks(names.begin(), names.end());
  std::vector<int> ta = sub_letter_table(a.base, tracks, a.tracks);
  std::vector<int> tb = sub_letter_table(a.base, tracks, b.tracks);
  int nl = letter_count(a.base, static_cast<int>(tracks.size()));

  auto step = [](const TupleDfa& m, std::int32_t s, int letter) -> std::int32_t {
    return s == kDeadState ? kDeadState : m.next[static_cast<std::size_t>(s)][static_cast<std::size_t>(letter)];
  };
  auto acc = [](const TupleDfa& m, std::int32_t s) {
    return s != kDeadState && m.accepting[static_cast<std::size_t>(s)];
  };

  std::map<std::pair<std::int32_t, std::int32_t>, std::int32_t> index;
  std::vector<std::pair<std::int32_t, std::int32_t>> order;
  auto state_id = [&](std::int32_t p, std::int32_t q) {
    auto key = std::make_pair(p, q);
    auto it = index.find(key);
    if (it != index.end()) return it->second;
    std::int32_t id = static_cast<std::int32_t>(order.size());
    index.emplace(key, id);
    order.push_back(key);
    return id;
  };

  TupleDfa out;
  out.base = a.base;
  out.tracks = tracks;
  out.initial = state_id(a.initial, b.initial);
  for (std::size_t i = 0; i < order.size(); ++i) {
    auto [p, q] = order[i];
    std::vector<std::int32_t> row(static_cast<std::size_t>(nl));
    for (int L = 0; L < nl; ++L)
      row[static_cast<std::size_t>(L)] =
          state_id(step(a, p, ta[static_cast<std::size_t>(L)]), step(b, q, tb[static_cast<std::size_t>(L)]));
    out.next.push_back(std::move(row));
    out.accepting.push_back(apply_connective(op, acc(a, p), acc(b, q)));
  }
  return out;
}

TupleDfa complement(const TupleDfa& a) {
  TupleDfa b = complete(a);
  for (std::size_t s = 0; s < b.accepting.size(); ++s) b.accepting[s] = !b.accepting[s];
  return minimize_dfa(b);
}

TupleNfa project(const TupleDfa& a, const std::string& var) {
  auto it = std::find(a.tracks.begin(), a.tracks.end(), var);
  if (it == a.tracks.end()) throw std::invalid_argument("project: unknown track " + var);
  TupleNfa out;
  out.base = a.base;
  out.tracks = a.tracks;
  out.tracks.erase(out.tracks.begin() + (it - a.tracks.begin()));
  std::vector<int> tab = sub_letter_table(a.base, a.tracks, out.tracks);
  int nl = letter_count(a.base, static_cast<int>(out.tracks.size()));
  out.initials = {static_cast<std::int32_t>(a.initial)};
  out.accepting = a.accepting;
  out.next.assign(a.accepting.size(), std::vector<std::vector<std::int32_t>>(static_cast<std::size_t>(nl)));
  for (int s = 0; s < a.state_count(); ++s) {
    for (int L = 0; L < a.letters(); ++L) {
      std::int32_t t = a.next[static_cast<std::size_t>(s)][static_cast<std::size_t>(L)];
      if (t == kDeadState) continue;
      out.next[static_cast<std::size_t>(s)][static_cast<std::size_t>(tab[static_cast<std::size_t>(L)])].push_back(t);
    }
  }
  for (auto& per_state : out.next)
    for (auto& targets : per_state) {
      std::sort(targets.begin(), targets.end());
      targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    }
  return out;
}

TupleDfa determinize(const TupleNfa& a) {
  int nl = a.letters();
  // Zero-closure of the initial set: a word must stay accepted when all-zero
  // letters are stripped from the front, so start from every state reachable
  // by reading only zero letters.
  std::set<std::int32_t> init(a.initials.begin(), a.initials.end());
  std::vector<std::int32_t> frontier(init.begin(), init.end());
  while (!frontier.empty()) {
    std::int32_t s = frontier.back();
    frontier.pop_back();
    for (std::int32_t t : a.next[static_cast<std::size_t>(s)][0])
      if (init.insert(t).second) frontier.push_back(t);
  }

  std::map<std::vector<std::int32_t>, std::int32_t> index;
  std::vector<std::vector<std::int32_t>> order;
  auto state_id = [&](std::vector<std::int32_t> set) -> std::int32_t {
    if (set.empty()) return kDeadState;
    auto it = index.find(set);
    if (it != index.end()) return it->second;
    std::int32_t id = static_cast<std::int32_t>(order.size());
    index.emplace(set, id);
    order.push_back(std::move(set));
    return id;
  };

  TupleDfa out;
  out.base = a.base;
  out.tracks = a.tracks;
  out.initial = state_id(std::vector<std::int32_t>(init.begin(), init.end()));
  if (out.initial == kDeadState) {
    // No initial states at all: the empty automaton.
    out.initial = 0;
    out.next.push_back(std::vector<std::int32_t>(static_cast<std::size_t>(nl), kDeadState));
    out.accepting.push_back(false);
    return out;
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    std::vector<std::int32_t> cur = order[i];
    std::vector<std::int32_t> row(static_cast<std::size_t>(nl));
    for (int L = 0; L < nl; ++L) {
      std::set<std::int32_t> tgt;
      for (std::int32_t s : cur)
        tgt.insert(a.next[static_cast<std::size_t>(s)][static_cast<std::size_t>(L)].begin(),
                   a.next[static_cast<std::size_t>(s)][static_cast<std::size_t>(L)].end());
      row[static_cast<std::size_t>(L)] = state_id(std::vector<std::int32_t>(tgt.begin(), tgt.end()));
    }
    bool acc = false;
    for (std::int32_t s : cur) acc = acc || a.accepting[static_cast<std::size_t>(s)];
    out.next.push_back(std::move(row));
    out.accepting.push_back(acc);
  }
  return out;
}

TupleDfa minimize_dfa(const TupleDfa& input) {
  TupleDfa a = complete(input);
  int n = a.state_count();
  int nl = a.letters();

  // Moore partition refinement.
  std::vector<int> cls(static_cast<std::size_t>(n));
  for (int s = 0; s < n; ++s) cls[static_cast<std::size_t>(s)] = a.accepting[static_cast<std::size_t>(s)] ? 1 : 0;
  int ncls = 0;
  {
    std::set<int> distinct(cls.begin(), cls.end());
    ncls = static_cast<int>(distinct.size());
  }
  while (true) {
    std::map<std::vector<int>, int> sig_ids;
    std::vector<int> next_cls(static_cast<std::size_t>(n));
    for (int s = 0; s < n; ++s) {
      std::vector<int> sig;
      sig.reserve(static_cast<std::size_t>(nl) + 1);
      sig.push_back(cls[static_cast<std::size_t>(s)]);
      for (int L = 0; L < nl; ++L)
        sig.push_back(cls[static_cast<std::size_t>(a.next[static_cast<std::size_t>(s)][static_cast<std::size_t>(L)])]);
      auto [it, inserted] = sig_ids.emplace(std::move(sig), static_cast<int>(sig_ids.size()));
      next_cls[static_cast<std::size_t>(s)] = it->second;
      (void)inserted;
    }
    int nn = static_cast<int>(sig_ids.size());
    cls = std::move(next_cls);
    if (nn == ncls) break;
    ncls = nn;
  }

  // Representatives and the dead class (non-accepting total self-loop).
  std::vector<int> rep(static_cast<std::size_t>(ncls), -1);
  for (int s = 0; s < n; ++s)
    if (rep[static_cast<std::size_t>(cls[static_cast<std::size_t>(s)])] < 0)
      rep[static_cast<std::size_t>(cls[static_cast<std::size_t>(s)])] = s;
  auto class_step = [&](int c, int L) {
    int s = rep[static_cast<std::size_t>(c)];
    return cls[static_cast<std::size_t>(a.next[static_cast<std::size_t>(s)][static_cast<std::size_t>(L)])];
  };
  int dead_class = -1;
  for (int c = 0; c < ncls; ++c) {
    if (a.accepting[static_cast<std::size_t>(rep[static_cast<std::size_t>(c)])]) continue;
    bool self = true;
    for (int L = 0; L < nl && self; ++L) self = (class_step(c, L) == c);
    if (self) {
      dead_class = c;
      break;  // at most one such class in a minimal automaton
    }
  }
  int init_class = cls[static_cast<std::size_t>(a.initial)];
  if (dead_class == init_class) dead_class = -1;  // keep an initial sink explicit

  // Canonical numbering: BFS from the initial class, letters ascending.
  std::vector<int> number(static_cast<std::size_t>(ncls), -1);
  std::vector<int> bfs;
  number[static_cast<std::size_t>(init_class)] = 0;
  bfs.push_back(init_class);
  for (std::size_t i = 0; i < bfs.size(); ++i) {
    int c = bfs[i];
    for (int L = 0; L < nl; ++L) {
      int t = class_step(c, L);
      if (t == dead_class) continue;
      if (number[static_cast<std::size_t>(t)] < 0) {
        number[static_cast<std::size_t>(t)] = static_cast<int>(bfs.size());
        bfs.push_back(t);
      }
    }
  }

  TupleDfa out;
  out.base = a.base;
  out.tracks = a.tracks;
  out.initial = 0;
  for (int c : bfs) {
    std::vector<std::int32_t> row(static_cast<std::size_t>(nl));
    for (int L = 0; L < nl; ++L) {
      int t = class_step(c, L);
      row[static_cast<std::size_t>(L)] =
          (t == dead_class || number[static_cast<std::size_t>(t)] < 0)
              ? kDeadState
              : static_cast<std::int32_t>(number[static_cast<std::size_t>(t)]);
    }
    out.next.push_back(std::move(row));
    out.accepting.push_back(a.accepting[static_cast<std::size_t>(rep[static_cast<std::size_t>(c)])]);
  }
  return out;
}

bool accepts(const TupleDfa& a, const std::map<std::string, std::uint64_t>& values) {
  return accepts_word(a, encode_tuple_word(a.base, a.tracks, values));
}

bool accepts_word(const TupleDfa& a, const std::vector<int>& letters) {
  std::int32_t s = static_cast<std::int32_t>(a.initial);
  for (int L : letters) {
    s = a.next[static_cast<std::size_t>(s)][static_cast<std::size_t>(L)];
    if (s == kDeadState) return false;
  }
  return a.accepting[static_cast<std::size_t>(s)];
}

bool accepts_word(const TupleNfa& a, const std::vector<int>& letters) {
  std::set<std::int32_t> cur(a.initials.begin(), a.initials.end());
  for (int L : letters) {
    std::set<std::int32_t> nxt;
    for (std::int32_t s : cur)
      nxt.insert(a.next[static_cast<std::size_t>(s)][static_cast<std::size_t>(L)].begin(),
                 a.next[static_cast<std::size_t>(s)][static_cast<std::size_t>(L)].end());
    cur = std::move(nxt);
  }
  for (std::int32_t s : cur)
    if (a.accepting[static_cast<std::size_t>(s)]) return true;
  return false;
}

std::string to_dot(const TupleDfa& a) {
  std::ostringstream out;
  out << "digraph tupledfa {\n  rankdir=LR;\n  node [shape=circle];\n";
  out << "  init [shape=point];\n  init -> s" << a.initial << ";\n";
  for (int s = 0; s < a.state_count(); ++s) {
    out << "  s" << s << " [label=\"" << s << "\"";
    if (a.accepting[static_cast<std::size_t>(s)]) out << ", shape=doublecircle";
    out << "];\n";
  }
  int d = a.track_count();
  for (int s = 0; s < a.state_count(); ++s) {
    for (int L = 0; L < a.letters(); ++L) {
      std::int32_t t = a.next[static_cast<std::size_t>(s)][static_cast<std::size_t>(L)];
      if (t == kDeadState) continue;
      out << "  s" << s << " -> s" << t << " [label=\"";
      for (int p = 0; p < d; ++p) {
        if (p) out << ",";
        out << letter_digit(a.base, d, L, p);
      }
      out << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string serialize(const TupleDfa& a) {
  std::ostringstream out;
  out << "base " << a.base << "\n";
  out << "tracks";
  for (const auto& t : a.tracks) out << " " << t;
  out << "\n";
  out << "states " << a.state_count() << "\n";
  out << "initial " << a.initial << "\n";
  out << "accepting";
  for (int s = 0; s < a.state_count(); ++s)
    if (a.accepting[static_cast<std::size_t>(s)]) out << " " << s;
  out << "\n";
  for (int s = 0; s < a.state_count(); ++s) {
    out << "trans " << s << ":";
    for (int L = 0; L < a.letters(); ++L) out << " " << a.next[static_cast<std::size_t>(s)][static_cast<std::size_t>(L)];
    out << "\n";
  }
  return out.str();
}

TupleDfa parse_tuple_dfa(const std::string& text) {
  std::istringstream in(text);
  std::string kw;
  TupleDfa a;
  if (!(in >> kw) || kw != "base" || !(in >> a.base)) throw std::invalid_argument("automaton file: expected 'base k'");
  if (!(in >> kw) || kw != "tracks") throw std::invalid_argument("automaton file: expected 'tracks ...'");
  std::string rest;
  std::getline(in, rest);
  {
    std::istringstream ts(rest);
    std::string t;
    while (ts >> t) a.tracks.push_back(t);
  }
  int n;
  if (!(in >> kw) || kw != "states" || !(in >> n)) throw std::invalid_argument("automaton file: expected 'states n'");
  if (!(in >> kw) || kw != "initial" || !(in >> a.initial))
    throw std::invalid_argument("automaton file: expected 'initial s'");
  if (!(in >> kw) || kw != "accepting") throw std::invalid_argument("automaton file: expected 'accepting ...'");
  std::getline(in, rest);
  a.accepting.assign(static_cast<std::size_t>(n), false);
  {
    std::istringstream as(rest);
    int s;
    while (as >> s) {
      if (s < 0 || s >= n) throw std::invalid_argument("automaton file: accepting state out of range");
      a.accepting[static_cast<std::size_t>(s)] = true;
    }
  }
  int nl = letter_count(a.base, static_cast<int>(a.tracks.size()));
  a.next.assign(static_cast<std::size_t>(n), std::vector<std::int32_t>(static_cast<std::size_t>(nl), kDeadState));
  for (int i = 0; i < n; ++i) {
    std::string label;
    if (!(in >> kw) || kw != "trans" || !(in >> label))
      throw std::invalid_argument("automaton file: expected 'trans s:'");
    int s = std::stoi(label);
    for (int L = 0; L < nl; ++L) {
      int t;
      if (!(in >> t)) throw std::invalid_argument("automaton file: truncated transition row");
      if (t < kDeadState || t >= n) throw std::invalid_argument("automaton file: transition out of range");
      a.next[static_cast<std::size_t>(s)][static_cast<std::size_t>(L)] = static_cast<std::int32_t>(t);
    }
  }
  return a;
}

}  // namespace addrep
