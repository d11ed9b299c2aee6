// Copyright 2026 The treeaut Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "automaton.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <map>
#include <sstream>
#include <unordered_map>
#include <utility>

#include "error.hpp"

namespace treeaut {

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(std::vector<Symbol> images)
    : images_(std::move(images)) {
  if (!is_bijection(images_)) {
    throw Error(ErrorCode::kInvalidArgument, "images are not a bijection");
  }
}

Permutation Permutation::identity(std::size_t k) { return rotation(k, 0); }

Permutation Permutation::rotation(std::size_t k, std::size_t shift) {
  std::vector<Symbol> images(k);
  for (std::size_t i = 0; i < k; ++i) {
    images[i] = static_cast<Symbol>((i + shift) % k);
  }
  return Permutation(std::move(images));
}

bool Permutation::is_bijection(std::span<const Symbol> images) noexcept {
  std::vector<bool> seen(images.size(), false);
  for (Symbol s : images) {
    if (s >= images.size() || seen[s]) return false;
    seen[s] = true;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Symbol> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    inv[images_[i]] = static_cast<Symbol>(i);
  }
  return Permutation(std::move(inv));
}

std::optional<std::size_t> Permutation::rotation_amount() const noexcept {
  const std::size_t k = images_.size();
  if (k == 0) return std::nullopt;
  const std::size_t shift = images_[0];
  for (std::size_t i = 0; i < k; ++i) {
    if (images_[i] != (i + shift) % k) return std::nullopt;
  }
  return shift;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  std::vector<Symbol> images(q.size());
  for (std::size_t a = 0; a < q.size(); ++a) images[a] = p(q(a));
  return Permutation(std::move(images));
}

// ---------------------------------------------------------------------------
// MealyAutomaton / InitialAutomaton / AbelianLabels

MealyAutomaton::MealyAutomaton(std::size_t alphabet_size,
                               std::vector<std::string> names,
                               std::vector<std::vector<StateIndex>> delta,
                               std::vector<Permutation> output)
    : k_(alphabet_size),
      names_(std::move(names)),
      delta_(std::move(delta)),
      output_(std::move(output)) {
  if (k_ < 2) {
    throw Error(ErrorCode::kInvalidArgument, "alphabet size must be >= 2");
  }
  if (names_.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "automaton has no states");
  }
  if (delta_.size() != names_.size() || output_.size() != names_.size()) {
    throw Error(ErrorCode::kInvalidArgument, "table sizes disagree");
  }
  for (std::size_t q = 0; q < names_.size(); ++q) {
    if (delta_[q].size() != k_ || output_[q].size() != k_) {
      throw Error(ErrorCode::kInvalidArgument,
                  "row of state '" + names_[q] + "' has wrong width");
    }
    for (StateIndex t : delta_[q]) {
      if (t >= names_.size()) {
        throw Error(ErrorCode::kInvalidArgument,
                    "transition target out of range in state '" + names_[q] +
                        "'");
      }
    }
    for (std::size_t r = 0; r < q; ++r) {
      if (names_[r] == names_[q]) {
        throw Error(ErrorCode::kInvalidArgument,
                    "duplicate state name '" + names_[q] + "'");
      }
    }
  }
}

std::optional<StateIndex> MealyAutomaton::find(std::string_view name) const {
  for (std::size_t q = 0; q < names_.size(); ++q) {
    if (names_[q] == name) return static_cast<StateIndex>(q);
  }
  return std::nullopt;
}

InitialAutomaton::InitialAutomaton(
    std::shared_ptr<const MealyAutomaton> automaton, StateIndex initial)
    : automaton_(std::move(automaton)), initial_(initial) {
  if (!automaton_ || initial_ >= automaton_->state_count()) {
    throw Error(ErrorCode::kInvalidArgument, "initial state out of range");
  }
}

InitialAutomaton::InitialAutomaton(MealyAutomaton automaton,
                                   StateIndex initial)
    : InitialAutomaton(
          std::make_shared<const MealyAutomaton>(std::move(automaton)),
          initial) {}

void AbelianLabels::check(std::size_t states) const {
  if (moduli.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "abelian group has no factors");
  }
  for (Residue m : moduli) {
    if (m < 2) {
      throw Error(ErrorCode::kInvalidArgument, "modulus must be >= 2");
    }
  }
  if (labels.size() != states) {
    throw Error(ErrorCode::kInvalidArgument, "label table has wrong size");
  }
  for (const auto& row : labels) {
    if (row.size() != moduli.size()) {
      throw Error(ErrorCode::kInvalidArgument, "label has wrong arity");
    }
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (row[i] >= moduli[i]) {
        throw Error(ErrorCode::kInvalidArgument, "label residue out of range");
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Parsing and serialization

namespace {

bool valid_name(std::string_view name) {
  if (name.empty()) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
           (c >= '0' && c <= '9') || c == '_';
  });
}

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f';
  };
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    std::size_t j = i;
    while (j < line.size() && !is_space(line[j])) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::uint64_t parse_number(std::string_view tok, std::size_t line) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw SyntaxError(line, "expected a nonnegative integer, got '" +
                                std::string(tok) + "'");
  }
  return value;
}

struct PendingState {
  std::string name;
  std::vector<Symbol> images;
  std::vector<std::string> targets;
  std::size_t line;
};

struct PendingLabel {
  std::string name;
  std::vector<Residue> residues;
  std::size_t line;
};

}  // namespace

AutomatonFile parse_automaton(std::string_view text) {
  std::optional<std::size_t> k;
  std::vector<PendingState> states;
  std::optional<std::pair<std::string, std::size_t>> initial;
  std::optional<std::pair<std::vector<Residue>, std::size_t>> abelian;
  std::vector<PendingLabel> labels;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    auto tok = split_tokens(line);
    if (tok.empty()) continue;

    const std::string_view kw = tok[0];
    if (kw == "alphabet") {
      if (k) throw SyntaxError(line_no, "duplicate 'alphabet'");
      if (tok.size() != 2) throw SyntaxError(line_no, "usage: alphabet <k>");
      std::uint64_t value = parse_number(tok[1], line_no);
      if (value < 2 || value > (1u << 20)) {
        throw SyntaxError(line_no, "alphabet size must be in 2..2^20");
      }
      k = static_cast<std::size_t>(value);
    } else if (kw == "state") {
      if (!k) {
        throw Error(ErrorCode::kMissingAlphabet,
                    "line " + std::to_string(line_no) +
                        ": 'state' before 'alphabet'");
      }
      const std::size_t width = *k;
      if (tok.size() != 4 + 2 * width || tok[2] != "perm" ||
          tok[3 + width] != "to") {
        throw SyntaxError(line_no, "usage: state <name> perm <" +
                                       std::to_string(width) + " symbols> to <" +
                                       std::to_string(width) + " states>");
      }
      if (!valid_name(tok[1])) {
        throw SyntaxError(line_no,
                          "invalid state name '" + std::string(tok[1]) + "'");
      }
      PendingState st{std::string(tok[1]), {}, {}, line_no};
      for (const auto& other : states) {
        if (other.name == st.name) {
          throw SyntaxError(line_no, "duplicate state '" + st.name + "'");
        }
      }
      for (std::size_t i = 0; i < width; ++i) {
        std::uint64_t s = parse_number(tok[3 + i], line_no);
        st.images.push_back(s < width ? static_cast<Symbol>(s)
                                      : static_cast<Symbol>(width));
      }
      for (std::size_t i = 0; i < width; ++i) {
        st.targets.emplace_back(tok[4 + width + i]);
      }
      if (!Permutation::is_bijection(st.images)) {
        throw Error(ErrorCode::kBadPermutation,
                    "line " + std::to_string(line_no) + ": state '" + st.name +
                        "' output row is not a permutation of 0.." +
                        std::to_string(width - 1));
      }
      states.push_back(std::move(st));
    } else if (kw == "initial") {
      if (initial) throw SyntaxError(line_no, "duplicate 'initial'");
      if (tok.size() != 2) throw SyntaxError(line_no, "usage: initial <name>");
      initial.emplace(std::string(tok[1]), line_no);
    } else if (kw == "abelian") {
      if (abelian) throw SyntaxError(line_no, "duplicate 'abelian'");
      if (tok.size() < 2) {
        throw SyntaxError(line_no, "usage: abelian <m1> ... <mr>");
      }
      std::vector<Residue> moduli;
      for (std::size_t i = 1; i < tok.size(); ++i) {
        Residue m = parse_number(tok[i], line_no);
        if (m < 2 || m > (Residue{1} << 32)) {
          throw SyntaxError(line_no, "modulus must be in 2..2^32");
        }
        moduli.push_back(m);
      }
      abelian.emplace(std::move(moduli), line_no);
    } else if (kw == "label") {
      if (tok.size() < 3) {
        throw SyntaxError(line_no, "usage: label <name> <c1> ... <cr>");
      }
      PendingLabel lab{std::string(tok[1]), {}, line_no};
      for (std::size_t i = 2; i < tok.size(); ++i) {
        lab.residues.push_back(parse_number(tok[i], line_no));
      }
      labels.push_back(std::move(lab));
    } else {
      throw SyntaxError(line_no,
                        "unknown directive '" + std::string(kw) + "'");
    }
  }

  if (!k) throw Error(ErrorCode::kMissingAlphabet, "no 'alphabet' line");
  if (states.empty()) throw SyntaxError(line_no, "no states declared");

  auto lookup = [&](const std::string& name,
                    std::size_t line) -> StateIndex {
    for (std::size_t q = 0; q < states.size(); ++q) {
      if (states[q].name == name) return static_cast<StateIndex>(q);
    }
    throw Error(ErrorCode::kUnknownState, "line " + std::to_string(line) +
                                              ": unknown state '" + name + "'");
  };

  std::vector<std::string> names;
  std::vector<std::vector<StateIndex>> delta;
  std::vector<Permutation> output;
  for (const auto& st : states) {
    names.push_back(st.name);
    std::vector<StateIndex> row;
    for (const auto& target : st.targets) row.push_back(lookup(target, st.line));
    delta.push_back(std::move(row));
    output.emplace_back(st.images);
  }

  AutomatonFile file{
      MealyAutomaton(*k, std::move(names), std::move(delta), std::move(output)),
      std::nullopt, std::nullopt};
  if (initial) file.initial = lookup(initial->first, initial->second);

  if (!abelian && !labels.empty()) {
    throw SyntaxError(labels.front().line, "'label' without 'abelian'");
  }
  if (abelian) {
    const auto& moduli = abelian->first;
    AbelianLabels lab{moduli, {}};
    std::vector<std::optional<std::vector<Residue>>> rows(states.size());
    for (const auto& l : labels) {
      StateIndex q = lookup(l.name, l.line);
      if (rows[q]) {
        throw SyntaxError(l.line, "duplicate label for state '" + l.name + "'");
      }
      if (l.residues.size() != moduli.size()) {
        throw SyntaxError(l.line, "label arity differs from 'abelian' line");
      }
      for (std::size_t i = 0; i < moduli.size(); ++i) {
        if (l.residues[i] >= moduli[i]) {
          throw SyntaxError(l.line, "residue " + std::to_string(l.residues[i]) +
                                        " out of range mod " +
                                        std::to_string(moduli[i]));
        }
      }
      rows[q] = l.residues;
    }
    for (std::size_t q = 0; q < rows.size(); ++q) {
      if (!rows[q]) {
        throw SyntaxError(abelian->second,
                          "missing label for state '" + states[q].name + "'");
      }
      lab.labels.push_back(*rows[q]);
    }
    file.labels = std::move(lab);
  }
  return file;
}

std::string serialize_automaton(const AutomatonFile& file) {
  const MealyAutomaton& m = file.automaton;
  std::ostringstream os;
  os << "alphabet " << m.alphabet_size() << '\n';
  for (StateIndex q = 0; q < m.state_count(); ++q) {
    os << "state " << m.name(q) << " perm";
    for (Symbol s : m.output(q).images()) os << ' ' << s;
    os << " to";
    for (StateIndex t : m.transitions(q)) os << ' ' << m.name(t);
    os << '\n';
  }
  if (file.initial) os << "initial " << m.name(*file.initial) << '\n';
  if (file.labels) {
    os << "abelian";
    for (Residue mod : file.labels->moduli) os << ' ' << mod;
    os << '\n';
    for (StateIndex q = 0; q < m.state_count(); ++q) {
      os << "label " << m.name(q);
      for (Residue c : file.labels->labels[q]) os << ' ' << c;
      os << '\n';
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Labels

AbelianLabels validate_cyclic(const MealyAutomaton& m) {
  AbelianLabels out{{static_cast<Residue>(m.alphabet_size())}, {}};
  for (StateIndex q = 0; q < m.state_count(); ++q) {
    auto shift = m.output(q).rotation_amount();
    if (!shift) {
      throw Error(ErrorCode::kNotCyclic,
                  "state '" + m.name(q) + "' output is not a power of the " +
                      std::to_string(m.alphabet_size()) + "-cycle");
    }
    out.labels.push_back({static_cast<Residue>(*shift)});
  }
  return out;
}

AbelianLabels effective_labels(const AutomatonFile& file) {
  if (file.labels) return *file.labels;
  return validate_cyclic(file.automaton);
}

// ---------------------------------------------------------------------------
// Action

namespace {

void check_word(std::size_t k, std::span<const Symbol> word) {
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (word[i] >= k) {
      throw Error(ErrorCode::kBadSymbol,
                  "symbol " + std::to_string(word[i]) + " at position " +
                      std::to_string(i) + " is outside 0.." +
                      std::to_string(k - 1));
    }
  }
}

void check_same_alphabet(const InitialAutomaton& f, const InitialAutomaton& g) {
  if (f.alphabet_size() != g.alphabet_size()) {
    throw Error(ErrorCode::kAlphabetMismatch,
                "alphabet sizes differ: " + std::to_string(f.alphabet_size()) +
                    " vs " + std::to_string(g.alphabet_size()));
  }
}

}  // namespace

Word apply(const InitialAutomaton& g, std::span<const Symbol> word) {
  const MealyAutomaton& m = g.automaton();
  check_word(m.alphabet_size(), word);
  Word out;
  out.reserve(word.size());
  StateIndex q = g.initial();
  for (Symbol a : word) {
    out.push_back(m.output(q)(a));
    q = m.next(q, a);
  }
  return out;
}

InitialAutomaton section(const InitialAutomaton& g,
                         std::span<const Symbol> word) {
  const MealyAutomaton& m = g.automaton();
  check_word(m.alphabet_size(), word);
  StateIndex q = g.initial();
  for (Symbol a : word) q = m.next(q, a);
  return InitialAutomaton(g.shared(), q);
}

InitialAutomaton inverse(const InitialAutomaton& g) {
  const MealyAutomaton& m = g.automaton();
  const std::size_t k = m.alphabet_size();
  std::vector<std::vector<StateIndex>> delta(m.state_count());
  std::vector<Permutation> output;
  for (StateIndex q = 0; q < m.state_count(); ++q) {
    Permutation inv = m.output(q).inverse();
    delta[q].resize(k);
    for (Symbol b = 0; b < k; ++b) delta[q][b] = m.next(q, inv(b));
    output.push_back(std::move(inv));
  }
  std::vector<std::string> names(m.names().begin(), m.names().end());
  return InitialAutomaton(
      MealyAutomaton(k, std::move(names), std::move(delta), std::move(output)),
      g.initial());
}

namespace {

// Gives each product state a unique name derived from its components.
std::vector<std::string> pair_names(
    const MealyAutomaton& a, const MealyAutomaton& b,
    const std::vector<std::pair<StateIndex, StateIndex>>& pairs) {
  std::vector<std::string> names;
  std::map<std::string, int> used;
  for (const auto& [p, q] : pairs) {
    std::string base = a.name(p) + "_" + b.name(q);
    std::string name = base;
    for (int n = 1; used.count(name); ++n) {
      name = base + "_" + std::to_string(n);
    }
    used[name] = 1;
    names.push_back(std::move(name));
  }
  return names;
}

InitialAutomaton compose_impl(
    const InitialAutomaton& f, const InitialAutomaton& g,
    std::vector<std::pair<StateIndex, StateIndex>>& pairs) {
  check_same_alphabet(f, g);
  const MealyAutomaton& fa = f.automaton();
  const MealyAutomaton& ga = g.automaton();
  const std::size_t k = fa.alphabet_size();

  std::map<std::pair<StateIndex, StateIndex>, StateIndex> index;
  std::deque<std::pair<StateIndex, StateIndex>> queue;
  pairs.clear();
  auto intern = [&](std::pair<StateIndex, StateIndex> key) {
    auto [it, fresh] =
        index.emplace(key, static_cast<StateIndex>(pairs.size()));
    if (fresh) {
      pairs.push_back(key);
      queue.push_back(key);
    }
    return it->second;
  };
  intern({f.initial(), g.initial()});

  std::vector<std::vector<StateIndex>> delta;
  std::vector<Permutation> output;
  while (!queue.empty()) {
    auto [p, q] = queue.front();
    queue.pop_front();
    const Permutation& lp = fa.output(p);
    const Permutation& lq = ga.output(q);
    std::vector<StateIndex> row(k);
    for (Symbol a = 0; a < k; ++a) {
      row[a] = intern({fa.next(p, lq(a)), ga.next(q, a)});
    }
    delta.push_back(std::move(row));
    output.push_back(lp * lq);
  }
  return InitialAutomaton(MealyAutomaton(k, pair_names(fa, ga, pairs),
                                         std::move(delta), std::move(output)),
                          0);
}

// Coarsest partition of `m`'s states that refines `initial_class` and is
// stable under every transition.  Classes are numbered by first occurrence.
std::vector<std::size_t> refine_partition(
    const MealyAutomaton& m, std::vector<std::size_t> initial_class) {
  const std::size_t n = m.state_count();
  const std::size_t k = m.alphabet_size();
  std::vector<std::size_t> cls = std::move(initial_class);
  std::size_t count = 0;
  for (;;) {
    std::map<std::vector<std::size_t>, std::size_t> ids;
    std::vector<std::size_t> next(n);
    for (StateIndex q = 0; q < n; ++q) {
      std::vector<std::size_t> sig;
      sig.reserve(k + 1);
      sig.push_back(cls[q]);
      for (Symbol a = 0; a < k; ++a) sig.push_back(cls[m.next(q, a)]);
      auto [it, fresh] = ids.emplace(std::move(sig), ids.size());
      next[q] = it->second;
    }
    const std::size_t new_count = ids.size();
    cls = std::move(next);
    if (new_count == count) break;
    count = new_count;
  }
  return cls;
}

std::vector<std::size_t> classes_by_key(
    const std::vector<std::vector<std::uint64_t>>& keys) {
  std::map<std::vector<std::uint64_t>, std::size_t> ids;
  std::vector<std::size_t> cls;
  cls.reserve(keys.size());
  for (const auto& key : keys) {
    cls.push_back(ids.emplace(key, ids.size()).first->second);
  }
  return cls;
}

std::vector<std::uint64_t> output_key(const MealyAutomaton& m, StateIndex q) {
  auto images = m.output(q).images();
  return {images.begin(), images.end()};
}

// Minimizes the part of g reachable from its initial state.  On return
// `representative[c]` is the original state chosen for class c.
InitialAutomaton minimize_impl(const InitialAutomaton& g,
                               const AbelianLabels* labels,
                               std::vector<StateIndex>& representative) {
  const MealyAutomaton& m = g.automaton();
  const std::size_t k = m.alphabet_size();

  std::vector<bool> reach(m.state_count(), false);
  std::deque<StateIndex> queue{g.initial()};
  reach[g.initial()] = true;
  while (!queue.empty()) {
    StateIndex q = queue.front();
    queue.pop_front();
    for (StateIndex t : m.transitions(q)) {
      if (!reach[t]) {
        reach[t] = true;
        queue.push_back(t);
      }
    }
  }
  std::vector<StateIndex> kept;
  std::vector<StateIndex> local(m.state_count(), 0);
  for (StateIndex q = 0; q < m.state_count(); ++q) {
    if (reach[q]) {
      local[q] = static_cast<StateIndex>(kept.size());
      kept.push_back(q);
    }
  }

  // Reachable sub-automaton, then refinement on it.
  std::vector<std::string> sub_names;
  std::vector<std::vector<StateIndex>> sub_delta;
  std::vector<Permutation> sub_out;
  std::vector<std::vector<std::uint64_t>> keys;
  for (StateIndex q : kept) {
    sub_names.push_back(m.name(q));
    std::vector<StateIndex> row;
    for (StateIndex t : m.transitions(q)) row.push_back(local[t]);
    sub_delta.push_back(std::move(row));
    sub_out.push_back(m.output(q));
    auto key = output_key(m, q);
    if (labels) {
      key.insert(key.end(), labels->labels[q].begin(),
                 labels->labels[q].end());
    }
    keys.push_back(std::move(key));
  }
  MealyAutomaton sub(k, sub_names, sub_delta, sub_out);
  std::vector<std::size_t> cls = refine_partition(sub, classes_by_key(keys));

  std::size_t classes = 0;
  for (std::size_t c : cls) classes = std::max(classes, c + 1);
  representative.assign(classes, 0);
  std::vector<bool> seen(classes, false);
  std::vector<std::string> names(classes);
  std::vector<std::vector<StateIndex>> delta(classes);
  std::vector<Permutation> output(classes);
  for (std::size_t i = 0; i < kept.size(); ++i) {
    const std::size_t c = cls[i];
    if (seen[c]) continue;
    seen[c] = true;
    representative[c] = kept[i];
    names[c] = sub.name(static_cast<StateIndex>(i));
    output[c] = sub.output(static_cast<StateIndex>(i));
    for (StateIndex t : sub.transitions(static_cast<StateIndex>(i))) {
      delta[c].push_back(static_cast<StateIndex>(cls[t]));
    }
  }
  return InitialAutomaton(MealyAutomaton(k, std::move(names), std::move(delta),
                                         std::move(output)),
                          static_cast<StateIndex>(cls[local[g.initial()]]));
}

void check_same_moduli(const AbelianLabels& a, const AbelianLabels& b) {
  if (a.moduli != b.moduli) {
    throw Error(ErrorCode::kModuliMismatch, "label groups differ");
  }
}

}  // namespace

InitialAutomaton compose(const InitialAutomaton& f,
                         const InitialAutomaton& g) {
  std::vector<std::pair<StateIndex, StateIndex>> pairs;
  return compose_impl(f, g, pairs);
}

InitialAutomaton minimize(const InitialAutomaton& g) {
  std::vector<StateIndex> representative;
  return minimize_impl(g, nullptr, representative);
}

bool equivalent(const InitialAutomaton& f, const InitialAutomaton& g) {
  check_same_alphabet(f, g);
  const MealyAutomaton& fa = f.automaton();
  const MealyAutomaton& ga = g.automaton();
  const std::size_t k = fa.alphabet_size();
  const auto offset = static_cast<StateIndex>(fa.state_count());

  std::vector<std::string> names;
  std::vector<std::vector<StateIndex>> delta;
  std::vector<Permutation> output;
  std::vector<std::vector<std::uint64_t>> keys;
  for (StateIndex q = 0; q < fa.state_count(); ++q) {
    names.push_back("f" + std::to_string(q));
    delta.emplace_back(fa.transitions(q).begin(), fa.transitions(q).end());
    output.push_back(fa.output(q));
    keys.push_back(output_key(fa, q));
  }
  for (StateIndex q = 0; q < ga.state_count(); ++q) {
    names.push_back("g" + std::to_string(q));
    std::vector<StateIndex> row;
    for (StateIndex t : ga.transitions(q)) row.push_back(t + offset);
    delta.push_back(std::move(row));
    output.push_back(ga.output(q));
    keys.push_back(output_key(ga, q));
  }
  MealyAutomaton joint(k, std::move(names), std::move(delta),
                       std::move(output));
  auto cls = refine_partition(joint, classes_by_key(keys));
  return cls[f.initial()] == cls[offset + g.initial()];
}

LabeledElement compose(const LabeledElement& f, const LabeledElement& g) {
  check_same_moduli(f.labels, g.labels);
  std::vector<std::pair<StateIndex, StateIndex>> pairs;
  InitialAutomaton product = compose_impl(f.element, g.element, pairs);
  AbelianLabels labels{f.labels.moduli, {}};
  for (const auto& [p, q] : pairs) {
    std::vector<Residue> row;
    for (std::size_t i = 0; i < labels.moduli.size(); ++i) {
      row.push_back((f.labels.labels[p][i] + g.labels.labels[q][i]) %
                    labels.moduli[i]);
    }
    labels.labels.push_back(std::move(row));
  }
  return {std::move(product), std::move(labels)};
}

LabeledElement inverse(const LabeledElement& g) {
  AbelianLabels labels = g.labels;
  for (auto& row : labels.labels) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      row[i] = (labels.moduli[i] - row[i]) % labels.moduli[i];
    }
  }
  return {inverse(g.element), std::move(labels)};
}

LabeledElement minimize(const LabeledElement& g) {
  std::vector<StateIndex> representative;
  InitialAutomaton small = minimize_impl(g.element, &g.labels, representative);
  AbelianLabels labels{g.labels.moduli, {}};
  for (StateIndex q : representative) labels.labels.push_back(g.labels.labels[q]);
  return {std::move(small), std::move(labels)};
}

// ---------------------------------------------------------------------------
// Moore diagram

std::string to_dot(const MealyAutomaton& m, std::optional<StateIndex> initial) {
  std::ostringstream os;
  os << "digraph automaton {\n";
  os << "  rankdir=LR;\n";
  os << "  node [shape=circle];\n";
  for (StateIndex q = 0; q < m.state_count(); ++q) {
    os << "  \"" << m.name(q) << '"';
    if (initial && *initial == q) os << " [shape=doublecircle]";
    os << ";\n";
  }
  for (StateIndex q = 0; q < m.state_count(); ++q) {
    for (Symbol a = 0; a < m.alphabet_size(); ++a) {
      os << "  \"" << m.name(q) << "\" -> \"" << m.name(m.next(q, a))
         << "\" [label=\"" << a << '|' << m.output(q)(a) << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace treeaut
