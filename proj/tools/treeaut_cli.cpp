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

// Command-line front end over the treeaut C interface.
//
// Analysis commands print a flat, key-sorted "key=value" document.  Exit
// status: 0 analysis completed (whatever the verdict), 1 usage error,
// 2 input or validation error.

#include <openssl/evp.h>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "treeaut/treeaut.h"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;

struct AutomatonDeleter {
  void operator()(ta_automaton* a) const { ta_free(a); }
};
using Automaton = std::unique_ptr<ta_automaton, AutomatonDeleter>;

// Reports a library or input failure; carries the exit status.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(ta_status status, const std::string& context) {
  if (status != TA_OK) {
    throw InputError(context + ": " + ta_status_name(status) + ": " +
                     ta_last_error());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw InputError(path + ": cannot write file");
}

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(),
                 nullptr) != 1) {
    throw std::runtime_error("sha256 failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 15];
  }
  return out;
}

std::string take_string(char* s) {
  std::string out(s);
  ta_string_free(s);
  return out;
}

std::string list(const uint64_t* values, size_t n) {
  std::string out = "[";
  for (size_t i = 0; i < n; ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out + "]";
}

std::string list(const std::vector<uint64_t>& v) {
  return list(v.data(), v.size());
}

// Key-sorted flat document.
class Document {
 public:
  explicit Document(std::string command) { set("command", std::move(command)); }

  void set(const std::string& key, std::string value) {
    fields_[key] = std::move(value);
  }
  void set(const std::string& key, uint64_t value) {
    set(key, std::to_string(value));
  }
  void set_bool(const std::string& key, bool value) {
    set(key, std::string(value ? "true" : "false"));
  }

  void print(std::ostream& os) const {
    for (const auto& [k, v] : fields_) os << k << '=' << v << '\n';
  }

 private:
  std::map<std::string, std::string> fields_;
};

struct Input {
  std::string path;
  Automaton automaton;
};

Input load(const std::string& path, Document& doc, int slot) {
  const std::string text = read_file(path);
  ta_automaton* raw = nullptr;
  check(ta_parse(text.data(), text.size(), &raw), path);
  const std::string prefix = "input." + std::to_string(slot) + ".";
  doc.set(prefix + "file", path);
  doc.set(prefix + "sha256", sha256_hex(text));
  return {path, Automaton(raw)};
}

void require_initial(const Input& in) {
  if (!ta_has_initial(in.automaton.get())) {
    throw InputError(in.path + ": " + ta_status_name(TA_ERR_MISSING_INITIAL) +
                     ": an 'initial' line is required");
  }
}

std::vector<uint32_t> parse_word(const std::string& text, size_t k) {
  std::vector<uint32_t> word;
  if (text.empty()) return word;
  if (text.find(',') == std::string::npos && k <= 10) {
    for (char c : text) {
      if (c < '0' || c > '9') {
        throw UsageError("word must consist of digits: '" + text + "'");
      }
      word.push_back(static_cast<uint32_t>(c - '0'));
    }
    return word;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() ||
        item.find_first_not_of("0123456789") != std::string::npos ||
        item.size() > 9) {
      throw UsageError("word must be comma-separated integers: '" + text +
                       "'");
    }
    word.push_back(static_cast<uint32_t>(std::stoul(item)));
  }
  return word;
}

std::string format_word(const std::vector<uint32_t>& word, size_t k) {
  std::string out;
  for (size_t i = 0; i < word.size(); ++i) {
    if (k <= 10) {
      out += static_cast<char>('0' + word[i]);
    } else {
      if (i) out += ',';
      out += std::to_string(word[i]);
    }
  }
  return out;
}

void describe_stream(Document& doc, const std::string& prefix,
                     const ta_stream& s) {
  doc.set(prefix + "modulus", s.modulus);
  doc.set(prefix + "preperiod", list(s.preperiod, s.preperiod_len));
  doc.set(prefix + "period", list(s.period, s.period_len));
}

// ---------------------------------------------------------------------------
// Commands

int cmd_validate(const std::string& file) {
  Document doc("validate");
  Input in = load(file, doc, 0);
  const ta_automaton* a = in.automaton.get();
  const size_t n = ta_state_count(a);
  doc.set("alphabet", ta_alphabet_size(a));
  doc.set("states", n);
  size_t initial = 0;
  doc.set("initial", ta_initial_state(a, &initial) == TA_OK
                         ? std::string(ta_state_name(a, initial))
                         : std::string("none"));
  doc.set_bool("explicit_labels", ta_has_explicit_labels(a));
  std::vector<uint64_t> labels(n);
  if (ta_cyclic_labels(a, labels.data()) == TA_OK) {
    doc.set_bool("cyclic", true);
    for (size_t q = 0; q < n; ++q) {
      doc.set("cyclic_label." + std::string(ta_state_name(a, q)), labels[q]);
    }
  } else {
    doc.set_bool("cyclic", false);
    doc.set("cyclic_error", std::string(ta_last_error()));
  }
  doc.print(std::cout);
  return 0;
}

int cmd_transitive(const std::string& file, bool fast2) {
  Document doc("transitive");
  Input in = load(file, doc, 0);
  require_initial(in);
  ta_transitivity t{};
  check(ta_transitive(in.automaton.get(), fast2 ? 1 : 0, &t), file);
  doc.set("method", std::string(fast2 ? "fast2" : "generic"));
  doc.set_bool("transitive", t.transitive);
  doc.set("first_bad_index", t.first_bad_index < 0
                                 ? std::string("none")
                                 : std::to_string(t.first_bad_index));
  doc.set("terms_checked", t.terms_checked);
  describe_stream(doc, "stream.", t.stream);
  ta_transitivity_release(&t);
  doc.print(std::cout);
  return 0;
}

int cmd_coeffs(const std::string& file, size_t count, size_t component) {
  Document doc("coeffs");
  Input in = load(file, doc, 0);
  require_initial(in);
  ta_stream s{};
  check(ta_coefficients(in.automaton.get(), component, &s), file);
  std::vector<uint64_t> terms;
  for (size_t j = 0; j < count; ++j) terms.push_back(ta_stream_term(&s, j));
  doc.set("component", component);
  doc.set("count", count);
  doc.set("terms", list(terms));
  describe_stream(doc, "stream.", s);
  ta_stream_release(&s);
  doc.print(std::cout);
  return 0;
}

int cmd_rational(const std::string& file, size_t component) {
  Document doc("rational");
  Input in = load(file, doc, 0);
  require_initial(in);
  ta_rational r{};
  check(ta_rational_form(in.automaton.get(), component, &r), file);
  doc.set("component", component);
  doc.set("modulus", r.modulus);
  doc.set("numerator", list(r.numerator, r.numerator_len));
  doc.set("denominator", list(r.denominator, r.denominator_len));
  ta_rational_release(&r);
  doc.print(std::cout);
  return 0;
}

int cmd_equal_ab(const std::string& f1, const std::string& f2) {
  Document doc("equal-ab");
  Input a = load(f1, doc, 0);
  Input b = load(f2, doc, 1);
  require_initial(a);
  require_initial(b);
  ta_ab_equality eq{};
  check(ta_equal_ab(a.automaton.get(), b.automaton.get(), TA_EQUALITY_AUTO,
                    &eq),
        f1 + ", " + f2);
  doc.set_bool("equal", eq.equal);
  doc.set("witness",
          eq.witness < 0 ? std::string("none") : std::to_string(eq.witness));
  doc.set("witness_component", eq.component < 0
                                   ? std::string("none")
                                   : std::to_string(eq.component));
  doc.print(std::cout);
  return 0;
}

int cmd_conjugate(const std::string& f1, const std::string& f2) {
  Document doc("conjugate");
  Input a = load(f1, doc, 0);
  Input b = load(f2, doc, 1);
  require_initial(a);
  require_initial(b);
  ta_conjugacy_verdict v{};
  check(ta_conjugate(a.automaton.get(), b.automaton.get(), &v),
        f1 + ", " + f2);
  doc.set("verdict", std::string(ta_conjugacy_name(v.verdict)));
  doc.set("reason", std::string(v.reason));
  ta_conjugacy_release(&v);
  doc.print(std::cout);
  return 0;
}

int cmd_orbit(const std::string& file, unsigned level, uint64_t cap) {
  Document doc("orbit");
  Input in = load(file, doc, 0);
  require_initial(in);
  ta_orbit_report r{};
  check(ta_orbit(in.automaton.get(), level, cap, &r), file);
  doc.set("level", r.level);
  doc.set("orbit_count", r.orbit_count);
  doc.set("max_orbit", r.max_orbit);
  doc.set_bool("transitive", r.transitive);
  doc.print(std::cout);
  return 0;
}

int cmd_apply(const std::string& file, const std::string& word_text) {
  Document doc("apply");
  Input in = load(file, doc, 0);
  require_initial(in);
  const size_t k = ta_alphabet_size(in.automaton.get());
  const auto word = parse_word(word_text, k);
  std::vector<uint32_t> out(word.size());
  check(ta_apply(in.automaton.get(), word.data(), word.size(), out.data()),
        file);
  doc.set("word", format_word(word, k));
  doc.set("output", format_word(out, k));
  doc.print(std::cout);
  return 0;
}

// compose / inverse / minimize: write the automaton to -o, or to stdout.
int emit_automaton(const char* command, Document& doc, const Automaton& result,
                   const std::string& out_path) {
  char* text = nullptr;
  check(ta_serialize(result.get(), &text), command);
  const std::string serialized = take_string(text);
  if (out_path.empty()) {
    std::cout << serialized;
    return 0;
  }
  write_file(out_path, serialized);
  doc.set("output.file", out_path);
  doc.set("output.sha256", sha256_hex(serialized));
  doc.set("output.states", ta_state_count(result.get()));
  doc.print(std::cout);
  return 0;
}

int cmd_compose(const std::string& f1, const std::string& f2,
                const std::string& out_path) {
  Document doc("compose");
  Input a = load(f1, doc, 0);
  Input b = load(f2, doc, 1);
  require_initial(a);
  require_initial(b);
  ta_automaton* raw = nullptr;
  check(ta_compose(a.automaton.get(), b.automaton.get(), &raw),
        f1 + ", " + f2);
  return emit_automaton("compose", doc, Automaton(raw), out_path);
}

int cmd_inverse(const std::string& file, const std::string& out_path) {
  Document doc("inverse");
  Input in = load(file, doc, 0);
  require_initial(in);
  ta_automaton* raw = nullptr;
  check(ta_inverse(in.automaton.get(), &raw), file);
  return emit_automaton("inverse", doc, Automaton(raw), out_path);
}

int cmd_minimize(const std::string& file, const std::string& out_path) {
  Document doc("minimize");
  Input in = load(file, doc, 0);
  require_initial(in);
  ta_automaton* raw = nullptr;
  check(ta_minimize(in.automaton.get(), &raw), file);
  return emit_automaton("minimize", doc, Automaton(raw), out_path);
}

int cmd_dot(const std::string& file) {
  Document doc("dot");
  Input in = load(file, doc, 0);
  char* text = nullptr;
  check(ta_to_dot(in.automaton.get(), &text), file);
  std::cout << take_string(text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-state automorphisms of rooted trees: transitivity, "
               "abelianization and conjugacy"};
  app.require_subcommand(1);

  std::string file, file2, out_path, word;
  size_t count = 0, component = 0;
  unsigned level = 0;
  uint64_t cap = 0;
  bool fast2 = false;

  auto* validate = app.add_subcommand("validate", "Check a file and report cyclic labels");
  validate->add_option("file", file, "Automaton file")->required();

  auto* transitive = app.add_subcommand("transitive", "Decide spherical transitivity");
  transitive->add_option("file", file, "Automaton file")->required();
  transitive->add_flag("--fast2", fast2, "Binary alphabets: check only n+2 terms");

  auto* coeffs = app.add_subcommand("coeffs", "Abelianization coefficients");
  coeffs->add_option("file", file, "Automaton file")->required();
  coeffs->add_option("--count", count, "Number of terms")->required();
  coeffs->add_option("--component", component, "Label component");

  auto* rational = app.add_subcommand("rational", "Abelianization as a rational series");
  rational->add_option("file", file, "Automaton file")->required();
  rational->add_option("--component", component, "Label component");

  auto* equal_ab = app.add_subcommand("equal-ab", "Compare abelianizations");
  equal_ab->add_option("file1", file, "First automaton")->required();
  equal_ab->add_option("file2", file2, "Second automaton")->required();

  auto* conj = app.add_subcommand("conjugate", "Decide conjugacy");
  conj->add_option("file1", file, "First automaton")->required();
  conj->add_option("file2", file2, "Second automaton")->required();

  auto* orbit = app.add_subcommand("orbit", "Brute-force orbits on a level");
  orbit->add_option("file", file, "Automaton file")->required();
  orbit->add_option("--level", level, "Tree level")->required();
  orbit->add_option("--cap", cap, "Maximum number of words (default 10^6)");

  auto* apply = app.add_subcommand("apply", "Apply the automorphism to a word");
  apply->add_option("file", file, "Automaton file")->required();
  apply->add_option("--word", word, "Digits 0..k-1, or comma-separated for k > 10")
      ->required();

  auto* compose = app.add_subcommand("compose", "Write w -> f1(f2(w))");
  compose->add_option("file1", file, "Outer automaton")->required();
  compose->add_option("file2", file2, "Inner automaton")->required();
  compose->add_option("-o,--output", out_path, "Output file");

  auto* inverse = app.add_subcommand("inverse", "Write the inverse automaton");
  inverse->add_option("file", file, "Automaton file")->required();
  inverse->add_option("-o,--output", out_path, "Output file");

  auto* minimize = app.add_subcommand("minimize", "Write the minimal automaton");
  minimize->add_option("file", file, "Automaton file")->required();
  minimize->add_option("-o,--output", out_path, "Output file");

  auto* dot = app.add_subcommand("dot", "Print the Moore diagram in dot syntax");
  dot->add_option("file", file, "Automaton file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*validate) return cmd_validate(file);
    if (*transitive) return cmd_transitive(file, fast2);
    if (*coeffs) return cmd_coeffs(file, count, component);
    if (*rational) return cmd_rational(file, component);
    if (*equal_ab) return cmd_equal_ab(file, file2);
    if (*conj) return cmd_conjugate(file, file2);
    if (*orbit) return cmd_orbit(file, level, cap);
    if (*apply) return cmd_apply(file, word);
    if (*compose) return cmd_compose(file, file2, out_path);
    if (*inverse) return cmd_inverse(file, out_path);
    if (*minimize) return cmd_minimize(file, out_path);
    if (*dot) return cmd_dot(file);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitUsage;
}
