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

// Runs the command-line tool as a subprocess.

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "abelianization.hpp"
#include "automaton.hpp"
#include "tree_oracle.hpp"

#ifndef TREEAUT_CLI
#error "TREEAUT_CLI must name the command-line binary"
#endif
#ifndef TREEAUT_FIXTURES
#error "TREEAUT_FIXTURES must name the fixtures directory"
#endif

namespace {

namespace fs = std::filesystem;

struct Run {
  int status = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch() {
  fs::path dir = fs::temp_directory_path() / "treeaut_cli_test";
  fs::create_directories(dir);
  return dir;
}

Run run(const std::string& args) {
  const fs::path err = scratch() / "stderr.txt";
  const std::string cmd = "cd '" + std::string(TREEAUT_FIXTURES) + "' && '" +
                          std::string(TREEAUT_CLI) + "' " + args + " 2>'" +
                          err.string() + "'";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    r.out.append(buf.data(), n);
  }
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  r.err = slurp(err);
  return r;
}

bool has_line(const std::string& doc, const std::string& line) {
  std::istringstream in(doc);
  for (std::string l; std::getline(in, l);) {
    if (l == line) return true;
  }
  return false;
}

std::vector<std::string> keys(const std::string& doc) {
  std::vector<std::string> out;
  std::istringstream in(doc);
  for (std::string l; std::getline(in, l);) out.push_back(l.substr(0, l.find('=')));
  return out;
}

std::string fixture(const std::string& name) {
  return (fs::path(TREEAUT_FIXTURES) / name).string();
}

}  // namespace

TEST_CASE("transitive odometer") {
  Run r = run("transitive odometer.aut");
  CHECK(r.status == 0);
  CHECK(has_line(r.out, "transitive=true"));
  CHECK(has_line(r.out, "stream.period=[1]"));
  CHECK(has_line(r.out, "stream.preperiod=[]"));
  CHECK(has_line(r.out, "first_bad_index=none"));
  auto k = keys(r.out);
  CHECK(std::is_sorted(k.begin(), k.end()));
}

TEST_CASE("transitive lamplighter, both paths") {
  for (const char* flag : {"", " --fast2"}) {
    Run r = run(std::string("transitive lamplighter_b.aut") + flag);
    CHECK(r.status == 0);
    CHECK(has_line(r.out, "transitive=false"));
    CHECK(has_line(r.out, "first_bad_index=2"));
  }
  Run a = run("transitive lamplighter.aut");
  CHECK(has_line(a.out, "first_bad_index=0"));
  Run t = run("transitive --fast2 ternary_odometer.aut");
  CHECK(t.status == 2);
  CHECK(t.err.find("NotBinary") != std::string::npos);
}

TEST_CASE("conjugate verdicts never drive the exit code") {
  Run u = run("conjugate lamplighter.aut lamplighter_b.aut");
  CHECK(u.status == 0);
  CHECK(has_line(u.out, "verdict=Undecided"));
  Run c = run("conjugate odometer.aut odometer_c.aut");
  CHECK(c.status == 0);
  CHECK(has_line(c.out, "verdict=Conjugate"));
  Run n = run("conjugate odometer.aut lamplighter_b.aut");
  CHECK(n.status == 0);
  CHECK(has_line(n.out, "verdict=NotConjugate"));
}

TEST_CASE("input and validation errors exit 2") {
  Run r = run("transitive broken.aut");
  CHECK(r.status == 2);
  CHECK(r.err.find("NotCyclic") != std::string::npos);
  CHECK(r.err.find("'s'") != std::string::npos);
  CHECK(run("transitive no_such_file.aut").status == 2);
  fs::path noinit = scratch() / "noinit.aut";
  std::ofstream(noinit) << "alphabet 2\nstate a perm 0 1 to a a\n";
  Run m = run("transitive '" + noinit.string() + "'");
  CHECK(m.status == 2);
  CHECK(m.err.find("MissingInitial") != std::string::npos);
  fs::path bad = scratch() / "bad.aut";
  std::ofstream(bad) << "alphabet 2\n\nstate a perm 0 1 to a\n";
  Run s = run("validate '" + bad.string() + "'");
  CHECK(s.status == 2);
  CHECK(s.err.find("line 3") != std::string::npos);
  CHECK(run("apply odometer.aut --word 012").status == 2);
}

TEST_CASE("usage errors exit 1") {
  CHECK(run("").status == 1);
  CHECK(run("frobnicate odometer.aut").status == 1);
  CHECK(run("coeffs odometer.aut").status == 1);
  CHECK(run("apply odometer.aut --word 0x1").status == 1);
  CHECK(run("--help").status == 0);
}

TEST_CASE("validate reports cyclic labels") {
  Run r = run("validate lamplighter.aut");
  CHECK(r.status == 0);
  CHECK(has_line(r.out, "cyclic=true"));
  CHECK(has_line(r.out, "cyclic_label.a=0"));
  CHECK(has_line(r.out, "cyclic_label.b=1"));
  Run b = run("validate broken.aut");
  CHECK(b.status == 0);
  CHECK(has_line(b.out, "cyclic=false"));
}

TEST_CASE("coeffs match the brute-force oracle") {
  for (const char* name : {"odometer.aut", "lamplighter_b.aut",
                           "ternary_odometer.aut", "lamplighter.aut"}) {
    Run r = run(std::string("coeffs ") + name + " --count 12");
    REQUIRE(r.status == 0);
    treeaut::AutomatonFile f = treeaut::parse_automaton(slurp(fixture(name)));
    treeaut::LabeledElement g{treeaut::InitialAutomaton(f.automaton, *f.initial),
                              treeaut::effective_labels(f)};
    std::string expect = "terms=[";
    treeaut::EventuallyPeriodicStream s = treeaut::coefficient_stream(
        treeaut::incidence_matrix(f.automaton),
        treeaut::abelian_vector(g.labels, 0), *f.initial);
    for (unsigned n = 0; n < 12; ++n) {
      if (n) expect += ',';
      expect += std::to_string(s.term(n));
      if (n <= 8) {
        CHECK(treeaut::abelian_coefficient_bruteforce(g, n, 0) == s.term(n));
      }
    }
    CHECK(has_line(r.out, expect + "]"));
  }
}

TEST_CASE("rational, equal-ab, orbit, apply") {
  Run r = run("rational odometer.aut");
  CHECK(has_line(r.out, "numerator=[1]"));
  CHECK(has_line(r.out, "denominator=[1,1]"));
  CHECK(run("rational odometer.aut --component 1").status == 2);

  Run e = run("equal-ab odometer.aut lamplighter_b.aut");
  CHECK(has_line(e.out, "equal=false"));
  CHECK(has_line(e.out, "witness=2"));

  Run o = run("orbit lamplighter_b.aut --level 3");
  CHECK(has_line(o.out, "transitive=false"));
  CHECK(has_line(o.out, "orbit_count=2"));
  CHECK(run("orbit odometer.aut --level 4 --cap 8").status == 2);

  Run a = run("apply odometer.aut --word 11");
  CHECK(has_line(a.out, "output=00"));
  Run empty = run("apply odometer.aut --word ''");
  CHECK(empty.status == 0);
  CHECK(has_line(empty.out, "output="));
}

TEST_CASE("words for alphabets above 10 are comma separated") {
  fs::path big = scratch() / "big.aut";
  std::ofstream(big) << "alphabet 12\nstate a perm 1 2 3 4 5 6 7 8 9 10 11 0 "
                        "to e e e e e e e e e e e a\n"
                        "state e perm 0 1 2 3 4 5 6 7 8 9 10 11 "
                        "to e e e e e e e e e e e e\ninitial a\n";
  Run r = run("apply '" + big.string() + "' --word 11,11,3");
  CHECK(r.status == 0);
  CHECK(has_line(r.out, "output=0,0,4"));
}

TEST_CASE("compose, inverse and minimize write automaton files") {
  const fs::path dir = scratch();
  const std::string inv = (dir / "inv.aut").string();
  const std::string prod = (dir / "prod.aut").string();
  const std::string small = (dir / "small.aut").string();
  Run i = run("inverse odometer.aut -o '" + inv + "'");
  CHECK(i.status == 0);
  CHECK(has_line(i.out, "output.states=2"));
  Run c = run("compose odometer.aut '" + inv + "' -o '" + prod + "'");
  CHECK(c.status == 0);
  Run m = run("minimize '" + prod + "' -o '" + small + "'");
  CHECK(m.status == 0);
  CHECK(has_line(m.out, "output.states=1"));
  treeaut::AutomatonFile f = treeaut::parse_automaton(slurp(small));
  CHECK(f.automaton.state_count() == 1);
  CHECK(f.automaton.output(0) == treeaut::Permutation::identity(2));

  Run stdout_form = run("inverse odometer.aut");
  CHECK(stdout_form.out == slurp(inv));
  CHECK(run("compose odometer.aut ternary_odometer.aut").status == 2);
}

TEST_CASE("dot and determinism") {
  Run d = run("dot lamplighter.aut");
  CHECK(d.status == 0);
  CHECK(d.out.find("\"a\" -> \"b\" [label=\"1|1\"]") != std::string::npos);
  CHECK(d.out.find("\"b\" -> \"a\" [label=\"0|1\"]") != std::string::npos);
  for (const char* args :
       {"dot lamplighter.aut", "transitive odometer.aut",
        "rational lamplighter_b.aut", "conjugate odometer.aut odometer_c.aut",
        "coeffs ternary_odometer.aut --count 20"}) {
    CHECK(run(args).out == run(args).out);
  }
}

TEST_CASE("fixtures round-trip through minimize-free serialization") {
  for (const auto& entry : fs::directory_iterator(TREEAUT_FIXTURES)) {
    if (entry.path().extension() != ".aut") continue;
    const std::string text = slurp(entry.path());
    treeaut::AutomatonFile f = treeaut::parse_automaton(text);
    CHECK(treeaut::parse_automaton(treeaut::serialize_automaton(f)) == f);
  }
}
