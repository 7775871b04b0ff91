#pragma once

#include <string>
#include <vector>

#include "tgc/sde.hpp"

namespace tgc {

// A hand-transcribed equation in theorem-normal form.
struct Fixture {
  std::string name;
  std::string file;
  std::vector<ColoredGraph> word;
  BetaChoice beta{};
  SdeOptions options;
  Equation expected;
};

// Keys: name, word, beta (component:vertex, 1-based), convention (orbit|literal), lhs, rhs.
// Indented lines continue the previous key; '#' starts a comment.
Fixture parse_fixture(const std::string& text, const std::string& file = "");
Fixture load_fixture(const std::string& path);
// Every *.fix file under data/fixtures, sorted by file name.
std::vector<Fixture> load_all_fixtures();

struct FixtureReport {
  std::string name;
  bool lhs_ok = false;
  bool rhs_ok = false;
  std::vector<std::string> missing;  // expected monomials not generated
  std::vector<std::string> extra;    // generated monomials not expected
  double seconds = 0;
  bool ok() const { return lhs_ok && rhs_ok; }
};

FixtureReport verify_fixture(const Fixture& f);

}  // namespace tgc
