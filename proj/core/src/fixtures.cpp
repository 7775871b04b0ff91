#include "tgc/fixtures.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <map>
#include <sstream>

#include "tgc/catalog.hpp"
#include "tgc/data.hpp"

namespace tgc {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

Fixture parse_fixture(const std::string& text, const std::string& file) {
  std::map<std::string, std::string> kv;
  std::string last;
  std::stringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    if (std::isspace(static_cast<unsigned char>(line[0]))) {
      if (last.empty()) throw ExprError(file + ": continuation line without a key");
      kv[last] += " " + trim(line);
      continue;
    }
    auto colon = line.find(':');
    if (colon == std::string::npos) throw ExprError(file + ": expected 'key: value'");
    last = trim(line.substr(0, colon));
    kv[last] = trim(line.substr(colon + 1));
  }
  for (const char* key : {"name", "word", "beta", "lhs", "rhs"})
    if (!kv.count(key)) throw ExprError(file + ": missing key '" + key + "'");
  Fixture f;
  f.name = kv["name"];
  f.file = file;
  f.word = parse_word(kv["word"], 3);
  auto colon = kv["beta"].find(':');
  if (colon == std::string::npos) throw ExprError(file + ": beta must be component:vertex");
  f.beta = {std::stoi(kv["beta"].substr(0, colon)) - 1, std::stoi(kv["beta"].substr(colon + 1)) - 1};
  if (kv.count("convention")) {
    if (kv["convention"] == "literal")
      f.options.convention = FactorizationConvention::Literal;
    else if (kv["convention"] != "orbit")
      throw ExprError(file + ": unknown convention");
  }
  f.expected = {parse_text(kv["lhs"]), parse_text(kv["rhs"])};
  return f;
}

Fixture load_fixture(const std::string& path) { return parse_fixture(read_file(path), path); }

std::vector<Fixture> load_all_fixtures() {
  namespace fs = std::filesystem;
  std::vector<std::string> files;
  for (const auto& e : fs::directory_iterator(data_path("fixtures")))
    if (e.path().extension() == ".fix") files.push_back(e.path().string());
  std::sort(files.begin(), files.end());
  std::vector<Fixture> out;
  for (const auto& f : files) out.push_back(load_fixture(f));
  return out;
}

FixtureReport verify_fixture(const Fixture& f) {
  auto start = std::chrono::steady_clock::now();
  FixtureReport r;
  r.name = f.name;
  Equation got = generate_sde(f.word, f.beta, f.options);
  r.lhs_ok = equal_normalized(got.lhs, f.expected.lhs);
  auto want = monomials(f.expected.rhs);
  auto have = monomials(got.rhs);
  std::map<std::string, Rational> w, h;
  for (const auto& m : want) w[m.key] = m.coeff;
  for (const auto& m : have) h[m.key] = m.coeff;
  for (const auto& m : want) {
    auto it = h.find(m.key);
    if (it == h.end() || it->second != m.coeff) r.missing.push_back(render_text(to_expr(m)));
  }
  for (const auto& m : have) {
    auto it = w.find(m.key);
    if (it == w.end() || it->second != m.coeff) r.extra.push_back(render_text(to_expr(m)));
  }
  r.rhs_ok = r.missing.empty() && r.extra.empty();
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace tgc
