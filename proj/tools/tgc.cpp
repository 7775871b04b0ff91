#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <unistd.h>

#include "tgc/catalog.hpp"
#include "tgc/colored_graph.hpp"
#include "tgc/data.hpp"
#include "tgc/expr.hpp"
#include "tgc/fixtures.hpp"
#include "tgc/sde.hpp"
#include "tgc/tutte.hpp"
#include "tgc/ytable.hpp"

using json = nlohmann::json;
using namespace tgc;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool use_colour() { return std::getenv("NO_COLOR") == nullptr && isatty(fileno(stdout)); }

std::string paint(const std::string& s, bool ok) {
  if (!use_colour()) return s;
  return std::string(ok ? "\033[32m" : "\033[31m") + s + "\033[0m";
}

// {"schema": "tgc.word/1", "rank": 3, "components": [[[1,2],[2,1],[1,2]], ...]} with 1-based blacks.
std::vector<ColoredGraph> word_from_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw UsageError(std::string("invalid JSON: ") + e.what());
  }
  if (j.value("schema", "") != "tgc.word/1") throw UsageError("expected schema tgc.word/1");
  int rank = j.value("rank", 3);
  std::vector<ColoredGraph> word;
  for (const auto& comp : j.at("components")) {
    std::vector<Perm> perms;
    for (const auto& p : comp) {
      Perm q;
      for (int b : p.get<std::vector<int>>()) q.push_back(b - 1);
      perms.push_back(q);
    }
    ColoredGraph g = make_graph(rank, perms);
    if (!is_connected(g)) throw UsageError("components must be connected");
    word.push_back(g);
  }
  return word;
}

std::vector<ColoredGraph> resolve_word(const std::string& spec, const std::string& file, int rank) {
  if (!file.empty()) return word_from_json(file);
  if (spec.empty()) throw UsageError("a word or --file is required");
  return parse_word(spec, rank);
}

std::string word_name(const std::vector<ColoredGraph>& word) {
  if (word.empty()) return "0";
  std::string s;
  for (const auto& g : word) s += (s.empty() ? "" : "|") + class_name(g);
  return s;
}

ColoredGraph full_graph(const std::vector<ColoredGraph>& word, int rank) {
  return word.empty() ? empty_graph(rank) : disjoint_union(word, rank);
}

std::vector<ColoredGraph> sorted_word(const ColoredGraph& g) {
  std::vector<ColoredGraph> parts;
  for (auto& c : components(g)) parts.push_back(c.graph);
  std::sort(parts.begin(), parts.end(),
            [](const ColoredGraph& a, const ColoredGraph& b) { return connected_code(a) < connected_code(b); });
  return parts;
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw UsageError("expected a comma-separated integer list: " + s);
    }
  }
  return out;
}

int cmd_inspect(const std::vector<ColoredGraph>& word, int rank, bool as_json) {
  ColoredGraph g = full_graph(word, rank);
  json comps = json::array();
  for (const auto& c : word) {
    json jc{{"name", class_name(c)}, {"vertices", 2 * c.k()}, {"code", code_hex(connected_code(c))}};
    if (rank == 3) jc["genus"] = genus_rank3(c);
    comps.push_back(jc);
  }
  const std::size_t aut = automorphism_count(g);
  const bool connected = word.size() == 1;
  if (as_json) {
    json j{{"schema", "tgc.inspect/1"}, {"word", word_name(word)}, {"rank", rank},
           {"code", code_hex(canonical_code(g))}, {"vertices", 2 * g.k()}, {"connected", connected},
           {"automorphisms", aut}, {"components", comps}};
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "word: " << word_name(word) << "\n";
  std::cout << "code: " << code_hex(canonical_code(g)) << "\n";
  std::cout << "vertices: " << 2 * g.k() << "\n";
  std::cout << "connected: " << (connected ? "yes" : "no") << "\n";
  std::cout << "|Aut_c| = " << aut << "\n";
  for (const auto& c : comps) {
    std::cout << "component " << c["name"].get<std::string>() << ": " << c["vertices"] << " vertices";
    if (c.contains("genus")) std::cout << ", genus " << c["genus"];
    std::cout << "\n";
  }
  return 0;
}

int cmd_swap(const std::vector<ColoredGraph>& word, int rank, int colour, const std::string& at, bool as_json) {
  auto pair = parse_int_list(at);
  ColoredGraph g = full_graph(word, rank);
  if (pair.size() != 2) throw UsageError("--at expects beta,rho");
  if (colour < 1 || colour > rank) throw UsageError("colour out of range");
  for (int v : pair)
    if (v < 1 || v > g.k()) throw UsageError("black vertex out of range");
  if (pair[0] == pair[1]) throw UsageError("beta and rho must differ");
  ColoredGraph s = edge_swap(g, colour, pair[0] - 1, pair[1] - 1);
  std::string name = word_name(sorted_word(s));
  if (as_json) {
    std::cout << json{{"schema", "tgc.swap/1"}, {"colour", colour}, {"beta", pair[0]}, {"rho", pair[1]},
                      {"result", name}, {"code", code_hex(canonical_code(s))}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << name << "\n";
  }
  return 0;
}

int cmd_bridges(const std::vector<ColoredGraph>& word, int rank, int vertex, bool as_json) {
  ColoredGraph g = full_graph(word, rank);
  if (vertex < 1 || vertex > g.k()) throw UsageError("black vertex out of range");
  // bridges are taken inside the component holding the vertex
  int offset = 0;
  const ColoredGraph* comp = nullptr;
  for (const auto& c : word) {
    if (vertex - 1 < offset + c.k()) {
      comp = &c;
      break;
    }
    offset += c.k();
  }
  json j{{"schema", "tgc.bridges/1"}, {"vertex", vertex}, {"colours", json::object()}};
  for (int c = 1; c <= rank; ++c) {
    std::vector<int> taus;
    for (int t : bridge_pairs(*comp, vertex - 1 - offset, c)) taus.push_back(t + 1 + offset);
    j["colours"][std::to_string(c)] = taus;
    if (!as_json) {
      std::cout << "colour " << c << ": {";
      for (std::size_t i = 0; i < taus.size(); ++i) std::cout << (i ? "," : "") << taus[i];
      std::cout << "}\n";
    }
  }
  if (as_json) std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_sde(const std::vector<ColoredGraph>& word, const std::string& beta_spec, bool expand_y,
            const std::string& convention, const std::string& format) {
  auto colon = beta_spec.find(':');
  if (colon == std::string::npos) throw UsageError("--beta expects component:vertex");
  auto parts = parse_int_list(beta_spec.substr(0, colon) + "," + beta_spec.substr(colon + 1));
  if (parts[0] < 1 || parts[0] > static_cast<int>(word.size())) throw UsageError("component out of range");
  if (parts[1] < 1 || parts[1] > word[static_cast<std::size_t>(parts[0] - 1)].k())
    throw UsageError("vertex out of range");
  SdeOptions opts;
  if (convention == "literal") opts.convention = FactorizationConvention::Literal;
  Equation eq = generate_sde(word, {parts[0] - 1, parts[1] - 1}, opts);
  if (expand_y) eq.rhs = y_expand(eq.rhs);
  eq.rhs = normalize(eq.rhs);
  if (format == "latex")
    std::cout << render_latex(eq) << "\n";
  else if (format == "json")
    std::cout << render_json(eq, 2) << "\n";
  else
    std::cout << render_text(eq) << "\n";
  return 0;
}

int cmd_enumerate(int rank, int max_vertices, bool words, bool as_json) {
  if (max_vertices < 2 || max_vertices % 2) throw UsageError("--max-vertices must be even and >= 2");
  json out{{"schema", "tgc.enumerate/1"}, {"rank", rank}, {"max_vertices", max_vertices}};
  json classes = json::array();
  for (int k = 1; 2 * k <= max_vertices; ++k) {
    for (const auto& g : connected_classes(rank, k)) {
      json c{{"name", class_name(g)}, {"vertices", 2 * k}, {"automorphisms", automorphism_count(g)}};
      if (rank == 3) c["genus"] = genus_rank3(g);
      classes.push_back(c);
    }
  }
  out["classes"] = classes;
  if (words) {
    json ws = json::array();
    for (const auto& w : enumerate_boundaries(rank, max_vertices)) ws.push_back(word_name(w));
    out["words"] = ws;
  }
  if (as_json) {
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  for (const auto& c : classes) {
    std::cout << c["vertices"] << "  " << c["name"].get<std::string>() << "  |Aut_c|=" << c["automorphisms"];
    if (c.contains("genus")) std::cout << "  genus=" << c["genus"];
    std::cout << "\n";
  }
  if (words)
    for (const auto& w : out["words"]) std::cout << w.get<std::string>() << "\n";
  return 0;
}

int cmd_tutte(int genus, const std::string& perims, int order, int d, const std::string& format) {
  auto p = parse_int_list(perims);
  PolySeries s = tutte_general(genus, p, order, d);
  if (format == "json") {
    json rows = json::array();
    for (const auto& [e, c] : s.terms()) rows.push_back({{"t", e[0]}, {"n", std::vector<int>(e.begin() + 1, e.end())}, {"coefficient", c.get_str()}});
    std::cout << json{{"schema", "tgc.tutte/1"}, {"genus", genus}, {"perimeters", p}, {"order", order}, {"d", d}, {"terms", rows}}.dump(2)
              << "\n";
    return 0;
  }
  if (format == "text") {
    std::cout << s.to_string() << "\n";
    return 0;
  }
  std::cout << "t";
  for (int a = 3; a <= d; ++a) std::cout << ",n" << a;
  std::cout << ",coefficient\n";
  for (const auto& [e, c] : s.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i) std::cout << (i ? "," : "") << e[i];
    std::cout << "," << c.get_str() << "\n";
  }
  return 0;
}

bool check_beta_orbits() {
  for (const auto& w : enumerate_boundaries(3, 6))
    if (!beta_orbit_invariant(w)) return false;
  return true;
}

bool check_tutte_small() {
  GenFunTable table(5, 4);
  for (const auto& p : std::vector<std::vector<int>>{{1}, {2}, {3}, {4}, {1, 1}, {1, 2}, {2, 2}}) {
    int total = 0;
    for (int l : p) total += l;
    for (int n3 = 0; n3 <= 4; ++n3)
      for (int n4 = 0; n4 <= 3; ++n4) {
        int sides = total + 3 * n3 + 4 * n4;
        if (sides % 2 || sides / 2 > 8) continue;
        auto profile = brute_force_genus_profile(p, {n3, n4}, 8);
        for (int g = 0; g <= 2; ++g) {
          int v = vertex_count(g, p, {n3, n4});
          if (v < 0 || v > table.order()) continue;
          std::int64_t want = static_cast<std::size_t>(g) < profile.size() ? profile[static_cast<std::size_t>(g)] : 0;
          if (table.get(g, p).coefficient({v, n3, n4}) != want) return false;
        }
      }
  }
  return true;
}

int cmd_verify(bool as_json) {
  bool all = true;
  json results = json::array();
  for (const auto& f : load_all_fixtures()) {
    FixtureReport r = verify_fixture(f);
    all = all && r.ok();
    results.push_back({{"name", r.name}, {"ok", r.ok()}, {"missing", r.missing}, {"extra", r.extra}, {"seconds", r.seconds}});
  }
  const bool orbits = check_beta_orbits();
  const bool tutte = check_tutte_small();
  all = all && orbits && tutte;
  if (as_json) {
    std::cout << json{{"schema", "tgc.verify/1"}, {"fixtures", results}, {"beta_orbits", orbits}, {"tutte", tutte}, {"ok", all}}.dump(2)
              << "\n";
    return all ? 0 : 1;
  }
  for (const auto& r : results) {
    std::cout << paint(r["ok"].get<bool>() ? "PASS" : "FAIL", r["ok"].get<bool>()) << "  fixture "
              << r["name"].get<std::string>() << "\n";
    for (const auto& m : r["missing"]) std::cout << "      missing " << m.get<std::string>() << "\n";
    for (const auto& m : r["extra"]) std::cout << "      extra   " << m.get<std::string>() << "\n";
  }
  std::cout << paint(orbits ? "PASS" : "FAIL", orbits) << "  beta-orbit invariance, words up to 6 vertices\n";
  std::cout << paint(tutte ? "PASS" : "FAIL", tutte) << "  tutte recursion vs map enumeration, up to 8 edges\n";
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coloured-graph calculus and Schwinger-Dyson equation generator"};
  app.require_subcommand(1);
  int rank = 3;
  std::string file;
  app.add_option("--rank", rank, "Number of colours")->check(CLI::Range(2, 6));

  std::string word_spec;
  std::string format = "text";
  auto word_opts = [&](CLI::App* sub) {
    sub->add_option("word", word_spec, "Word spec, e.g. m|V1");
    sub->add_option("--file", file, "Word as tgc.word/1 JSON");
  };

  auto* inspect = app.add_subcommand("inspect", "Code, components, automorphisms and genus");
  word_opts(inspect);
  inspect->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  int colour = 0;
  std::string at;
  auto* swap = app.add_subcommand("swap", "Colour-c edge swap at two black vertices");
  word_opts(swap);
  swap->add_option("--color", colour, "Colour (1-based)")->required();
  swap->add_option("--at", at, "beta,rho (1-based blacks)")->required();
  swap->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  int vertex = 0;
  auto* bridges = app.add_subcommand("bridges", "2-bridge sets per colour");
  word_opts(bridges);
  bridges->add_option("--vertex", vertex, "Black vertex (1-based)")->required();
  bridges->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  std::string beta;
  bool expand_y = false;
  std::string convention = "orbit";
  auto* sde = app.add_subcommand("sde", "Schwinger-Dyson equation of a word");
  word_opts(sde);
  sde->add_option("--beta", beta, "component:vertex (1-based)")->required();
  sde->add_flag("--expand-y", expand_y, "Substitute tabulated f-coefficients");
  sde->add_option("--convention", convention)->check(CLI::IsMember({"orbit", "literal"}));
  sde->add_option("--format", format)->check(CLI::IsMember({"text", "latex", "json"}));

  int max_vertices = 4;
  bool words = false;
  auto* enumerate = app.add_subcommand("enumerate", "Connected classes and boundary words");
  enumerate->add_option("--max-vertices", max_vertices)->required();
  enumerate->add_flag("--words", words, "Also list all words");
  enumerate->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  int genus = 0, order = 6, d = 4;
  std::string perims;
  auto* tutte = app.add_subcommand("tutte", "Map generating-function coefficients");
  tutte->add_option("--genus", genus)->check(CLI::NonNegativeNumber);
  tutte->add_option("--perimeters", perims, "l1,l2,...")->required();
  tutte->add_option("--order", order, "Truncation order in t")->check(CLI::Range(0, 40));
  tutte->add_option("--d", d, "Largest polygon")->check(CLI::Range(3, 6));
  std::string tutte_format = "csv";
  tutte->add_option("--format", tutte_format)->check(CLI::IsMember({"csv", "json", "text"}));

  auto* verify = app.add_subcommand("verify", "Golden fixtures and property checks");
  verify->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const bool as_json = format == "json";
    if (*inspect) return cmd_inspect(resolve_word(word_spec, file, rank), rank, as_json);
    if (*swap) return cmd_swap(resolve_word(word_spec, file, rank), rank, colour, at, as_json);
    if (*bridges) return cmd_bridges(resolve_word(word_spec, file, rank), rank, vertex, as_json);
    if (*sde) return cmd_sde(resolve_word(word_spec, file, rank), beta, expand_y, convention, format);
    if (*enumerate) return cmd_enumerate(rank, max_vertices, words, as_json);
    if (*tutte) return cmd_tutte(genus, perims, order, d, tutte_format);
    if (*verify) return cmd_verify(as_json);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const GraphError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ExprError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const TutteError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
