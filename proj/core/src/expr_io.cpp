#include <cctype>
#include <json.hpp>
#include <sstream>

#include "tgc/catalog.hpp"
#include "tgc/expr.hpp"

namespace tgc {

namespace {

using json = nlohmann::json;

constexpr const char* kExprSchema = "tgc.expr/1";
constexpr const char* kEquationSchema = "tgc.equation/1";

struct DisplayBlock {
  std::string name;
  std::vector<Vec> args;
};

DisplayBlock display(const Block& b) {
  if (const CatalogEntry* e = entry_for_code(b.code)) {
    Labeling l = canonical_labeling(e->graph);
    DisplayBlock d{e->name, std::vector<Vec>(b.args.size())};
    for (std::size_t w = 0; w < b.args.size(); ++w) d.args[w] = b.args[l.white[w]];
    return d;
  }
  return {"#" + code_hex(b.code), b.args};
}

bool uniform(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [&](const std::string& s) { return s == v[0]; });
}

std::string text_vec(const Vec& v) {
  if (uniform(v)) return v[0];
  std::string s = "(";
  for (std::size_t c = 0; c < v.size(); ++c) {
    if (c) s += ',';
    s += v[c] + "_" + std::to_string(c + 1);
  }
  return s + ")";
}

std::string text_blocks(const std::vector<Block>& blocks, std::string& args) {
  std::string word;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    DisplayBlock d = display(blocks[i]);
    if (i) word += '|';
    word += d.name;
    for (const auto& a : d.args) {
      if (!args.empty()) args += ',';
      args += text_vec(a);
    }
  }
  return word;
}

std::string text(const Expr& e, bool in_product);

std::string text_product(const Node& n) {
  std::string s;
  bool started = false;
  for (std::size_t i = 0; i < n.children.size(); ++i) {
    const Expr& c = n.children[i];
    if (c.kind() == Kind::PropInv || c.kind() == Kind::PropDiffInv) {
      if (!started) s += "1";
      s += text(c, true);
    } else if (!started && c.kind() == Kind::Scalar && c.node().value == -1 && n.children.size() > 1) {
      s += "-";
      continue;
    } else {
      if (started) s += "*";
      s += text(c, true);
    }
    started = true;
  }
  return "(" + s + ")";
}

std::string text(const Expr& e, bool in_product) {
  const Node& n = e.node();
  switch (n.kind) {
    case Kind::Scalar:
      return n.value.get_str();
    case Kind::Lambda:
      return n.power == 1 ? "lambda" : "lambda^" + std::to_string(n.power);
    case Kind::Correlator: {
      std::string args;
      std::string word = text_blocks(n.blocks, args);
      return "G[" + word + "](" + args + ")";
    }
    case Kind::FCoeff: {
      std::string args;
      std::string word = text_blocks(n.blocks, args);
      return "f" + std::to_string(n.colour) + "[" + word + ";" + n.name + "_" + std::to_string(n.colour) + "](" +
             args + ")";
    }
    case Kind::PropInv:
      return "/E[" + text_vec(n.vec) + "]";
    case Kind::PropDiffInv:
      return "/E(" + n.a + "_" + std::to_string(n.colour) + "," + n.b + "_" + std::to_string(n.colour) + ")";
    case Kind::IndexSum: {
      std::string binders = n.name + "_" + std::to_string(n.colour);
      const Expr* body = &n.children[0];
      while (body->kind() == Kind::IndexSum) {
        binders += "," + body->node().name + "_" + std::to_string(body->node().colour);
        body = &body->node().children[0];
      }
      return "sum[" + binders + "](" + text(*body, false) + ")";
    }
    case Kind::Sum: {
      if (n.children.empty()) return "0";
      std::string s;
      for (std::size_t i = 0; i < n.children.size(); ++i) {
        std::string t = text(n.children[i], false);
        if (i == 0)
          s = t;
        else if (!t.empty() && t[0] == '-')
          s += " - " + t.substr(1);
        else
          s += " + " + t;
      }
      return in_product ? "(" + s + ")" : s;
    }
    case Kind::Product:
      if (n.children.empty()) return "1";
      return text_product(n);
  }
  return "";
}

// ---- LaTeX ----

std::string latex_name(const std::string& name) {
  if (name == "m") return "\\mathrm{m}";
  if (name == "K33") return "K_{3,3}";
  if (name.size() > 1 && (name[0] == 'V' || name[0] == 'Q' || name[0] == 'F'))
    return std::string(1, name[0]) + "_{" + name.substr(1) + "}";
  if (name[0] == '#') return "\\#" + name.substr(1);
  return name;
}

// q0, q1, ... -> q^{(0)}, q^{(1)}, ...
std::string latex_symbol(const std::string& name) {
  if (name.size() > 1 && name[0] == 'q' && std::all_of(name.begin() + 1, name.end(), ::isdigit))
    return "q^{(" + name.substr(1) + ")}";
  return name;
}

std::string latex_atom(const std::string& name, int colour) {
  return latex_symbol(name) + "_{" + std::to_string(colour) + "}";
}

std::string latex_vec(const Vec& v) {
  if (uniform(v)) return "\\mathbf{" + latex_symbol(v[0]) + "}";
  std::string s = "(";
  for (std::size_t c = 0; c < v.size(); ++c) {
    if (c) s += ',';
    s += latex_atom(v[c], static_cast<int>(c) + 1);
  }
  return s + ")";
}

std::string latex_blocks(const std::vector<Block>& blocks, std::string& args, int& k) {
  std::string word;
  k = 0;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    DisplayBlock d = display(blocks[i]);
    if (i) word += '|';
    word += latex_name(d.name);
    for (const auto& a : d.args) {
      if (!args.empty()) args += ',';
      args += latex_vec(a);
      ++k;
    }
  }
  return word;
}

std::string latex(const Expr& e, bool in_product) {
  const Node& n = e.node();
  switch (n.kind) {
    case Kind::Scalar: {
      const Rational& v = n.value;
      if (v.get_den() == 1) return v.get_num().get_str();
      std::string sign = v < 0 ? "-" : "";
      Rational a = abs(v);
      return sign + "\\frac{" + a.get_num().get_str() + "}{" + a.get_den().get_str() + "}";
    }
    case Kind::Lambda:
      return n.power == 1 ? "\\lambda" : "\\lambda^{" + std::to_string(n.power) + "}";
    case Kind::Correlator: {
      std::string args;
      int k = 0;
      std::string word = latex_blocks(n.blocks, args, k);
      return "G^{(" + std::to_string(2 * k) + ")}_{" + word + "}(" + args + ")";
    }
    case Kind::FCoeff: {
      std::string args;
      int k = 0;
      std::string word = latex_blocks(n.blocks, args, k);
      if (word.empty()) word = "\\varnothing";
      return "\\mathfrak{f}^{(" + std::to_string(n.colour) + ")}_{" + word + ";" + latex_atom(n.name, n.colour) + "}(" +
             args + ")";
    }
    case Kind::PropInv:
      return "\\frac{1}{E_{" + latex_vec(n.vec) + "}}";
    case Kind::PropDiffInv:
      return "\\frac{1}{E(" + latex_atom(n.a, n.colour) + "," + latex_atom(n.b, n.colour) + ")}";
    case Kind::IndexSum: {
      std::string binders = latex_atom(n.name, n.colour);
      const Expr* body = &n.children[0];
      while (body->kind() == Kind::IndexSum) {
        binders += "," + latex_atom(body->node().name, body->node().colour);
        body = &body->node().children[0];
      }
      std::string inner = latex(*body, true);
      if (!inner.empty() && inner[0] == '-') return "-\\sum_{" + binders + "} " + inner.substr(1);
      return "\\sum_{" + binders + "} " + inner;
    }
    case Kind::Sum: {
      if (n.children.empty()) return "0";
      std::string s;
      for (std::size_t i = 0; i < n.children.size(); ++i) {
        std::string t = latex(n.children[i], false);
        if (i == 0)
          s = t;
        else if (!t.empty() && t[0] == '-')
          s += " - " + t.substr(1);
        else
          s += " + " + t;
      }
      return in_product ? "\\left(" + s + "\\right)" : s;
    }
    case Kind::Product: {
      std::string s;
      for (std::size_t i = 0; i < n.children.size(); ++i) {
        const Expr& c = n.children[i];
        if (i == 0 && c.kind() == Kind::Scalar && c.node().value == -1 && n.children.size() > 1) {
          s += "-";
          continue;
        }
        if (c.kind() == Kind::Scalar && c.node().value == 1 && n.children.size() > 1) continue;
        if (!s.empty() && s != "-") s += " ";
        s += latex(c, true);
      }
      return s.empty() ? "1" : s;
    }
  }
  return "";
}

// ---- JSON ----

json json_blocks(const std::vector<Block>& blocks) {
  json arr = json::array();
  for (const auto& b : blocks) arr.push_back({{"code", code_hex(b.code)}, {"args", b.args}});
  return arr;
}

std::vector<Block> blocks_from_json(const json& j) {
  std::vector<Block> out;
  for (const auto& b : j) out.push_back({code_from_hex(b.at("code").get<std::string>()), b.at("args").get<std::vector<Vec>>()});
  return out;
}

json to_json(const Expr& e) {
  const Node& n = e.node();
  switch (n.kind) {
    case Kind::Scalar:
      return {{"tag", "scalar"}, {"value", n.value.get_str()}};
    case Kind::Lambda:
      return {{"tag", "lambda"}, {"power", n.power}};
    case Kind::Correlator:
      return {{"tag", "G"}, {"blocks", json_blocks(n.blocks)}};
    case Kind::FCoeff:
      return {{"tag", "f"}, {"colour", n.colour}, {"s", n.name}, {"blocks", json_blocks(n.blocks)}};
    case Kind::PropInv:
      return {{"tag", "inv_E"}, {"vec", n.vec}};
    case Kind::PropDiffInv:
      return {{"tag", "inv_Ediff"}, {"colour", n.colour}, {"a", n.a}, {"b", n.b}};
    case Kind::IndexSum:
      return {{"tag", "index_sum"}, {"bound", n.name}, {"colour", n.colour}, {"body", to_json(n.children[0])}};
    case Kind::Sum:
    case Kind::Product: {
      json arr = json::array();
      for (const auto& c : n.children) arr.push_back(to_json(c));
      return {{"tag", n.kind == Kind::Sum ? "sum" : "product"}, {"children", arr}};
    }
  }
  return {};
}

Expr from_json(const json& j) {
  const std::string tag = j.at("tag").get<std::string>();
  if (tag == "scalar") return scalar(parse_rational(j.at("value").get<std::string>()));
  if (tag == "lambda") return lambda_power(j.at("power").get<int>());
  if (tag == "G") return correlator_blocks(blocks_from_json(j.at("blocks")));
  if (tag == "f")
    return fcoeff_blocks(j.at("colour").get<int>(), j.at("s").get<std::string>(), blocks_from_json(j.at("blocks")));
  if (tag == "inv_E") return prop_inv(j.at("vec").get<Vec>());
  if (tag == "inv_Ediff")
    return prop_diff_inv(j.at("colour").get<int>(), j.at("a").get<std::string>(), j.at("b").get<std::string>());
  if (tag == "index_sum")
    return index_sum(j.at("bound").get<std::string>(), j.at("colour").get<int>(), from_json(j.at("body")));
  if (tag == "sum" || tag == "product") {
    std::vector<Expr> kids;
    for (const auto& c : j.at("children")) kids.push_back(from_json(c));
    return tag == "sum" ? sum(std::move(kids)) : product(std::move(kids));
  }
  throw ExprError("unknown expression tag '" + tag + "'");
}

// ---- text parser ----

class Parser {
 public:
  Parser(const std::string& s, int rank) : s_(s), rank_(rank) {}

  Expr parse() {
    Expr e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  const std::string& s_;
  int rank_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ExprError("parse error at offset " + std::to_string(pos_) + ": " + msg);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool accept(char c) {
    if (peek(c)) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool accept_word(const std::string& w) {
    skip();
    if (s_.compare(pos_, w.size(), w) != 0) return false;
    std::size_t end = pos_ + w.size();
    if (end < s_.size() && std::isalnum(static_cast<unsigned char>(s_[end])) && std::isalpha(static_cast<unsigned char>(w.back())))
      return false;
    pos_ = end;
    return true;
  }
  std::string name() {
    skip();
    std::size_t start = pos_;
    if (pos_ >= s_.size() || !std::isalpha(static_cast<unsigned char>(s_[pos_]))) fail("expected a symbol name");
    while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return s_.substr(start, pos_ - start);
  }
  int integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return std::stoi(s_.substr(start, pos_ - start));
  }
  Atom atom() {
    std::string n = name();
    if (!accept('_')) fail("expected '_' and a colour after '" + n + "'");
    int c = integer();
    if (c < 1 || c > rank_) fail("colour out of range");
    return {n, c};
  }
  Vec vec() {
    if (accept('(')) {
      Vec v(rank_);
      std::vector<char> seen(rank_, 0);
      do {
        Atom a = atom();
        if (seen[a.colour - 1]) fail("colour repeated in momentum vector");
        seen[a.colour - 1] = 1;
        v[a.colour - 1] = a.name;
      } while (accept(','));
      expect(')');
      for (char x : seen)
        if (!x) fail("momentum vector misses a colour");
      return v;
    }
    return uniform_vec(name(), rank_);
  }
  std::vector<Vec> args() {
    expect('(');
    std::vector<Vec> out;
    if (accept(')')) return out;
    do out.push_back(vec());
    while (accept(','));
    expect(')');
    return out;
  }
  std::string until(char stop) {
    std::size_t start = pos_;
    while (pos_ < s_.size() && s_[pos_] != stop) ++pos_;
    if (pos_ == s_.size()) fail(std::string("missing '") + stop + "'");
    std::string out = s_.substr(start, pos_ - start);
    ++pos_;
    return out;
  }
  std::vector<ColoredGraph> word(const std::string& spec) {
    try {
      return parse_word(spec, rank_);
    } catch (const GraphError& e) {
      fail(e.what());
    }
  }

  Expr expr() {
    std::vector<Expr> terms;
    bool neg = accept('-');
    Expr t = term();
    terms.push_back(neg ? -t : t);
    while (true) {
      if (accept('+'))
        terms.push_back(term());
      else if (peek('-')) {
        ++pos_;
        terms.push_back(-term());
      } else
        break;
    }
    return terms.size() == 1 ? terms[0] : sum(std::move(terms));
  }

  Expr term() {
    std::vector<Expr> f{unary()};
    while (true) {
      if (accept('*'))
        f.push_back(unary());
      else if (accept('/'))
        f.push_back(prop());
      else
        break;
    }
    return f.size() == 1 ? f[0] : product(std::move(f));
  }

  Expr prop() {
    if (!accept('E')) fail("expected E after '/'");
    if (accept('[')) {
      Vec v = vec();
      expect(']');
      return prop_inv(v);
    }
    expect('(');
    Atom a = atom();
    expect(',');
    Atom b = atom();
    expect(')');
    if (a.colour != b.colour) fail("E(a,b) needs equal colours");
    return prop_diff_inv(a.colour, a.name, b.name);
  }

  Expr unary() {
    if (accept('-')) return -unary();
    return primary();
  }

  Expr primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char ch = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ + 1 < s_.size() && s_[pos_] == '/' && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
        ++pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      }
      return scalar(parse_rational(s_.substr(start, pos_ - start)));
    }
    if (accept('(')) {
      Expr e = expr();
      expect(')');
      return e;
    }
    if (accept_word("lambda")) {
      int p = 1;
      if (accept('^')) p = integer();
      return lambda_power(p);
    }
    if (accept_word("sum")) {
      expect('[');
      std::vector<Atom> binders;
      do binders.push_back(atom());
      while (accept(','));
      expect(']');
      expect('(');
      Expr body = expr();
      expect(')');
      for (auto it = binders.rbegin(); it != binders.rend(); ++it) body = index_sum(it->name, it->colour, body);
      return body;
    }
    if (ch == 'G' && pos_ + 1 < s_.size() && s_[pos_ + 1] == '[') {
      pos_ += 2;
      auto w = word(until(']'));
      auto a = args();
      try {
        return correlator(w, a);
      } catch (const ExprError& e) {
        fail(e.what());
      }
    }
    if (ch == 'f' && pos_ + 1 < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
      ++pos_;
      int c = integer();
      expect('[');
      std::string inside = until(']');
      auto semi = inside.rfind(';');
      if (semi == std::string::npos) fail("f needs '[word;s_c]'");
      auto w = word(inside.substr(0, semi));
      std::string srest = inside.substr(semi + 1);
      auto us = srest.find('_');
      if (us == std::string::npos) fail("f needs s_c");
      std::string sname = srest.substr(0, us);
      while (!sname.empty() && std::isspace(static_cast<unsigned char>(sname.front()))) sname.erase(sname.begin());
      if (std::stoi(srest.substr(us + 1)) != c) fail("f colour and s colour differ");
      auto a = args();
      try {
        return fcoeff(c, sname, w, a);
      } catch (const ExprError& e) {
        fail(e.what());
      }
    }
    fail("unexpected character '" + std::string(1, ch) + "'");
  }
};

std::string replace_all(std::string s, const std::string& from, const std::string& to) {
  std::size_t p = 0;
  while ((p = s.find(from, p)) != std::string::npos) {
    s.replace(p, from.size(), to);
    p += to.size();
  }
  return s;
}

}  // namespace

std::string render_text(const Expr& e) { return text(e, false); }
std::string render_latex(const Expr& e) { return latex(e, false); }

std::string render_json(const Expr& e, int indent) {
  json j{{"schema", kExprSchema}, {"expr", to_json(e)}};
  return j.dump(indent);
}

Expr parse_text(const std::string& src, int rank) {
  std::string expanded = expand_colour_macros(src);
  return Parser(expanded, rank).parse();
}

Expr parse_json(const std::string& src) {
  json j = json::parse(src);
  if (j.value("schema", "") != kExprSchema) throw ExprError("unsupported expression schema");
  return from_json(j.at("expr"));
}

std::string render_text(const Equation& eq) { return render_text(eq.lhs) + " = " + render_text(eq.rhs); }

std::string render_latex(const Equation& eq) { return render_latex(eq.lhs) + " = " + render_latex(eq.rhs); }

std::string render_json(const Equation& eq, int indent) {
  json j{{"schema", kEquationSchema}, {"lhs", to_json(eq.lhs)}, {"rhs", to_json(eq.rhs)}};
  return j.dump(indent);
}

Equation parse_equation_json(const std::string& src) {
  json j = json::parse(src);
  if (j.value("schema", "") != kEquationSchema) throw ExprError("unsupported equation schema");
  return {from_json(j.at("lhs")), from_json(j.at("rhs"))};
}

std::string expand_colour_macros(const std::string& src) {
  static const std::string open = "colsum{a}(";
  std::string s = src;
  std::size_t p;
  while ((p = s.find(open)) != std::string::npos) {
    std::size_t i = p + open.size();
    int depth = 1;
    std::size_t j = i;
    for (; j < s.size() && depth > 0; ++j) {
      if (s[j] == '(') ++depth;
      if (s[j] == ')') --depth;
    }
    if (depth != 0) throw ExprError("unbalanced colsum");
    std::string body = s.substr(i, j - 1 - i);
    std::string out = "(";
    const int perms[3][3] = {{1, 2, 3}, {2, 1, 3}, {3, 1, 2}};
    for (int k = 0; k < 3; ++k) {
      std::string b = replace_all(body, "{a}", std::to_string(perms[k][0]));
      b = replace_all(b, "{b}", std::to_string(perms[k][1]));
      b = replace_all(b, "{c}", std::to_string(perms[k][2]));
      if (k) out += " + ";
      out += "(" + b + ")";
    }
    out += ")";
    s = s.substr(0, p) + out + s.substr(j);
  }
  return s;
}

}  // namespace tgc
