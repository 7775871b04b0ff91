#include <gtest/gtest.h>

#include <random>

#include "tgc/catalog.hpp"
#include "tgc/expr.hpp"

using namespace tgc;

namespace {

Expr P(const std::string& s) { return parse_text(s); }

std::vector<Expr> samples() {
  return {
      P("G[m|V1](x,z,y)"),
      P("-2*lambda/E[x]*(G[m](x) + 1/E(y_1,x_1)*(G[V1](x,y) - G[V1]((y_1,x_2,x_3),y)))"),
      P("sum[b_2](1/E(b_2,x_2)*(G[m|m](x,y) - G[m|m]((x_1,b_2,x_3),y)))"),
      P("f3[m|m;x_3](x,y) + f3[m|m;x_3](y,x) + f1[;x_1]()*G[K33](x,y,z)"),
      P("1/3*G[Q2](x,y,z) - 7/2*lambda^2*G[F1;23](z,x,y)"),
      P("sum[q_1,q_3](G[m|m](x,(q_1,s_2,q_3)))"),
  };
}

}  // namespace

TEST(Normalize, ComponentOrderAndAutomorphisms) {
  EXPECT_TRUE(equal_normalized(P("G[m|V1](x,z,y)"), P("G[m|V1](x,y,z)")));
  EXPECT_TRUE(equal_normalized(P("G[V1|m](y,z,x)"), P("G[m|V1](x,y,z)")));
  EXPECT_FALSE(equal_normalized(P("G[m|V1](x,y,z)"), P("G[m|V1](y,x,z)")));
  EXPECT_TRUE(equal_normalized(P("G[m|m](x,y)"), P("G[m|m](y,x)")));
  EXPECT_TRUE(equal_normalized(P("G[K33](x,y,z)"), P("G[K33](y,z,x)")));
}

TEST(Normalize, Associativity) {
  auto a = P("G[m](x)"), b = P("G[m](y)"), c = P("G[V2](x,y)");
  EXPECT_TRUE(equal_normalized(a + (b + c), (c + a) + b));
  EXPECT_TRUE(equal_normalized(a * (b * c), (c * a) * b));
  EXPECT_TRUE(is_zero(a - a));
  EXPECT_TRUE(equal_normalized(a + a, scalar(2) * a));
  EXPECT_TRUE(is_zero(scalar(0) * c));
}

TEST(Normalize, BoundNamesAreIrrelevant) {
  EXPECT_TRUE(equal_normalized(P("sum[b_1](G[m]((b_1,x_2,x_3)))"), P("sum[u_1](G[m]((u_1,x_2,x_3)))")));
  EXPECT_FALSE(equal_normalized(P("sum[b_1](G[m]((b_1,x_2,x_3)))"), P("sum[b_2](G[m]((x_1,b_2,x_3)))")));
}

TEST(Normalize, IdempotentAndKeepsFreeAtoms) {
  for (const auto& e : samples()) {
    auto n = normalize(e);
    EXPECT_EQ(render_text(normalize(n)), render_text(n));
    EXPECT_EQ(canonical_key(n), canonical_key(e));
    EXPECT_TRUE(equal_normalized(n, e));
  }
  auto e = P("G[m|m](x,y) + sum[b_1](G[m|m]((b_1,x_2,x_3),y))");
  EXPECT_EQ(free_atoms(normalize(e)), free_atoms(e));
}

TEST(Normalize, OrbitArgumentPermutations) {
  // Every automorphism of V1 x V1 x (block swap) leaves the normalized form unchanged.
  auto base = P("G[V1|V1](x,y,z,w)");
  for (const char* s : {"G[V1|V1](y,x,z,w)", "G[V1|V1](z,w,x,y)", "G[V1|V1](w,z,y,x)", "G[V1|V1](x,y,w,z)"})
    EXPECT_TRUE(equal_normalized(base, P(s))) << s;
  EXPECT_FALSE(equal_normalized(base, P("G[V1|V1](x,z,y,w)")));
}

TEST(Substitute, Examples) {
  auto s = substitute(P("G[m|m](x,y)"), Atom{"x", 1}, "b");
  EXPECT_EQ(render_text(s), "G[m|m]((b_1,x_2,x_3),y)");
  auto same = substitute(P("G[m|m](x,y)"), Atom{"z", 1}, "b");
  EXPECT_TRUE(equal_normalized(same, P("G[m|m](x,y)")));
  EXPECT_THROW(substitute(P("sum[b_1](G[m]((b_1,x_2,x_3)))"), Atom{"b", 1}, "z"), ExprError);
}

TEST(Substitute, NoCapture) {
  auto e = substitute(P("sum[b_1](G[m|m]((b_1,x_2,x_3),z))"), Atom{"z", 1}, "b");
  auto atoms = free_atoms(e);
  EXPECT_NE(std::find(atoms.begin(), atoms.end(), Atom{"b", 1}), atoms.end());
  EXPECT_TRUE(equal_normalized(e, P("sum[u_1](G[m|m]((u_1,x_2,x_3),(b_1,z_2,z_3)))")));
}

TEST(Substitute, TadpolePair) {
  auto g = P("G[m|m](x,y)");
  auto pair = g - substitute(g, Atom{"x", 2}, "b");
  EXPECT_TRUE(equal_normalized(pair, P("G[m|m](x,y) - G[m|m]((x_1,b_2,x_3),y)")));
}

TEST(Render, TextFormat) {
  EXPECT_EQ(render_text(normalize(P("-2*lambda/E[x]"))), "(-2*lambda/E[x])");
  EXPECT_EQ(render_text(P("sum[b_1](G[m]((b_1,x_2,x_3)))")).rfind("sum[b_1]", 0), 0u);
  EXPECT_EQ(render_text(P("f1[;x_1]()")), "f1[;x_1]()");
  EXPECT_EQ(render_text(P("G[m|V1](x,z,y)")), "G[m|V1](x,z,y)");
}

TEST(Render, Latex) {
  EXPECT_EQ(render_latex(P("G[m|V1](x,z,y)")), "G^{(6)}_{\\mathrm{m}|V_{1}}(\\mathbf{x},\\mathbf{z},\\mathbf{y})");
  EXPECT_EQ(render_latex(P("f1[;x_1]()")), "\\mathfrak{f}^{(1)}_{\\varnothing;x_{1}}()");
  EXPECT_EQ(render_latex(P("sum[b_1](1/E(b_1,x_1)*G[m]((b_1,x_2,x_3)))")),
            "\\sum_{b_{1}} \\frac{1}{E(b_{1},x_{1})} G^{(2)}_{\\mathrm{m}}((b_{1},x_{2},x_{3}))");
}

TEST(Render, RoundTrips) {
  for (const auto& e : samples()) {
    EXPECT_TRUE(equal_normalized(parse_json(render_json(e)), e)) << render_text(e);
    EXPECT_TRUE(equal_normalized(parse_text(render_text(e)), e)) << render_text(e);
    EXPECT_EQ(render_text(normalize(e)), render_text(normalize(parse_text(render_text(normalize(e))))));
  }
  Equation eq{P("G[m](x)"), P("-2*lambda/E[x]*f1[;x_1]()*G[m](x)")};
  auto back = parse_equation_json(render_json(eq));
  EXPECT_TRUE(equal_normalized(back.lhs, eq.lhs));
  EXPECT_TRUE(equal_normalized(back.rhs, eq.rhs));
}

TEST(Parse, Errors) {
  EXPECT_THROW(P("G[m](x"), ExprError);
  EXPECT_THROW(P("G[m](x,y)"), ExprError);
  EXPECT_THROW(P("G[zz](x)"), std::exception);
  EXPECT_THROW(P("sum[b_4](G[m](x))"), ExprError);
  EXPECT_THROW(normalize(P("G[m](q0)")), ExprError);
  EXPECT_THROW(normalize(P("G[m]((q3_1,x_2,x_3))")), ExprError);
  EXPECT_NO_THROW(normalize(P("sum[q1_1](G[m]((q1_1,x_2,x_3)))")));
}

TEST(Macros, ColourSumExpansion) {
  auto text = expand_colour_macros("colsum{a}( f{a}[m;x_{a}](y) + G[V{a}](x,(y_{a},x_{b},x_{c})) )");
  auto e = P(text);
  auto want = P(
      "f1[m;x_1](y) + G[V1](x,(y_1,x_2,x_3)) + f2[m;x_2](y) + G[V2](x,(x_1,y_2,x_3)) + f3[m;x_3](y) + "
      "G[V3](x,(x_1,x_2,y_3))");
  EXPECT_TRUE(equal_normalized(e, want));
}

TEST(Monomials, CombineLikeTerms) {
  auto m = monomials(P("G[m](x) + 2*G[m](x) - 3*G[m](x) + lambda*G[m](y)"));
  ASSERT_EQ(m.size(), 1u);
  EXPECT_EQ(m[0].lambda, 1);
  EXPECT_EQ(m[0].coeff, 1);
}
