#include <gtest/gtest.h>

#include <cmath>

#include "relloc/obsexpr.hpp"
#include "relloc/sampling.hpp"

using namespace relloc;

namespace {

Valuation random_valuation(Sampler& s) {
  Valuation v;
  for (auto& x : v.values) x = s.uniform(-2.0, 2.0);
  v[Symbol::Mass] = s.uniform(0.5, 2.0);
  v[Symbol::Spin] = s.uniform(0.5, 2.0);
  v[Symbol::Light] = s.uniform(0.5, 2.0);
  return v;
}

double central_difference(const Expression& f, Valuation v, Symbol s) {
  const double x = v[s];
  const double h = 1e-6 * std::max(1.0, std::abs(x));
  v[s] = x + h;
  const double up = evaluate(f, v);
  v[s] = x - h;
  return (up - evaluate(f, v)) / (2.0 * h);
}

const char* kP0 = "-sqrt(m^2*c^2 + p1^2 + p2^2 + p3^2)";

}  // namespace

TEST(Parse, SumOfProductAndSymbol) {
  const Expression e = parse("x1*p1 + s3");
  ASSERT_EQ(e.kind(), Expression::Kind::Sum);
  ASSERT_EQ(e.operands().size(), 2u);
  const Expression& prod = e.operands()[0];
  ASSERT_EQ(prod.kind(), Expression::Kind::Product);
  EXPECT_EQ(prod.operands()[0].symbol(), Symbol::X1);
  EXPECT_EQ(prod.operands()[1].symbol(), Symbol::P1);
  EXPECT_EQ(e.operands()[1].symbol(), Symbol::S3);
}

TEST(Parse, PrecedenceAndAssociativity) {
  Valuation v;
  EXPECT_EQ(evaluate(parse("2 + 3*4"), v), 14.0);
  EXPECT_EQ(evaluate(parse("2^3^2"), v), 512.0);
  EXPECT_EQ(evaluate(parse("-2^2"), v), -4.0);
  EXPECT_EQ(evaluate(parse("8/4/2"), v), 1.0);
  EXPECT_EQ(evaluate(parse("  7 - 2 - 1 "), v), 4.0);
  EXPECT_EQ(evaluate(parse("2^-1"), v), 0.5);
  EXPECT_EQ(evaluate(parse("(1 + 1)*3"), v), 6.0);
  EXPECT_EQ(evaluate(parse("1.5e1"), v), 15.0);
}

TEST(Parse, RestEnergyExpression) {
  const Expression p0 = parse(kP0);
  Valuation v;
  v[Symbol::Mass] = 2.0;
  v[Symbol::Light] = 3.0;
  EXPECT_DOUBLE_EQ(evaluate(p0, v), -6.0);
  v[Symbol::P1] = 8.0;
  EXPECT_DOUBLE_EQ(evaluate(p0, v), -10.0);
}

TEST(Parse, SyntaxErrorReportsOffset) {
  try {
    parse("x1 +");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
  EXPECT_THROW(parse("(x1"), ParseError);
  EXPECT_THROW(parse("x1 x2"), ParseError);
  EXPECT_THROW(parse(""), ParseError);
  EXPECT_THROW(parse("x1^0.5"), ParseError);
  EXPECT_THROW(parse("x1^p1"), ParseError);
  EXPECT_THROW(parse("sqrt x1"), ParseError);
}

TEST(Parse, UnknownSymbolListsAlphabet) {
  try {
    parse("x1 + q7");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 5u);
    const std::string msg = e.what();
    for (const char* name : {"x1", "x2", "x3", "p1", "p2", "p3", "s1", "s2", "s3", "m", "S", "c"})
      EXPECT_NE(msg.find(std::string(" ") + name), std::string::npos) << name;
  }
}

TEST(Parse, Aliases) {
  AliasMap aliases;
  aliases.emplace("E", parse("p1^2/2"));
  Valuation v;
  v[Symbol::P1] = 3.0;
  EXPECT_EQ(evaluate(parse("E + 1", aliases), v), 5.5);
}

TEST(Expression, SimplifyingConstructors) {
  const Expression x(Symbol::X1);
  EXPECT_TRUE((x * 0.0).is_constant(0.0));
  EXPECT_EQ((x * 1.0).id(), x.id());
  EXPECT_EQ((x + 0.0).id(), x.id());
  EXPECT_EQ((x / 1.0).id(), x.id());
  EXPECT_TRUE((Expression(0.0) / x).is_constant(0.0));
  EXPECT_TRUE((Expression(2.0) * Expression(3.0)).is_constant(6.0));
  EXPECT_TRUE(pow(x, 0).is_constant(1.0));
  EXPECT_EQ(pow(x, 1).id(), x.id());
  EXPECT_EQ(pow(pow(x, 2), 3).exponent(), 6);
  EXPECT_TRUE(sqrt(Expression(4.0)).is_constant(2.0));
  EXPECT_EQ((x + x + x).operands().size(), 3u);
  EXPECT_EQ(x.dependencies(), 1u);
  EXPECT_TRUE(parse("x1*p2 + s3").depends_on(Symbol::S3));
  EXPECT_FALSE(parse("x1*p2 + s3").depends_on(Symbol::X2));
}

TEST(Expression, PrintingRoundTrips) {
  Sampler s(21);
  for (const char* text : {"x1*p1 + s3", kP0, "-(x1 + p2)*s1", "x1/(p1*p2)", "(x1 - p1)^3", "-x1^2",
                           "x1 - (p1 - s1)", "2*x1/(3 + p2^2)", "-1.25*x2 - -3", "x1^-2 + p1"}) {
    const Expression e = parse(text);
    const Expression back = parse(e.to_string());
    for (int n = 0; n < 10; ++n) {
      const Valuation v = random_valuation(s);
      EXPECT_NEAR(evaluate(e, v), evaluate(back, v), 1e-12 * (1.0 + std::abs(evaluate(e, v))))
          << text << " printed as " << e.to_string();
    }
  }
}

TEST(Differentiate, Examples) {
  const Expression p0 = parse(kP0);
  const Expression d = differentiate(p0, Symbol::P1);
  Sampler s(22);
  for (int n = 0; n < 20; ++n) {
    const Valuation v = random_valuation(s);
    EXPECT_NEAR(evaluate(d, v), v[Symbol::P1] / evaluate(p0, v), 1e-14);
    EXPECT_NEAR(evaluate(d, v), central_difference(p0, v, Symbol::P1), 1e-8);
  }
  EXPECT_TRUE(differentiate(parse("p2"), Symbol::X1).is_constant(0.0));
  EXPECT_EQ(differentiate(parse("s1*s2"), Symbol::S2).symbol(), Symbol::S1);
  EXPECT_TRUE(differentiate(parse("m*c*x1"), Symbol::P1).is_constant(0.0));
}

TEST(Differentiate, MatchesFiniteDifferences) {
  Sampler s(23);
  const char* exprs[] = {"x1^3*p2 - s1/(2 + p1^2)", "sqrt(1 + (x1*p2 - x2*p1)^2)",
                         "(s1*p1 + s2*p2)/(m*c + sqrt(m^2*c^2 + p1^2 + p2^2 + p3^2))", "x1^-2*(3 + x1)"};
  for (const char* text : exprs) {
    const Expression f = parse(text);
    for (int n = 0; n < 10; ++n) {
      Valuation v = random_valuation(s);
      v[Symbol::X1] = s.uniform(0.5, 2.0);
      for (int k = 0; k < 9; ++k) {
        const Symbol sym = static_cast<Symbol>(k);
        const double a = evaluate(differentiate(f, sym), v);
        const double b = central_difference(f, v, sym);
        EXPECT_LT(std::abs(a - b) / std::max(1.0, std::abs(a)), 1e-6) << text << " d/d" << symbol_name(sym);
      }
    }
  }
}

TEST(Evaluate, ExamplesAndDomainErrors) {
  Valuation v;
  v[Symbol::X2] = 7.0;
  EXPECT_EQ(evaluate(parse("x2"), v), 7.0);
  v[Symbol::Mass] = 1.5;
  v[Symbol::Light] = 2.0;
  EXPECT_DOUBLE_EQ(evaluate(parse(kP0), v), -3.0);
  v[Symbol::P1] = 3.0;
  EXPECT_THROW(evaluate(parse("1/(m*c - p1)"), v), DomainError);
  EXPECT_THROW(evaluate(parse("sqrt(x1 - 1)"), v), DomainError);
  EXPECT_THROW(evaluate(parse("x1^-1"), v), DomainError);
  EXPECT_THROW(CompiledExpression(parse("1/(m*c - p1)"))(v), DomainError);
}

TEST(Evaluate, CompiledMatchesRecursive) {
  Sampler s(24);
  const Expression f = poisson_bracket(parse("x1*sqrt(1 + p1^2)/(2 + s2^2)"), parse("p1^3 - x1*s3 + s1*s2"));
  const CompiledExpression cf(f);
  EXPECT_LE(cf.size(), f.node_count());
  for (int n = 0; n < 20; ++n) {
    const Valuation v = random_valuation(s);
    EXPECT_DOUBLE_EQ(cf(v), evaluate(f, v));
  }
}

TEST(PoissonBracket, CanonicalAndSpinExamples) {
  EXPECT_TRUE(poisson_bracket(parse("x1"), parse("p1")).is_constant(1.0));
  EXPECT_TRUE(poisson_bracket(parse("p1"), parse("x1")).is_constant(-1.0));
  EXPECT_TRUE(poisson_bracket(parse("x1"), parse("p2")).is_constant(0.0));
  const Expression s12 = poisson_bracket(parse("s1"), parse("s2"));
  EXPECT_EQ(s12.kind(), Expression::Kind::Variable);
  EXPECT_EQ(s12.symbol(), Symbol::S3);
  Valuation v;
  v[Symbol::S1] = 0.3;
  EXPECT_DOUBLE_EQ(evaluate(poisson_bracket(parse("s2"), parse("s3")), v), 0.3);
}

TEST(PoissonBracket, AngularMomentumOnMomentum) {
  // {J_12, P_1} = P_2 with J_12 = x1 p2 - x2 p1 + s3
  const Expression b = poisson_bracket(parse("x1*p2 - x2*p1 + s3"), parse("p1"));
  Sampler s(25);
  for (int n = 0; n < 10; ++n) {
    const Valuation v = random_valuation(s);
    EXPECT_DOUBLE_EQ(evaluate(b, v), v[Symbol::P2]);
  }
}

TEST(PoissonBracket, AlgebraicProperties) {
  Sampler s(26);
  const Expression f = parse("x1*p2 + s1*s2/(2 + x3^2)");
  const Expression g = parse("sqrt(1 + p1^2 + s3^2)*x2");
  const Expression h = parse("s1^2*p3 - x1*x2*p1");
  for (int n = 0; n < 20; ++n) {
    const Valuation v = random_valuation(s);
    const double fg = evaluate(poisson_bracket(f, g), v);
    EXPECT_NEAR(fg, -evaluate(poisson_bracket(g, f), v), 1e-10);
    EXPECT_NEAR(evaluate(poisson_bracket(f, g * h), v),
                fg * evaluate(h, v) + evaluate(g, v) * evaluate(poisson_bracket(f, h), v), 1e-10 * (1 + std::abs(fg)));
    const double j = evaluate(poisson_bracket(f, poisson_bracket(g, h)), v) +
                     evaluate(poisson_bracket(g, poisson_bracket(h, f)), v) +
                     evaluate(poisson_bracket(h, poisson_bracket(f, g)), v);
    EXPECT_NEAR(j, 0.0, 1e-8);
  }
}
