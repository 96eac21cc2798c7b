#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sds/form.hpp"
#include "test_support.hpp"

using namespace sds;
using namespace sds::testing;

TEST_CASE("rationals are canonical and print as num/den") {
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(to_fraction_string(parse_rational("-6/4")) == "-3/2");
  CHECK(to_fraction_string(Rational(0)) == "0/1");
  CHECK(to_fraction_string(Rational(-1)) == "-1/1");
  CHECK(to_string(Rational(5)) == "5");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK(pow(Rational(2, 3), 3) == Rational(8, 27));
  CHECK(pow(Rational(7), 0) == 1);
}

TEST_CASE("parse_form: cyclic polynomial") {
  const Form f = parse_form(kCyclic);
  CHECK(f.size() == 6);
  CHECK(f.variables() == 3);
  CHECK(f.degree() == 6);
  CHECK(f.coefficient({3, 1, 2}) == -1);
  CHECK(f.coefficient({4, 2, 0}) == 1);
}

TEST_CASE("parse_form: square expansion") {
  const Form f = parse_form("x1^2 - 2*x1*x2 + x2^2");
  CHECK(f.size() == 3);
  CHECK(f.variables() == 2);
  CHECK(f.degree() == 2);
  CHECK(f.coefficient({1, 1}) == -2);
}

TEST_CASE("parse_form: grammar details") {
  CHECK(parse_form("3/2*x1^2*x3 - x2^3").coefficient({2, 0, 1}) == Rational(3, 2));
  CHECK(parse_form("  - x1 *x2 +  4 / 6 * x2^2 ").coefficient({0, 2}) == Rational(2, 3));
  CHECK(parse_form("x1*x1").coefficient({2}) == 1);
  CHECK(parse_form("x1^2 - x1^2 + x2^2").size() == 1);
  CHECK(parse_form("x1", 4).variables() == 4);
  CHECK(parse_form("x3", 2).variables() == 3);
  CHECK(parse_form("0").is_zero());
}

TEST_CASE("parse_form: errors") {
  SUBCASE("inhomogeneous input names two terms") {
    try {
      parse_form("x1 + x2^2");
      FAIL("expected InhomogeneousError");
    } catch (const InhomogeneousError& e) {
      CHECK(e.first().degree() == 1);
      CHECK(e.second().degree() == 2);
      CHECK(std::string(e.what()).find("x2^2") != std::string::npos);
    }
  }
  SUBCASE("syntax error reports a position") {
    try {
      parse_form("x1^2 + * x2^2");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.position() == 7);
    }
  }
  CHECK_THROWS_AS(parse_form("x0^2"), ParseError);
  CHECK_THROWS_AS(parse_form("xa"), ParseError);
  CHECK_THROWS_AS(parse_form("y1"), ParseError);
  CHECK_THROWS_AS(parse_form(""), ParseError);
  CHECK_THROWS_AS(parse_form("x1 x2"), ParseError);
  CHECK_THROWS_AS(parse_form("1/0*x1"), ParseError);
  CHECK_THROWS_AS(parse_form("x1^"), ParseError);
}

TEST_CASE("evaluate") {
  const Form g = parse_form("x1^2 - 3*x1*x2 + x2^2");
  CHECK(evaluate(parse_form(kCyclic), Point::ones(3)) == 0);
  CHECK(evaluate(g, Point::ones(2)) == -1);
  CHECK(evaluate(g, Point({Rational(2), Rational(1)})) == -1);
  CHECK_THROWS_AS(evaluate(g, Point::ones(3)), DimensionError);
  CHECK_THROWS_AS(Point({Rational(-1)}), std::invalid_argument);
}

TEST_CASE("trivial positivity and negativity") {
  CHECK(is_trivially_positive(parse_form("x1^2 + 2*x1*x2")));
  CHECK_FALSE(is_trivially_positive(parse_form(kCyclic)));
  CHECK(is_trivially_positive(Form(3, 2)));

  CHECK(is_trivially_negative(parse_form("x1^2 - 3*x1*x2 + x2^2")));
  CHECK_FALSE(is_trivially_negative(parse_form(kCyclic)));
  CHECK_FALSE(is_trivially_negative(parse_form("-x1^2 + x2^2")));
}

TEST_CASE("content_normalize") {
  CHECK(content_normalize(parse_form("2*x1^2 - 4*x1*x2")) == parse_form("x1^2 - 2*x1*x2"));
  CHECK(content_normalize(parse_form("1/2*x1^3 + 3/2*x2^3")) == parse_form("x1^3 + 3*x2^3"));
  CHECK(content_normalize(parse_form("x1^2 - x2^2")) == parse_form("x1^2 - x2^2"));
  CHECK(content_normalize(parse_form("4/9*x1 + 6/15*x2")) == parse_form("10*x1 + 9*x2"));
  CHECK(content_normalize(Form(2, 3)).is_zero());
}

TEST_CASE("render is canonical") {
  CHECK(render(parse_form("x2^2 - 2*x1*x2 + x1^2")) == "x1^2 - 2*x1*x2 + x2^2");
  CHECK(render(parse_form("-1/2*x1 + x2")) == "-1/2*x1 + x2");
  CHECK(render(Form(2, 2)) == "0");
  CHECK(render(parse_form(kCyclic)) ==
        "x1^4*x2^2 - x1^3*x2*x3^2 - x1^2*x2^3*x3 + x1^2*x3^4 - x1*x2^2*x3^3 + x2^4*x3^2");
}

TEST_CASE("constructors enforce homogeneity and drop zeros") {
  CHECK_THROWS_AS(Form::from_terms(2, {{{1, 0}, Rational(1)}, {{1, 1}, Rational(1)}}),
                  InhomogeneousError);
  CHECK_THROWS_AS(Form::from_terms(3, {{{1, 0}, Rational(1)}}), DimensionError);
  const Form f = Form::from_terms(2, {{{1, 1}, Rational(2)}, {{1, 1}, Rational(-2)}, {{2, 0}, Rational(1)}});
  CHECK(f.size() == 1);
  CHECK_FALSE(f.has_term({1, 1}));
}

TEST_CASE("property: random forms") {
  Rng rng(20240101);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 4));
    const unsigned d = static_cast<unsigned>(uniform(rng, 0, 6));
    const Form f = random_form(rng, n, d, 8);

    for (const auto& [alpha, c] : f.terms()) {
      REQUIRE(alpha.size() == n);
      REQUIRE(alpha.degree() == f.degree());
      REQUIRE(c != 0);
    }
    CHECK(evaluate(f, Point::ones(n)) == coefficient_sum(f));
    if (is_trivially_negative(f)) CHECK(evaluate(f, Point::ones(n)) < 0);
    CHECK(parse_form(render(f), n) == f);

    const Form g = content_normalize(f);
    CHECK(content_normalize(g) == g);
    REQUIRE(g.size() == f.size());
    for (const auto& [alpha, c] : f.terms()) {
      CHECK(sgn(g.coefficient(alpha)) == sgn(c));
      CHECK(g.coefficient(alpha).get_den() == 1);
    }
  }
}

TEST_CASE("property: trivially positive forms are nonnegative on the orthant") {
  Rng rng(7);
  int checked = 0;
  while (checked < 20) {
    const std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 4));
    Form f = random_form(rng, n, static_cast<unsigned>(uniform(rng, 1, 5)), 6);
    Form::Terms abs_terms;
    for (const auto& [alpha, c] : f.terms()) abs_terms[alpha] = abs(c);
    f = Form::from_map(n, f.degree(), abs_terms);
    REQUIRE(is_trivially_positive(f));
    for (int k = 0; k < 1000; ++k) REQUIRE(evaluate(f, random_point(rng, n)) >= 0);
    ++checked;
  }
}
