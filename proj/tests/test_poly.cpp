#include <doctest.h>

#include "qdyn/error.hpp"
#include "qdyn/parse.hpp"
#include "qdyn/poly.hpp"
#include "support.hpp"

using namespace qdyn;

namespace {

const QuatSpecPtr H = QuatSpec::hamilton();
const OctSpecPtr O = OctSpec::classical();

QuatPoly hp(const char* s) { return parse_quat_poly(s, H); }
Quaternion hq(const char* s) { return parse_quaternion(s, H); }
OctPoly op(const char* s) { return parse_oct_poly(s, O); }
Octonion oq(const char* s) { return parse_octonion(s, O); }

}  // namespace

TEST_CASE("products keep coefficient order") {
  auto i = Quaternion::i(H), j = Quaternion::j(H), k = Quaternion::k(H);
  QuatPoly lhs = (QuatPoly::x(H) + QuatPoly::constant(i)) * (QuatPoly::x(H) + QuatPoly::constant(j));
  QuatPoly rhs(H, {k, i + j, Quaternion::one(H)});
  CHECK(lhs == rhs);
  CHECK(hp("x^2 - i*x + 1 - i*j") * hp("x^2 + i*x + 1 + i*j") == hp("x^4 + 3*x^2 + 2"));
  CHECK(hp("x + i") * QuatPoly::one(H) == hp("x + i"));
}

TEST_CASE("evaluation") {
  QuatPoly g = hp("x^2 + i*x + 1 + i*j");
  CHECK(peval(g, hq("-j")).is_zero());
  CHECK(peval(hp("i*x^2"), hq("j + 1")) == hq("2*i*j"));
  CHECK(peval(g, Quaternion(H)) == g.coeffs()[0]);
}

TEST_CASE("powers") {
  QuatPoly f = hp("i*x^2");
  CHECK(ppow(f, 2) == hp("-x^4"));
  CHECK(ppow(f, 1) == f);
}

TEST_CASE("composition") {
  QuatPoly f = hp("i*x^2");
  CHECK(pcompose(f, f) == hp("-i*x^4"));
  CHECK(pcompose(f, QuatPoly::x(H)) == f);
  CHECK(iterate_compose(f, 1) == f);
  CHECK(iterate_compose(f, 2) == hp("-i*x^4"));

  OctPoly g = op("l*x^2 + (1 - i*l)*x + l - (i*j)*l");
  // Expanded by hand with the doubling rule: f^2 has x-coefficient
  // bc + cb = 2(1 - k)l, which l turns into -2 - 2k.
  OctPoly expected = op("-l*x^4 - 2*x^3 - (i + l)*x^2 - 2*(1 + k + i*l)*x + i + j - 2*k*l");
  CHECK(pcompose(g, g) == expected);
  CHECK(iterate_compose(g, 2) == expected);
}

TEST_CASE("composition is not power-associative") {
  QuatPoly f = hp("i*x^2 + j*x");
  QuatPoly outer = iterate_compose(f, 3);
  QuatPoly inner = pcompose(iterate_compose(f, 2), f);
  CHECK(outer == testing::oracle_compose(f, testing::oracle_compose(f, f)));
  CHECK(inner == testing::oracle_compose(testing::oracle_compose(f, f), f));
  CHECK_FALSE(outer == inner);
}

TEST_CASE("iterated evaluation differs from evaluating the composition") {
  QuatPoly f = hp("i*x^2");
  CHECK(star_eval(f, hq("j + 1"), 2) == hq("-4*i"));
  CHECK(peval(iterate_compose(f, 2), hq("j + 1")) == hq("4*i"));
  CHECK(star_eval(f, hq("j + 1"), 1) == peval(f, hq("j + 1")));
  CHECK(star_eval(hp("x^2 + i"), hq("-i"), 2) == hq("-i"));
}

TEST_CASE("degree cap") {
  QuatPoly f = hp("x^2 + i");
  CHECK_THROWS_AS(iterate_compose(f, 13), DegreeCapError);
  CHECK_NOTHROW(iterate_compose(f, 4, 16));
  CHECK_THROWS_AS(iterate_compose(f, 5, 16), DegreeCapError);
  CHECK(iterate_compose(hp("i*x + 1"), 40).degree() == 1);
}

TEST_CASE("right division by a linear factor") {
  auto [q1, r1] = right_divide_linear(hp("x^2 + i*x + 1 + i*j"), hq("-j"));
  CHECK(r1.is_zero());
  CHECK(q1 * hp("x + j") == hp("x^2 + i*x + 1 + i*j"));

  auto [q2, r2] = right_divide_linear(hp("x - 3*k"), hq("3*k"));
  CHECK(q2 == QuatPoly::one(H));
  CHECK(r2.is_zero());

  CHECK_THROWS_AS(right_divide_linear(op("x + l"), oq("l")), MathError);
}

TEST_CASE("factor theorem on random polynomials") {
  testing::Rng rng(41);
  for (int n = 0; n < 200; ++n) {
    QuatPoly f = rng.quat_poly(H, rng.uniform(1, 4));
    Quaternion lambda = rng.quat(H);
    auto [quot, rem] = right_divide_linear(f, lambda);
    CHECK(rem == peval(f, lambda));
    QuatPoly lin = QuatPoly::x(H) - QuatPoly::constant(lambda);
    CHECK(quot * lin + QuatPoly::constant(rem) == f);
    // A root gives a right factor.
    QuatPoly g = f * lin;
    CHECK(peval(g, lambda).is_zero());
    CHECK(right_divide_linear(g, lambda).remainder.is_zero());
  }
}

TEST_CASE("ring laws of H[x]") {
  testing::Rng rng(42);
  for (int n = 0; n < 100; ++n) {
    QuatPoly f = rng.quat_poly(H, rng.uniform(0, 3));
    QuatPoly g = rng.quat_poly(H, rng.uniform(0, 3));
    QuatPoly h = rng.quat_poly(H, rng.uniform(0, 3));
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * (g + h) == f * g + f * h);
    CHECK((f + g) * h == f * h + g * h);
    CHECK(f * g == testing::poly_of(H, testing::oracle_poly_mul(*H, testing::coords_of(f),
                                                                 testing::coords_of(g))));
    CHECK((f * g).degree() == f.degree() + g.degree());
    CHECK(pcompose(f, g) == testing::oracle_compose(f, g));
    if (f.degree() > 0 && g.degree() > 0) {
      CHECK(pcompose(f, g).degree() == f.degree() * g.degree());
    }
  }
}

TEST_CASE("evaluation of a product when g(lambda) commutes with lambda") {
  testing::Rng rng(43);
  for (int n = 0; n < 100; ++n) {
    Quaternion u = rng.pure(H);
    QuatPoly g = rng.subfield_poly(u, rng.uniform(0, 3));
    Quaternion lambda = rng.in_subfield(u);
    QuatPoly f = rng.quat_poly(H, rng.uniform(0, 3));
    REQUIRE(commutes(peval(g, lambda), lambda));
    CHECK(peval(f * g, lambda) == peval(f, lambda) * peval(g, lambda));
  }
}

TEST_CASE("octonion polynomial products are alternative") {
  testing::Rng rng(44);
  for (int n = 0; n < 30; ++n) {
    OctPoly f = rng.oct_poly(O, rng.uniform(0, 2));
    OctPoly g = rng.oct_poly(O, rng.uniform(0, 2));
    CHECK((f * f) * g == f * (f * g));
    CHECK((g * f) * f == g * (f * f));
  }
}

TEST_CASE("octonion composition agrees with the doubled table") {
  OctPoly h = op("l*x^2 + (1 - i*l)*x + l - (i*j)*l");
  CHECK(testing::oct_coords_of(pcompose(h, h)) == testing::oracle_oct_compose(h, h));
  testing::Rng rng(45);
  for (int n = 0; n < 30; ++n) {
    OctPoly f = rng.oct_poly(O, rng.uniform(0, 2));
    OctPoly g = rng.oct_poly(O, rng.uniform(1, 2));
    CHECK(testing::oct_coords_of(pcompose(f, g)) == testing::oracle_oct_compose(f, g));
  }
}
