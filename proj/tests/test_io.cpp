#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace structring;
using io::json;
using testing_helpers::grassmann_q;
using testing_helpers::int_matrix;

TEST(Json, RelationEncoding) {
  EXPECT_EQ(io::to_json(Preorder::upper_triangular(2)).dump(), R"({"n":2,"pairs":[[1,1],[1,2],[2,2]]})");
  const Relation r = io::relation_from_json(json::parse(R"({"n":3,"pairs":[[1,2],[2,3]]})"));
  EXPECT_FALSE(validate(r));
  EXPECT_THROW(io::preorder_from_json(json::parse(R"({"n":3,"pairs":[[1,2],[2,3]]})"), false), Error);
  EXPECT_EQ(io::preorder_from_json(json::parse(R"({"n":3,"pairs":[[1,2],[2,3]]})"), true), closure(r));
  EXPECT_THROW(io::relation_from_json(json::parse(R"({"n":2,"pairs":[[1,3]]})")), Error);
}

TEST(Json, RingDescriptors) {
  const char* texts[] = {
      R"({"kind":"int"})",
      R"({"kind":"mod","modulus":6})",
      R"({"kind":"matrix","size":2,"base":{"kind":"mod","modulus":5}})",
      R"({"kind":"grassmann","generators":2,"base":{"kind":"mod","modulus":5}})",
      R"({"kind":"jacobson","base":{"kind":"rat"}})",
  };
  for (const char* t : texts) EXPECT_EQ(io::to_json(io::ring_from_text(t)), json::parse(t));
  EXPECT_EQ(io::ring_from_text(R"({"kind":"grassmann","generators":2,"base":{"kind":"mod","modulus":5}})"),
            Ring::grassmann(2, BaseField::prime_field(5)));
  EXPECT_THROW(io::ring_from_text("{not json"), Error);
  EXPECT_THROW(io::ring_from_text(R"({"kind":"grassmann","generators":2,"base":{"kind":"mod","modulus":6}})"),
               Error);
}

TEST(Json, ElementEncodings) {
  EXPECT_EQ(io::to_json(Ring::integers().from_int(-12)).dump(), R"("-12")");
  EXPECT_EQ(io::to_json(Ring::modular(7).from_int(-1)).dump(), "6");

  const Ring m2 = Ring::matrix(2, Ring::modular(5));
  const Ring b = m2.base();
  const Element el = m2.matrix_element({b.from_int(1), b.from_int(2), b.from_int(3), b.from_int(4)});
  EXPECT_EQ(io::to_json(el).dump(), "[[1,2],[3,4]]");

  const Ring g = grassmann_q(3);
  const Element ge = g.from_int(2) + g.generator(3) * g.generator(1) + g.grassmann_element({{0b010u, BigRational(1, 2)}});
  EXPECT_EQ(io::to_json(ge).dump(), R"([["2",[]],["1/2",[2]],["-1",[1,3]]])");

  const Ring g5 = Ring::grassmann(2, BaseField::prime_field(5));
  EXPECT_EQ(io::to_json(g5.from_int(-1) * g5.generator(2)).dump(), "[[4,[2]]]");

  const Ring j = Ring::jacobson(BaseField::rationals());
  EXPECT_EQ(io::to_json(j.one() - j.jacobson_y() * j.jacobson_x()).dump(), R"([["1",0,0],["-1",1,1]])");
}

TEST(Json, ElementParsingNormalizes) {
  const Ring g = grassmann_q(2);
  const Element parsed = io::element_from_json(g, json::parse(R"([["3",[2,1]],["1/2",[]]])"));
  EXPECT_EQ(parsed, g.grassmann_element({{0u, BigRational(1, 2)}, {0b11u, BigRational(-3)}}));

  const Ring j = Ring::jacobson(BaseField::rationals());
  EXPECT_TRUE(io::element_from_json(j, json::parse(R"([["1",1,1],["-1",1,1]])")).is_zero());
  EXPECT_EQ(io::element_from_json(Ring::integers(), json::parse(R"("123456789012345678901234567890")")).value(),
            BigInt("123456789012345678901234567890"));
}

TEST(Json, MatrixRoundTrip) {
  StructMatrix a = int_matrix(Ring::modular(5), {{2, 1}, {0, 3}});
  a.set_pattern(Preorder::upper_triangular(2));
  const json doc = io::to_json(a);
  EXPECT_EQ(doc.dump(),
            R"({"entries":[[2,1],[0,3]],"n":2,"ring":{"kind":"mod","modulus":5},"theta":{"n":2,"pairs":[[1,1],[1,2],[2,2]]}})");
  const StructMatrix back = io::matrix_from_json(doc);
  EXPECT_EQ(back, a);
  EXPECT_EQ(back.pattern(), a.pattern());
}

TEST(Json, RandomElementsRoundTrip) {
  const char* texts[] = {
      R"({"kind":"int"})",
      R"({"kind":"mod","modulus":101})",
      R"({"kind":"matrix","size":2,"base":{"kind":"mod","modulus":4}})",
      R"({"kind":"grassmann","generators":4,"base":{"kind":"rat"}})",
      R"({"kind":"grassmann","generators":3,"base":{"kind":"mod","modulus":7}})",
      R"({"kind":"jacobson","base":{"kind":"rat"}})",
  };
  for (const char* t : texts) {
    const Ring r = io::ring_from_text(t);
    harness::Rng rng(99);
    for (int i = 0; i < 50; ++i) {
      const Element e = harness::random_element(r, rng);
      const json enc = io::to_json(e);
      EXPECT_EQ(io::element_from_json(r, enc), e) << t;
      EXPECT_EQ(io::to_json(io::element_from_json(r, enc)), enc) << t;
    }
  }
}

TEST(Json, Polynomial) {
  const Ring z = Ring::integers();
  const MonicPolynomial chi = char_poly(int_matrix(z, {{1, 2}, {3, 4}}));
  const json doc = io::to_json(chi);
  EXPECT_EQ(doc.dump(), R"({"coeffs":["-2","-5","1"],"degree":2,"leading":"1","ring":{"kind":"int"}})");
  EXPECT_EQ(io::polynomial_from_json(doc), chi);
  EXPECT_THROW(io::polynomial_from_json(json::parse(R"({"ring":{"kind":"int"},"coeffs":["-2","-5","3"]})")), Error);
}

TEST(Json, Certificate) {
  const auto cert = inv_adjugate(int_matrix(Ring::modular(5), {{2, 1}, {0, 3}}), Preorder::upper_triangular(2));
  EXPECT_EQ(io::to_json(cert).dump(),
            R"({"inverse":{"entries":[[3,4],[0,2]],"n":2,"ring":{"kind":"mod","modulus":5}},"method":"adjugate","structural":true,"verified":true})");
}
