#include <gtest/gtest.h>

#include "helpers.hpp"
#include "oracles.hpp"

using namespace structring;
using testing_helpers::grassmann_q;
using testing_helpers::int_matrix;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::invalid_argument;
}

}  // namespace

TEST(InvAdjugate, Examples) {
  const Ring z5 = Ring::modular(5);
  EXPECT_EQ(inv_adjugate(StructMatrix::identity(z5, 3)).inverse, StructMatrix::identity(z5, 3));
  const auto cert = inv_adjugate(int_matrix(z5, {{2, 1}, {0, 3}}), Preorder::upper_triangular(2));
  EXPECT_EQ(cert.inverse, int_matrix(z5, {{3, 4}, {0, 2}}));
  EXPECT_TRUE(cert.verified());
  EXPECT_EQ(cert.structural, std::optional<bool>(true));
  EXPECT_EQ(code_of([] { inv_adjugate(int_matrix(Ring::integers(), {{1, 2}, {3, 4}})); }),
            ErrorCode::not_invertible);
}

TEST(MonicAnnihilator, Elements) {
  const Ring z = Ring::integers();
  EXPECT_EQ(inverse_from_monic_annihilator(z.one(), MonicPolynomial(z, {z.from_int(-1)})).inverse, z.one());

  const Ring z8 = Ring::modular(8);
  const MonicPolynomial p(z8, {z8.from_int(-1), z8.zero()});
  EXPECT_EQ(inverse_from_monic_annihilator(z8.from_int(3), p).inverse, z8.from_int(3));
  EXPECT_EQ(code_of([&] { inverse_from_monic_annihilator(z8.from_int(5), MonicPolynomial(z8, {z8.from_int(2)})); }),
            ErrorCode::not_annihilating);
  EXPECT_EQ(code_of([&] { inverse_from_monic_annihilator(z8.from_int(2), MonicPolynomial(z8, {z8.zero(), z8.from_int(-2)})); }),
            ErrorCode::constant_term_not_unit);
}

TEST(MonicAnnihilator, MatrixWithItsCharacteristicPolynomial) {
  const Ring z5 = Ring::modular(5);
  const StructMatrix a = int_matrix(z5, {{1, 2}, {3, 4}});
  const MonicPolynomial p(z5, {z5.from_int(3), z5.zero()});
  const auto cert = inverse_from_monic_annihilator(a, p);
  EXPECT_EQ(cert.inverse, int_matrix(z5, {{3, 1}, {4, 2}}));
  EXPECT_EQ(cert.method, InverseMethod::monic_annihilator);
  EXPECT_EQ(inv_char_poly(a).inverse, cert.inverse);
}

TEST(InvCharPoly, SingularIsNotInvertible) {
  EXPECT_EQ(code_of([] { inv_char_poly(int_matrix(Ring::modular(6), {{2, 0}, {0, 1}})); }), ErrorCode::not_invertible);
}

TEST(PowerOrder, Examples) {
  const Ring z8 = Ring::modular(8);
  EXPECT_EQ(inv_by_power_order(z8.from_int(3)).inverse, z8.from_int(3));
  EXPECT_EQ(code_of([&] { inv_by_power_order(z8.from_int(2)); }), ErrorCode::not_invertible);
  const Ring m2 = Ring::matrix(2, Ring::modular(3));
  EXPECT_EQ(inv_by_power_order(m2.one()).inverse, m2.one());
  EXPECT_EQ(code_of([] { inv_by_power_order(Ring::integers().from_int(-1)); }), ErrorCode::infinite_ring);
}

TEST(PowerOrder, AgreesWithBruteForceOverSmallMatrices) {
  const Ring z3 = Ring::modular(3);
  for (std::uint64_t trial = 0; trial < 10; ++trial) {
    harness::Rng rng(harness::derive_seed(21, trial));
    const StructMatrix a = harness::gen_structural_matrix(Preorder::full(2), z3, rng, false);
    const auto brute = oracle::brute_inverse(a);
    if (brute) {
      EXPECT_EQ(inv_by_power_order(a).inverse, *brute);
    } else {
      EXPECT_EQ(code_of([&] { inv_by_power_order(a); }), ErrorCode::not_invertible);
    }
  }
}

TEST(NilBinomial, Examples) {
  const Ring z9 = Ring::modular(9);
  EXPECT_EQ(lift_inverse_nil_binomial(z9.from_int(4), std::vector<Element>{z9.one()}, 2).inverse, z9.from_int(7));

  const Ring g = grassmann_q(2);
  const Element e12 = g.generator(1) * g.generator(2);
  EXPECT_EQ(lift_inverse_nil_binomial(g.one() + e12, std::vector<Element>{g.one()}, 2).inverse, g.one() - e12);

  const Ring z7 = Ring::modular(7);
  EXPECT_EQ(lift_inverse_nil_binomial(z7.from_int(3), std::vector<Element>{z7.from_int(5)}, 1).inverse, z7.from_int(5));
}

TEST(NilBinomial, SeveralApproximants) {
  const Ring z27 = Ring::modular(27);
  const Element x = z27.from_int(7);
  // 7 * 4 = 28 = 1 + 27, 7 * 13 = 91 = 1 + 90: both invert 7 modulo 3.
  const auto cert = lift_inverse_nil_binomial(x, std::vector<Element>{z27.from_int(4), z27.from_int(13)}, 3);
  EXPECT_EQ(cert.inverse * x, z27.one());
}

TEST(NilBinomial, RejectsWrongIndex) {
  const Ring z9 = Ring::modular(9);
  EXPECT_EQ(code_of([&] { lift_inverse_nil_binomial(z9.from_int(4), std::vector<Element>{z9.from_int(2)}, 2); }),
            ErrorCode::not_nilpotent);
}

TEST(NilGeometric, Examples) {
  const Ring g = grassmann_q(2);
  const Element e1 = g.generator(1), e2 = g.generator(2), one = g.one(), zero = g.zero();

  const StructMatrix a = StructMatrix::from_rows(g, {{one, e1}, {zero, one}});
  const auto ca = inv_nil_geometric(a, Preorder::upper_triangular(2));
  EXPECT_EQ(ca.inverse, StructMatrix::from_rows(g, {{one, -e1}, {zero, one}}));
  EXPECT_EQ(ca.structural, std::optional<bool>(true));

  const StructMatrix b = StructMatrix::from_rows(g, {{one + e1, zero}, {e2, one}});
  const auto cb = inv_nil_geometric(b, Preorder::lower_triangular(2));
  EXPECT_EQ(cb.inverse, StructMatrix::from_rows(g, {{one - e1, zero}, {e2 * e1 - e2, one}}));
  EXPECT_EQ(cb.structural, std::optional<bool>(true));

  EXPECT_EQ(code_of([&] { inv_nil_geometric(StructMatrix::from_rows(g, {{e1, zero}, {zero, one}})); }),
            ErrorCode::not_invertible);
  EXPECT_EQ(code_of([] { inv_nil_geometric(StructMatrix::identity(Ring::integers(), 2)); }),
            ErrorCode::unsupported_ring);
}

TEST(NilGeometric, AgreesWithAdjugateModPrimeSquares) {
  for (long m : {4L, 9L, 25L, 49L}) {
    const Ring r = Ring::modular(m);
    for (std::uint64_t trial = 0; trial < 10; ++trial) {
      harness::Rng rng(harness::derive_seed(m, trial));
      const Preorder theta = harness::gen_preorder(3, 0.5, rng);
      const StructMatrix a = harness::gen_structural_matrix(theta, r, rng, true);
      EXPECT_EQ(inv_nil_geometric(a, theta).inverse, inv_adjugate(a).inverse);
    }
  }
}

TEST(Invert, Dispatch) {
  const Ring z5 = Ring::modular(5);
  EXPECT_EQ(invert(int_matrix(z5, {{2, 1}, {0, 3}})).inverse, int_matrix(z5, {{3, 4}, {0, 2}}));
  EXPECT_EQ(invert(int_matrix(z5, {{2, 1}, {0, 3}})).method, InverseMethod::adjugate);

  const Ring g = grassmann_q(2);
  EXPECT_EQ(invert(StructMatrix::identity(g, 2)).method, InverseMethod::nil_geometric);

  const Ring m2 = Ring::matrix(2, Ring::modular(2));
  const auto cert = invert(StructMatrix::identity(m2, 2));
  EXPECT_EQ(cert.inverse, StructMatrix::identity(m2, 2));
  EXPECT_EQ(cert.method, InverseMethod::adjugate);

  const Ring j = Ring::jacobson(BaseField::rationals());
  EXPECT_EQ(code_of([&] { invert(StructMatrix::identity(j, 2)); }), ErrorCode::no_method_applicable);
}

TEST(Invert, MatrixRingInverseMatchesBruteForceOnFlattening) {
  const Ring m2 = Ring::matrix(2, Ring::modular(2));
  for (std::uint64_t trial = 0; trial < 8; ++trial) {
    harness::Rng rng(harness::derive_seed(17, trial));
    const Preorder theta = harness::gen_preorder(2, 0.5, rng);
    const StructMatrix a = harness::gen_structural_matrix(theta, m2, rng, true);
    const auto brute = oracle::brute_inverse(flatten_blocks(a));
    ASSERT_TRUE(brute.has_value());
    const auto cert = invert(a, theta);
    EXPECT_EQ(flatten_blocks(cert.inverse), *brute);
    EXPECT_EQ(cert.structural, std::optional<bool>(true));
  }
}

TEST(Certify, RejectsWrongCandidate) {
  const Ring z5 = Ring::modular(5);
  EXPECT_EQ(code_of([&] { certify(InverseMethod::adjugate, z5.from_int(2), z5.from_int(2)); }),
            ErrorCode::verification_failed);
}
