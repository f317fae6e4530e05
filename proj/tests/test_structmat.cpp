#include <gtest/gtest.h>

#include "helpers.hpp"
#include "oracles.hpp"

using namespace structring;
using testing_helpers::grassmann_q;
using testing_helpers::int_matrix;

namespace {

struct JacobsonExample {
  Ring r = Ring::jacobson(BaseField::rationals());
  Element x = r.jacobson_x(), y = r.jacobson_y(), e = r.one() - y * x;
  StructMatrix a = StructMatrix::from_rows(r, {{y, e}, {r.zero(), x}});
  StructMatrix a_inv = StructMatrix::from_rows(r, {{x, r.zero()}, {e, y}});
};

}  // namespace

TEST(CheckStructural, Basics) {
  const Ring z = Ring::integers();
  EXPECT_TRUE(check_structural(StructMatrix::identity(z, 3), Preorder::diagonal(3)));
  EXPECT_TRUE(check_structural(int_matrix(z, {{1, 2}, {0, 3}}), Preorder::upper_triangular(2)));
  EXPECT_FALSE(check_structural(int_matrix(z, {{1, 2}, {1, 3}}), Preorder::upper_triangular(2)));
  EXPECT_THROW(check_structural(StructMatrix::identity(z, 3), Preorder::full(2)), Error);
}

TEST(CheckStructural, JacobsonExample) {
  const JacobsonExample ex;
  EXPECT_TRUE(check_structural(ex.a, Preorder::upper_triangular(2)));
  EXPECT_FALSE(check_structural(ex.a_inv, Preorder::upper_triangular(2)));
}

TEST(Matmul, Examples) {
  const Ring z5 = Ring::modular(5);
  const StructMatrix a = int_matrix(z5, {{2, 1}, {0, 3}});
  EXPECT_EQ(a * StructMatrix::identity(z5, 2), a);
  EXPECT_EQ(a * int_matrix(z5, {{3, 4}, {0, 2}}), StructMatrix::identity(z5, 2));

  const JacobsonExample ex;
  EXPECT_EQ(ex.a * ex.a_inv, StructMatrix::identity(ex.r, 2));
  EXPECT_EQ(ex.a_inv * ex.a, StructMatrix::identity(ex.r, 2));
}

TEST(Matmul, RejectsMismatchedOperands) {
  EXPECT_THROW(StructMatrix::identity(Ring::integers(), 2) * StructMatrix::identity(Ring::integers(), 3), Error);
  EXPECT_THROW(StructMatrix::identity(Ring::integers(), 2) * StructMatrix::identity(Ring::modular(3), 2), Error);
}

TEST(ScalarEmbed, Examples) {
  const Ring g = grassmann_q(2);
  EXPECT_EQ(scalar_embed(g.one(), 3), StructMatrix::identity(g, 3));
  EXPECT_TRUE(scalar_embed(g.zero(), 2).is_zero());
  const Element e1 = g.generator(1);
  EXPECT_EQ(scalar_embed(e1, 2), StructMatrix::from_rows(g, {{e1, g.zero()}, {g.zero(), e1}}));
}

TEST(Determinant, Examples) {
  EXPECT_EQ(determinant(StructMatrix::identity(Ring::integers(), 3)), Ring::integers().one());
  EXPECT_EQ(determinant(int_matrix(Ring::integers(), {{1, 2}, {3, 4}})), Ring::integers().from_int(-2));
  EXPECT_EQ(determinant(int_matrix(Ring::modular(5), {{2, 1}, {0, 3}})), Ring::modular(5).one());
}

TEST(Determinant, RefusesNoncommutativeRings) {
  try {
    (void)determinant(StructMatrix::identity(grassmann_q(2), 2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::noncommutative_ring);
  }
}

TEST(Adjoint, Examples) {
  const Ring z = Ring::integers();
  EXPECT_EQ(adjoint_classical(StructMatrix::identity(z, 3)), StructMatrix::identity(z, 3));
  EXPECT_EQ(adjoint_classical(int_matrix(z, {{1, 2}, {3, 4}})), int_matrix(z, {{4, -2}, {-3, 1}}));
  EXPECT_EQ(adjoint_classical(int_matrix(z, {{2, 1}, {0, 3}})), int_matrix(z, {{3, -1}, {0, 2}}));
}

TEST(Preadjoint, Examples) {
  const Ring z = Ring::integers();
  EXPECT_EQ(preadjoint(int_matrix(z, {{7}})), int_matrix(z, {{1}}));
  EXPECT_EQ(preadjoint(int_matrix(z, {{1, 2}, {3, 4}})), int_matrix(z, {{4, -2}, {-3, 1}}));

  const JacobsonExample ex;
  const StructMatrix expected = StructMatrix::from_rows(ex.r, {{ex.x, -ex.e}, {ex.r.zero(), ex.y}});
  EXPECT_EQ(preadjoint(ex.a), expected);
}

TEST(Preadjoint, SizeLimit) {
  const StructMatrix a = StructMatrix::identity(Ring::integers(), 6);
  try {
    (void)preadjoint(a);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::size_limit);
  }
}

TEST(CharPoly, Examples) {
  const Ring z = Ring::integers();
  auto coeffs = [&](const MonicPolynomial& p) {
    std::vector<long> out;
    for (std::size_t i = 0; i <= p.degree(); ++i) out.push_back(p.coefficient(i).value().convert_to<long>());
    return out;
  };
  EXPECT_EQ(coeffs(char_poly(StructMatrix::identity(z, 2))), (std::vector<long>{1, -2, 1}));
  EXPECT_EQ(coeffs(char_poly(int_matrix(z, {{1, 2}, {3, 4}}))), (std::vector<long>{-2, -5, 1}));
  EXPECT_EQ(coeffs(char_poly(int_matrix(z, {{2, 0}, {0, 3}}))), (std::vector<long>{6, -5, 1}));
}

TEST(Flatten, Examples) {
  const Ring base = Ring::modular(5);
  const Ring m2 = Ring::matrix(2, base);
  EXPECT_EQ(flatten_blocks(StructMatrix::identity(m2, 2)), StructMatrix::identity(base, 4));
  const Element block = m2.matrix_element({base.from_int(1), base.from_int(2), base.from_int(3), base.from_int(4)});
  const StructMatrix single = StructMatrix::from_rows(m2, {{block}});
  EXPECT_EQ(flatten_blocks(single), int_matrix(base, {{1, 2}, {3, 4}}));
  EXPECT_EQ(unflatten_blocks(int_matrix(base, {{1, 2}, {3, 4}}), m2), single);
}

// Random cross-checks against the oracles.

class CommutativeOracles : public ::testing::TestWithParam<std::string> {};

TEST_P(CommutativeOracles, DeterminantAdjointCharPoly) {
  const Ring r = io::ring_from_text(GetParam());
  const BigInt m = r.kind() == RingKind::modular ? r.modulus() : BigInt(0);
  for (std::uint64_t trial = 0; trial < 40; ++trial) {
    harness::Rng rng(harness::derive_seed(5, trial));
    const std::size_t n = 1 + trial % 4;
    const Preorder theta = harness::gen_preorder(n, 0.5, rng);
    const StructMatrix a = harness::gen_structural_matrix(theta, r, rng, false);
    EXPECT_EQ(determinant(a), oracle::laplace_det(r, oracle::rows_of(a)));
    const StructMatrix adj = adjoint_classical(a);
    EXPECT_EQ(adj, oracle::cofactor_adjugate(a));
    EXPECT_TRUE(check_structural(adj, theta));
    EXPECT_EQ(preadjoint(a), oracle::preadjoint_by_lists(a));

    const MonicPolynomial chi = char_poly(a);
    const oracle::Poly want = oracle::char_poly_laplace(a, m);
    ASSERT_EQ(chi.degree(), n);
    for (std::size_t i = 0; i <= n; ++i) EXPECT_EQ(chi.coefficient(i), r.from_int(want[i])) << "coefficient " << i;
    EXPECT_TRUE(evaluate(chi, a).is_zero());
  }
}

INSTANTIATE_TEST_SUITE_P(Rings, CommutativeOracles,
                         ::testing::Values(R"({"kind":"int"})", R"({"kind":"mod","modulus":6})",
                                           R"({"kind":"mod","modulus":7})"));

class NoncommutativePreadjoint : public ::testing::TestWithParam<std::string> {};

TEST_P(NoncommutativePreadjoint, MatchesListOracleAndStaysStructural) {
  const Ring r = io::ring_from_text(GetParam());
  for (std::uint64_t trial = 0; trial < 12; ++trial) {
    harness::Rng rng(harness::derive_seed(9, trial));
    const std::size_t n = 2 + trial % 2;
    const Preorder theta = harness::gen_preorder(n, 0.5, rng);
    const StructMatrix a = harness::gen_structural_matrix(theta, r, rng, false);
    const StructMatrix star = preadjoint(a);
    EXPECT_EQ(star, oracle::preadjoint_by_lists(a));
    EXPECT_TRUE(check_structural(star, theta));
  }
}

INSTANTIATE_TEST_SUITE_P(Rings, NoncommutativePreadjoint,
                         ::testing::Values(R"({"kind":"grassmann","generators":3,"base":{"kind":"rat"}})",
                                           R"({"kind":"matrix","size":2,"base":{"kind":"mod","modulus":4}})",
                                           R"({"kind":"jacobson","base":{"kind":"rat"}})"));

TEST(Flatten, HomomorphismOnRandomBlocks) {
  const Ring m2 = Ring::matrix(2, Ring::modular(3));
  for (std::uint64_t trial = 0; trial < 20; ++trial) {
    harness::Rng rng(harness::derive_seed(3, trial));
    const StructMatrix x = harness::gen_structural_matrix(Preorder::full(2), m2, rng, false);
    const StructMatrix y = harness::gen_structural_matrix(Preorder::full(2), m2, rng, false);
    EXPECT_EQ(flatten_blocks(x * y), flatten_blocks(x) * flatten_blocks(y));
    EXPECT_EQ(unflatten_blocks(flatten_blocks(x), m2), x);
  }
}
