#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace structring;
using namespace structring::harness;
using testing_helpers::grassmann_q;

TEST(Rng, DeterministicAndInRange) {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next(), b.next());
  Rng c(7);
  for (int i = 0; i < 1000; ++i) {
    EXPECT_LT(c.below(10), 10u);
    const auto v = c.between(-3, 3);
    EXPECT_GE(v, -3);
    EXPECT_LE(v, 3);
  }
  EXPECT_NE(derive_seed(1, 0), derive_seed(1, 1));
  EXPECT_NE(derive_seed(1, 0), derive_seed(2, 0));
}

TEST(GenPreorder, DensityExtremes) {
  EXPECT_EQ(gen_preorder(5, 0.0, std::uint64_t{3}), Preorder::diagonal(5));
  EXPECT_EQ(gen_preorder(5, 1.0, std::uint64_t{3}), Preorder::full(5));
}

TEST(GenPreorder, Deterministic) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    EXPECT_EQ(gen_preorder(6, 0.3, seed), gen_preorder(6, 0.3, seed));
  }
}

TEST(GenStructuralMatrix, RespectsPattern) {
  const Ring z5 = Ring::modular(5);
  Rng rng(1);
  const StructMatrix d = gen_structural_matrix(Preorder::diagonal(3), z5, rng, false);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (i != j) {
        EXPECT_TRUE(d(i, j).is_zero());
      }

  for (int t = 0; t < 20; ++t) {
    const StructMatrix u = gen_structural_matrix(Preorder::upper_triangular(2), z5, rng, true);
    EXPECT_TRUE(check_structural(u, Preorder::upper_triangular(2)));
    EXPECT_FALSE((u(0, 0) * u(1, 1)).is_zero());
    EXPECT_EQ(u.pattern(), std::optional<Preorder>(Preorder::upper_triangular(2)));
  }
}

TEST(GenStructuralMatrix, GivesUpAfterRetryCap) {
  const Ring z4 = Ring::modular(4);
  Rng rng(1);
  // The dispatcher never inverts over the Jacobson algebra.
  const Ring j = Ring::jacobson(BaseField::rationals());
  try {
    (void)gen_structural_matrix(Preorder::diagonal(2), j, rng, true, 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::generation_failed);
  }
  EXPECT_NO_THROW(gen_structural_matrix(Preorder::diagonal(2), z4, rng, true, 1000));
}

TEST(GenBlockStructural, IsBlockStructural) {
  const Ring m2 = Ring::matrix(2, Ring::modular(3));
  Rng rng(5);
  const Preorder outer = Preorder::upper_triangular(2), inner = Preorder::lower_triangular(2);
  for (int t = 0; t < 10; ++t) {
    const StructMatrix b = gen_block_structural(outer, inner, m2, rng);
    EXPECT_TRUE(check_block_structural(b, outer, inner));
    EXPECT_TRUE(check_structural(flatten_blocks(b), compose_kron(outer, inner)));
  }
}

namespace {

SuiteReport run(SuiteName s, const std::string& ring, std::size_t n, std::uint64_t trials, std::uint64_t seed = 1) {
  Scenario sc{io::ring_from_text(ring)};
  sc.n = n;
  sc.trials = trials;
  sc.seed = seed;
  return run_suite(s, sc);
}

}  // namespace

TEST(Suites, SmallRunsPass) {
  EXPECT_TRUE(run(SuiteName::closure, R"({"kind":"mod","modulus":5})", 3, 100).passed());
  EXPECT_TRUE(run(SuiteName::preadjoint, R"({"kind":"grassmann","generators":3,"base":{"kind":"rat"}})", 3, 30).passed());
  EXPECT_TRUE(run(SuiteName::adjoint, R"({"kind":"mod","modulus":12})", 4, 30).passed());
  EXPECT_TRUE(run(SuiteName::flatten, R"({"kind":"matrix","size":2,"base":{"kind":"mod","modulus":5}})", 2, 20).passed());
  EXPECT_TRUE(run(SuiteName::cayley_hamilton, R"({"kind":"int"})", 3, 30).passed());
  EXPECT_TRUE(run(SuiteName::nil_lift, R"({"kind":"mod","modulus":27})", 3, 30).passed());
  EXPECT_TRUE(run(SuiteName::dedekind, R"({"kind":"mod","modulus":3})", 2, 30).passed());
}

TEST(Suites, SameSeedSameReport) {
  const auto a = run(SuiteName::closure, R"({"kind":"grassmann","generators":2,"base":{"kind":"rat"}})", 3, 10, 77);
  const auto b = run(SuiteName::closure, R"({"kind":"grassmann","generators":2,"base":{"kind":"rat"}})", 3, 10, 77);
  auto strip = [](io::json j) {
    j.erase("wall_time_ms");
    return j;
  };
  EXPECT_EQ(strip(to_json(a)), strip(to_json(b)));
}

TEST(Suites, UnsupportedCombinations) {
  auto code = [](SuiteName s, const std::string& ring, std::size_t n) {
    try {
      (void)run(s, ring, n, 1);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::invalid_argument;
  };
  EXPECT_EQ(code(SuiteName::adjoint, R"({"kind":"jacobson","base":{"kind":"rat"}})", 2),
            ErrorCode::unsupported_combination);
  EXPECT_EQ(code(SuiteName::closure, R"({"kind":"jacobson","base":{"kind":"rat"}})", 2),
            ErrorCode::unsupported_combination);
  EXPECT_EQ(code(SuiteName::flatten, R"({"kind":"mod","modulus":5})", 2), ErrorCode::unsupported_combination);
  EXPECT_EQ(code(SuiteName::preadjoint, R"({"kind":"int"})", 6), ErrorCode::unsupported_combination);
  EXPECT_EQ(code(SuiteName::dedekind, R"({"kind":"mod","modulus":101})", 3), ErrorCode::unsupported_combination);
}

TEST(Suites, ParseNames) {
  EXPECT_EQ(parse_suite_name("cayley_hamilton"), SuiteName::cayley_hamilton);
  EXPECT_THROW(parse_suite_name("bogus"), Error);
}

TEST(Exhaustive, ClosureOverZ2) {
  const SuiteReport r = run_exhaustive_closure(Ring::modular(2), 2);
  EXPECT_TRUE(r.passed());
  EXPECT_GT(r.trials, 0u);
}

TEST(Demo, JacobsonChecksAllPass) {
  const SuiteReport r = demo_jacobson();
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.checks.size(), 11u);
  const io::json inst = demo_jacobson_instance();
  EXPECT_EQ(inst["A"]["entries"][0][1].dump(), R"([["1",0,0],["-1",1,1]])");
}
