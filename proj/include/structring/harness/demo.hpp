#pragma once

#include <chrono>
#include <string>

#include "structring/harness/suites.hpp"
#include "structring/inverse.hpp"
#include "structring/io.hpp"
#include "structring/preorder.hpp"
#include "structring/rings.hpp"
#include "structring/structmat.hpp"

namespace structring::harness {

/// One-sided inverses in K<x,y>/(xy - 1) produce an invertible upper
/// triangular 2 x 2 matrix whose inverse is lower triangular:
///
///   A = [[y, 1 - yx], [0, x]],   A^-1 = [[x, 0], [1 - yx, y]].
///
/// Every check is recorded; failures mean an implementation defect.
inline SuiteReport demo_jacobson() {
  const auto start = std::chrono::steady_clock::now();
  const Ring r = Ring::jacobson(BaseField::rationals());
  const Element x = r.jacobson_x(), y = r.jacobson_y(), one = r.one(), zero = r.zero();
  const Element e = one - y * x;  // idempotent complement of yx

  const StructMatrix a = StructMatrix::from_rows(r, {{y, e}, {zero, x}});
  const StructMatrix a_inv = StructMatrix::from_rows(r, {{x, zero}, {e, y}});
  const StructMatrix id = StructMatrix::identity(r, 2);
  const Preorder theta = Preorder::upper_triangular(2);
  const StructMatrix star = preadjoint(a);

  bool dispatcher_declines = false;
  try {
    (void)invert(a, theta);
  } catch (const Error& err) {
    dispatcher_declines = err.code() == ErrorCode::no_method_applicable;
  }

  SuiteReport report;
  report.suite = "demo_jacobson";
  report.ring = io::to_json(r);
  report.n = 2;
  report.checks = {
      {"xy = 1", x * y == one},
      {"yx != 1", !(y * x == one)},
      {"(1 - yx)^2 = 1 - yx", e * e == e},
      {"x(1 - yx) = 0", (x * e).is_zero()},
      {"(1 - yx)y = 0", (e * y).is_zero()},
      {"A A^-1 = I", a * a_inv == id},
      {"A^-1 A = I", a_inv * a == id},
      {"A is structural", check_structural(a, theta)},
      {"A^-1 is not structural", !check_structural(a_inv, theta)},
      {"preadjoint(A) is structural", check_structural(star, theta)},
      {"invert(A) reports NoMethodApplicable", dispatcher_declines},
  };
  for (const auto& c : report.checks) {
    ++report.trials;
    if (!c.passed) ++report.failures;
  }
  report.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

/// The matrices of the demonstration, for display.
inline io::json demo_jacobson_instance() {
  const Ring r = Ring::jacobson(BaseField::rationals());
  const Element x = r.jacobson_x(), y = r.jacobson_y(), one = r.one(), zero = r.zero();
  const Element e = one - y * x;
  StructMatrix a = StructMatrix::from_rows(r, {{y, e}, {zero, x}});
  a.set_pattern(Preorder::upper_triangular(2));
  const StructMatrix a_inv = StructMatrix::from_rows(r, {{x, zero}, {e, y}});
  return {{"A", io::to_json(a)}, {"A_inverse", io::to_json(a_inv)}, {"preadjoint_A", io::to_json(preadjoint(a))}};
}

}  // namespace structring::harness
