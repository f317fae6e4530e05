#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "structring/bigint.hpp"
#include "structring/error.hpp"
#include "structring/preorder.hpp"
#include "structring/ring_units.hpp"
#include "structring/rings.hpp"
#include "structring/structmat.hpp"

namespace structring {

enum class InverseMethod { adjugate, char_poly, monic_annihilator, power_order, nil_lift_binomial, nil_geometric };

constexpr std::string_view to_string(InverseMethod m) {
  switch (m) {
    case InverseMethod::adjugate: return "adjugate";
    case InverseMethod::char_poly: return "char_poly";
    case InverseMethod::monic_annihilator: return "monic_annihilator";
    case InverseMethod::power_order: return "power_order";
    case InverseMethod::nil_lift_binomial: return "nil_lift_binomial";
    case InverseMethod::nil_geometric: return "nil_geometric";
  }
  return "?";
}

/// An inverse together with the two products that prove it: both are the
/// identity, or the certificate is never constructed.
template <class T>
struct InverseCertificate {
  InverseMethod method;
  T inverse;
  T right_product;  // x * inverse
  T left_product;   // inverse * x
  /// Set when a preorder was supplied and the input respected it.
  std::optional<bool> structural;

  bool verified() const { return right_product == identity_like(right_product) && left_product == right_product; }
};

template <class T>
InverseCertificate<T> certify(InverseMethod method, const T& x, T inverse) {
  T right = x * inverse;
  T left = inverse * x;
  const T one = identity_like(x);
  if (!(right == one) || !(left == one)) {
    throw Error(ErrorCode::verification_failed,
                std::string(to_string(method)) + " produced a candidate that is not a two-sided inverse");
  }
  return InverseCertificate<T>{method, std::move(inverse), std::move(right), std::move(left), std::nullopt};
}

namespace detail {

inline void mark_structural(InverseCertificate<StructMatrix>& cert, const StructMatrix& a,
                            const std::optional<Preorder>& theta) {
  if (theta && check_structural(a, *theta)) cert.structural = check_structural(cert.inverse, *theta);
}

}  // namespace detail

/// A^-1 = det(A)^-1 adj(A) over a commutative ring.
inline InverseCertificate<StructMatrix> inv_adjugate(const StructMatrix& a,
                                                     const std::optional<Preorder>& theta = std::nullopt) {
  detail::require_commutative(a.ring(), "adjugate inversion");
  auto det_inv = try_invert_base(determinant(a));
  if (!det_inv) throw Error(ErrorCode::not_invertible, "determinant is not a unit of " + a.ring().name());
  auto cert = certify(InverseMethod::adjugate, a, left_scale(*det_inv, adjoint_classical(a)));
  detail::mark_structural(cert, a, theta);
  return cert;
}

/// Inverse from a polynomial p with p(x) = 0 and unit constant term c_0.
///
/// Writing gamma_i = c_{d-i} gives the reciprocal polynomial, which
/// annihilates x^-1 and has the unit c_0 as leading coefficient; solving it
/// for x^-1 yields
///
///   x^-1 = -c_0^-1 (c_1 + c_2 x + ... + c_d x^(d-1)).
///
/// Works for ring elements and for matrices (coefficients act as c I).
template <class T>
InverseCertificate<T> inverse_from_monic_annihilator(const T& x, const MonicPolynomial& p,
                                                     InverseMethod label = InverseMethod::monic_annihilator) {
  const T value = evaluate(p, x);
  if (!(value == left_scale(ring_of(x).zero(), identity_like(x)))) {
    throw Error(ErrorCode::not_annihilating, "p(x) is not zero");
  }
  auto c0_inv = try_invert_base(p.coefficient(0));
  if (!c0_inv) throw Error(ErrorCode::constant_term_not_unit, "constant term is not a unit");
  const T one = identity_like(x);
  T acc = left_scale(p.coefficient(p.degree()), one);
  for (std::size_t j = p.degree() - 1; j >= 1; --j) acc = acc * x + left_scale(p.coefficient(j), one);
  return certify(label, x, left_scale(-*c0_inv, acc));
}

/// Adjugate-free inversion through the characteristic polynomial
/// (Cayley-Hamilton); commutative rings only.
inline InverseCertificate<StructMatrix> inv_char_poly(const StructMatrix& a,
                                                      const std::optional<Preorder>& theta = std::nullopt) {
  try {
    auto cert = inverse_from_monic_annihilator(a, char_poly(a), InverseMethod::char_poly);
    detail::mark_structural(cert, a, theta);
    return cert;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::constant_term_not_unit) {
      throw Error(ErrorCode::not_invertible, "determinant is not a unit of " + a.ring().name());
    }
    throw;
  }
}

inline constexpr std::uint64_t kMaxPowerSteps = std::uint64_t{1} << 24;

/// In a finite ring the powers of x are eventually periodic; x is a unit
/// iff 1 occurs among them, and then x^-1 = x^(k-1) for the first k with
/// x^k = 1. Cycles are detected with Brent's method. A cycle closes only
/// after every value on it has been compared against 1.
template <class T>
InverseCertificate<T> inv_by_power_order(const T& x) {
  if (!ring_of(x).finite()) throw Error(ErrorCode::infinite_ring, ring_of(x).name() + " is not finite");
  const T one = identity_like(x);
  T previous = one;
  T current = x;
  T saved = x;
  std::uint64_t since_saved = 0, window = 1;
  for (std::uint64_t step = 0; step < kMaxPowerSteps; ++step) {
    if (current == one) return certify(InverseMethod::power_order, x, std::move(previous));
    previous = current;
    current = current * x;
    ++since_saved;
    if (current == saved) throw Error(ErrorCode::not_invertible, "power sequence cycles without reaching 1");
    if (since_saved == window) {
      saved = current;
      window *= 2;
      since_saved = 0;
    }
  }
  throw Error(ErrorCode::size_limit, "power sequence did not close within the step limit");
}

/// Lift of an inverse through nil ideals. Each s_i inverts x modulo an
/// ideal P_i, and the P_i intersect in a nil ideal. Folding
///   (1 - x s)(1 - x s_i) = 1 - x (s + s_i - s x s_i)
/// gives (1 - x s_1)...(1 - x s_t) = 1 - x s. With (1 - x s)^k = 0:
///   x^-1 = C(k,1) s - C(k,2) s(xs) + ... + (-1)^(k+1) C(k,k) s(xs)^(k-1).
/// Binomial coefficients act as integer multiples, so no division occurs.
template <class T>
InverseCertificate<T> lift_inverse_nil_binomial(const T& x, const std::vector<T>& approximants, unsigned nil_index) {
  if (approximants.empty()) throw Error(ErrorCode::invalid_argument, "at least one approximant is required");
  if (nil_index == 0) throw Error(ErrorCode::invalid_argument, "nil index must be positive");
  const Ring& ring = ring_of(x);
  const T one = identity_like(x);

  T s = approximants.front();
  T product = one - x * s;
  for (std::size_t i = 1; i < approximants.size(); ++i) {
    const T& si = approximants[i];
    product = product * (one - x * si);
    s = s + si - s * x * si;
  }
  const T defect = one - x * s;
  if (!(defect == product)) {
    throw Error(ErrorCode::verification_failed, "folded approximant does not reproduce the product");
  }
  const T zero = left_scale(ring.zero(), one);
  T power = one;
  for (unsigned i = 0; i < nil_index; ++i) power = power * defect;
  if (!(power == zero)) {
    throw Error(ErrorCode::not_nilpotent, "(1 - x s)^" + std::to_string(nil_index) + " is not zero");
  }

  const T xs = x * s;
  T term = s;  // s (xs)^(j-1)
  T sum = zero;
  for (unsigned j = 1; j <= nil_index; ++j) {
    BigInt c = binomial(nil_index, j);
    if (j % 2 == 0) c = -c;
    sum = sum + left_scale(ring.from_int(c), term);
    term = term * xs;
  }
  return certify(InverseMethod::nil_lift_binomial, x, std::move(sum));
}

/// Inversion modulo the nilradical followed by a geometric-series lift.
///
/// The body matrix (entries reduced modulo the nilradical and re-embedded)
/// has pairwise commuting entries, so its adjugate inverse B exists iff A
/// is invertible. Then E = I - A B has entries in the nilradical, E^k = 0
/// for the nil index k, and
///   A^-1 = B (I + E + ... + E^(k-1)).
/// Supported for Grassmann algebras and Z/p^e.
inline InverseCertificate<StructMatrix> inv_nil_geometric(const StructMatrix& a,
                                                          const std::optional<Preorder>& theta = std::nullopt) {
  const Ring& ring = a.ring();
  auto info = nilradical_info(ring);
  if (!info) throw Error(ErrorCode::unsupported_ring, "no nilradical implemented for " + ring.name());
  const std::size_t n = a.size();
  detail::require_leibniz_size(n, kMaxLeibnizSize, "nil-geometric inversion");

  std::vector<Element> body;
  body.reserve(n * n);
  for (const auto& e : a.entries()) body.push_back(nil_decompose(e).body);
  const StructMatrix body_matrix(ring, n, std::move(body));

  auto det_inv = try_invert_base(detail::leibniz_determinant(ring, n, body_matrix.entries()));
  if (!det_inv) throw Error(ErrorCode::not_invertible, "matrix is singular modulo the nilradical");
  const StructMatrix lift = left_scale(*det_inv, detail::leibniz_adjoint(body_matrix));

  const StructMatrix id = StructMatrix::identity(ring, n);
  const StructMatrix defect = id - a * lift;
  StructMatrix series = id;
  StructMatrix power = id;
  for (unsigned i = 1; i < info->nil_index_bound; ++i) {
    power = power * defect;
    series = series + power;
  }
  if (!(power * defect).is_zero()) {
    throw Error(ErrorCode::verification_failed, "defect matrix is not nilpotent of the expected index");
  }
  auto cert = certify(InverseMethod::nil_geometric, a, lift * series);
  detail::mark_structural(cert, a, theta);
  return cert;
}

/// Picks the first applicable method: adjugate for commutative rings,
/// nil-geometric lifting for Grassmann algebras, adjugate on the flattened
/// matrix for matrix rings over a commutative base, power order for any
/// other finite ring. Everything else is NoMethodApplicable; in particular
/// matrices over the Jacobson algebra are never inverted.
inline InverseCertificate<StructMatrix> invert(const StructMatrix& a,
                                               const std::optional<Preorder>& theta = std::nullopt) {
  const Ring& ring = a.ring();
  if (ring.commutative()) return inv_adjugate(a, theta);
  if (nilradical_info(ring)) return inv_nil_geometric(a, theta);
  if (ring.kind() == RingKind::matrix) {
    const auto flat = inv_adjugate(flatten_blocks(a));
    auto cert = certify(InverseMethod::adjugate, a, unflatten_blocks(flat.inverse, ring));
    detail::mark_structural(cert, a, theta);
    return cert;
  }
  if (ring.finite()) {
    auto cert = inv_by_power_order(a);
    detail::mark_structural(cert, a, theta);
    return cert;
  }
  throw Error(ErrorCode::no_method_applicable, "no inversion procedure for matrices over " + ring.name());
}

}  // namespace structring
