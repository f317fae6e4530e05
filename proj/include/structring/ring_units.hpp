#pragma once

#include <optional>

#include "structring/bigint.hpp"
#include "structring/rings.hpp"
#include "structring/structmat.hpp"

namespace structring {

/// Two-sided inverse of `a`, or nullopt when this procedure finds none.
///
/// Integers: only +-1. Modular: extended gcd. Grassmann: a unit iff its
/// degree-0 coefficient is nonzero; the nilpotent remainder is inverted by a
/// finite geometric series. Matrix rings: adjugate over the commutative base.
/// Jacobson: nonzero scalars only; nullopt there does not prove that `a` is
/// a non-unit.
inline std::optional<Element> try_invert_base(const Element& a) {
  const Ring& r = a.ring();
  switch (r.kind()) {
    case RingKind::integers:
      if (a.value() == 1 || a.value() == -1) return a;
      return std::nullopt;
    case RingKind::modular: {
      auto inv = mod_inverse(a.value(), r.modulus());
      if (!inv) return std::nullopt;
      return r.integer(*inv);
    }
    case RingKind::matrix: {
      const std::size_t k = r.matrix_size();
      StructMatrix m(r.base(), k, a.matrix_entries());
      auto det_inv = try_invert_base(determinant(m));
      if (!det_inv) return std::nullopt;
      return r.matrix_element(left_scale(*det_inv, adjoint_classical(m)).entries());
    }
    case RingKind::grassmann: {
      const auto& terms = a.grassmann_terms();
      auto it = terms.find(0u);
      if (it == terms.end()) return std::nullopt;
      auto body_inv = r.field().inverse(it->second);
      if (!body_inv) return std::nullopt;
      // a = b (1 + u) with u = b^-1 * soul nilpotent of index <= g + 1.
      const Element b_inv = r.grassmann_element({{0u, *body_inv}});
      const Element u = b_inv * (a - r.grassmann_element({{0u, it->second}}));
      Element series = r.one();
      Element power = r.one();
      for (unsigned i = 1; i <= r.generators(); ++i) {
        power = power * -u;
        series += power;
      }
      return series * b_inv;
    }
    case RingKind::jacobson: {
      const auto& terms = a.jacobson_terms();
      if (terms.size() != 1 || terms.begin()->first != std::make_pair<std::uint64_t, std::uint64_t>(0, 0)) {
        return std::nullopt;
      }
      auto inv = r.field().inverse(terms.begin()->second);
      if (!inv) return std::nullopt;
      return r.jacobson_element({{{0, 0}, *inv}});
    }
  }
  return std::nullopt;
}

inline bool is_unit(const Element& a) { return try_invert_base(a).has_value(); }

/// Split of an element into a representative of its class modulo the
/// nilradical (body) and a nilradical component (soul).
struct NilDecomposition {
  Element body;
  Element soul;
  unsigned nil_index_bound;  // soul^bound == 0
};

/// Nilradical data of a ring, when this library knows it: for Grassmann
/// algebras the span of positive-degree monomials (index g + 1), for Z/p^e
/// the ideal (p) (index e).
struct NilradicalInfo {
  unsigned nil_index_bound;
  BigInt prime;  // Modular only; 0 otherwise
};

inline std::optional<NilradicalInfo> nilradical_info(const Ring& r) {
  if (r.kind() == RingKind::grassmann) return NilradicalInfo{r.generators() + 1, 0};
  if (r.kind() == RingKind::modular) {
    if (auto pp = prime_power(r.modulus())) return NilradicalInfo{pp->second, pp->first};
  }
  return std::nullopt;
}

/// Throws UnsupportedRing for rings without an implemented nilradical.
inline NilDecomposition nil_decompose(const Element& a) {
  const Ring& r = a.ring();
  auto info = nilradical_info(r);
  if (!info) throw Error(ErrorCode::unsupported_ring, "no nilradical implemented for " + r.name());
  if (r.kind() == RingKind::grassmann) {
    const auto& terms = a.grassmann_terms();
    auto it = terms.find(0u);
    Element body = it == terms.end() ? r.zero() : r.grassmann_element({{0u, it->second}});
    Element soul = a - body;
    return {std::move(body), std::move(soul), info->nil_index_bound};
  }
  Element body = r.integer(a.value() % info->prime);
  Element soul = a - body;
  return {std::move(body), std::move(soul), info->nil_index_bound};
}

}  // namespace structring
