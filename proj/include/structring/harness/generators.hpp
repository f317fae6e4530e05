#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "structring/error.hpp"
#include "structring/harness/random.hpp"
#include "structring/inverse.hpp"
#include "structring/preorder.hpp"
#include "structring/rings.hpp"
#include "structring/structmat.hpp"

namespace structring::harness {

inline constexpr unsigned kDefaultRetryCap = 1000;
inline constexpr double kDefaultDensity = 0.4;

/// Each off-diagonal pair is drawn independently with probability `density`
/// (row-major order), then the relation is closed.
inline Preorder gen_preorder(std::size_t n, double density, Rng& rng) {
  if (!(density >= 0.0 && density <= 1.0)) throw Error(ErrorCode::invalid_argument, "density must lie in [0, 1]");
  Relation rel(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && rng.chance(density)) rel.insert(i, j);
  return closure(rel);
}

inline Preorder gen_preorder(std::size_t n, double density, std::uint64_t seed) {
  Rng rng(seed);
  return gen_preorder(n, density, rng);
}

namespace detail {

inline BigRational small_rational(Rng& rng) {
  std::int64_t num = rng.between(1, 3) * (rng.chance(0.5) ? 1 : -1);
  std::int64_t den = rng.between(1, 2);
  return BigRational(num, den);
}

inline BigRational field_coefficient(const BaseField& f, Rng& rng) {
  if (f.is_rational()) return small_rational(rng);
  return BigRational(1 + rng.below(f.characteristic() - 1));
}

}  // namespace detail

/// Random element with small coefficients. Grassmann elements include each
/// basis monomial with probability 1/2 (at most 8 random monomials when
/// g > 6); Jacobson elements have up to three terms y^i x^j with i, j <= 2.
inline Element random_element(const Ring& ring, Rng& rng) {
  switch (ring.kind()) {
    case RingKind::integers: return ring.integer(rng.between(-4, 4));
    case RingKind::modular: return ring.integer(rng.below(ring.modulus()));
    case RingKind::matrix: {
      std::vector<Element> entries;
      const std::size_t k = ring.matrix_size();
      for (std::size_t i = 0; i < k * k; ++i) entries.push_back(random_element(ring.base(), rng));
      return ring.matrix_element(std::move(entries));
    }
    case RingKind::grassmann: {
      GrassmannTerms terms;
      const unsigned g = ring.generators();
      if (g <= 6) {
        for (std::uint32_t mask = 0; mask < (1u << g); ++mask)
          if (rng.chance(0.5)) terms[mask] = detail::field_coefficient(ring.field(), rng);
      } else {
        const auto count = rng.below(9);
        for (std::uint64_t t = 0; t < count; ++t) {
          auto mask = static_cast<std::uint32_t>(rng.below(std::uint64_t{1} << g));
          terms[mask] = detail::field_coefficient(ring.field(), rng);
        }
      }
      return ring.grassmann_element(terms);
    }
    case RingKind::jacobson: {
      JacobsonTerms terms;
      const auto count = rng.below(4);
      for (std::uint64_t t = 0; t < count; ++t) {
        auto key = std::make_pair(rng.below(3), rng.below(3));
        terms[key] = detail::field_coefficient(ring.field(), rng);
      }
      return ring.jacobson_element(terms);
    }
  }
  throw Error(ErrorCode::invalid_argument, "unknown ring kind");
}

/// Random element of the nilradical (Grassmann: positive degree; Z/p^e:
/// multiples of p).
inline Element random_nil_element(const Ring& ring, Rng& rng) {
  Element a = random_element(ring, rng);
  return nil_decompose(a).soul;
}

/// True when invert() accepts the matrix. NotInvertible is the only expected
/// rejection; other errors propagate.
inline bool invertible_by_dispatcher(const StructMatrix& a) {
  try {
    (void)invert(a);
    return true;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::not_invertible) return false;
    throw;
  }
}

/// Random entries on the positions of theta, exact zeros elsewhere; the
/// result carries theta as its pattern. With `want_invertible` the draw is
/// repeated until invert() succeeds, at most `retry_cap` times.
inline StructMatrix gen_structural_matrix(const Preorder& theta, const Ring& ring, Rng& rng, bool want_invertible,
                                          unsigned retry_cap = kDefaultRetryCap) {
  const std::size_t n = theta.size();
  for (unsigned attempt = 0; attempt < std::max(1u, retry_cap); ++attempt) {
    StructMatrix a(ring, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (theta.contains(i, j)) a.set(i, j, random_element(ring, rng));
    a.set_pattern(theta);
    if (!want_invertible) return a;
    try {
      if (invertible_by_dispatcher(a)) return a;
    } catch (const Error& e) {
      if (e.code() == ErrorCode::no_method_applicable) {
        throw Error(ErrorCode::generation_failed, "cannot decide invertibility over " + ring.name());
      }
      throw;
    }
  }
  throw Error(ErrorCode::generation_failed,
              "no invertible matrix over " + ring.name() + " after " + std::to_string(retry_cap) + " draws");
}

/// Random element of M_n(outer, M_m(inner, R)) for the matrix ring `ring`.
inline StructMatrix gen_block_structural(const Preorder& outer, const Preorder& inner, const Ring& ring, Rng& rng) {
  if (ring.kind() != RingKind::matrix) throw Error(ErrorCode::descriptor_mismatch, "block generation needs a matrix ring");
  const Ring base = ring.base();
  const std::size_t n = outer.size(), m = inner.size();
  StructMatrix b(ring, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!outer.contains(i, j)) continue;
      std::vector<Element> block(m * m, base.zero());
      for (std::size_t p = 0; p < m; ++p)
        for (std::size_t q = 0; q < m; ++q)
          if (inner.contains(p, q)) block[p * m + q] = random_element(base, rng);
      b.set(i, j, ring.matrix_element(std::move(block)));
    }
  return b;
}

}  // namespace structring::harness
