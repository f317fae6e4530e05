#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "structring/bigint.hpp"
#include "structring/error.hpp"
#include "structring/preorder.hpp"
#include "structring/rings.hpp"

namespace structring {

/// Largest size accepted by the Leibniz-sum routines (determinant, adjoint,
/// characteristic polynomial). Their cost grows like n * n!.
inline constexpr std::size_t kMaxLeibnizSize = 8;
/// Default cap for the preadjoint, whose entries are (n-1)!^2-term sums.
inline constexpr std::size_t kDefaultPreadjointLimit = 5;

/// Dense n x n matrix over a ring. The optional pattern records which
/// preorder the matrix is claimed to respect; it is never enforced
/// implicitly, only by explicit check_structural calls.
class StructMatrix {
 public:
  StructMatrix(Ring ring, std::size_t n) : ring_(std::move(ring)), n_(n), entries_(n * n, ring_.zero()) {
    if (n == 0) throw Error(ErrorCode::invalid_argument, "matrix size must be positive");
  }

  StructMatrix(Ring ring, std::size_t n, std::vector<Element> entries)
      : ring_(std::move(ring)), n_(n), entries_(std::move(entries)) {
    if (n == 0) throw Error(ErrorCode::invalid_argument, "matrix size must be positive");
    if (entries_.size() != n * n) throw Error(ErrorCode::size_mismatch, "expected n*n entries");
    for (const auto& e : entries_)
      if (!(e.ring() == ring_)) throw Error(ErrorCode::descriptor_mismatch, "entry not in " + ring_.name());
  }

  static StructMatrix identity(const Ring& ring, std::size_t n) {
    StructMatrix m(ring, n);
    for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = ring.one();
    return m;
  }

  static StructMatrix from_rows(const Ring& ring, const std::vector<std::vector<Element>>& rows) {
    const std::size_t n = rows.size();
    std::vector<Element> flat;
    flat.reserve(n * n);
    for (const auto& row : rows) {
      if (row.size() != n) throw Error(ErrorCode::size_mismatch, "matrix rows must have length n");
      flat.insert(flat.end(), row.begin(), row.end());
    }
    return StructMatrix(ring, n, std::move(flat));
  }

  const Ring& ring() const noexcept { return ring_; }
  std::size_t size() const noexcept { return n_; }
  const std::vector<Element>& entries() const noexcept { return entries_; }

  const Element& operator()(std::size_t i, std::size_t j) const { return entries_.at(i * n_ + j); }

  void set(std::size_t i, std::size_t j, Element value) {
    if (!(value.ring() == ring_)) throw Error(ErrorCode::descriptor_mismatch, "entry not in " + ring_.name());
    entries_.at(i * n_ + j) = std::move(value);
  }

  const std::optional<Preorder>& pattern() const noexcept { return pattern_; }
  void set_pattern(std::optional<Preorder> theta) {
    if (theta && theta->size() != n_) throw Error(ErrorCode::size_mismatch, "pattern size differs from matrix size");
    pattern_ = std::move(theta);
  }

  bool is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Element& e) { return e.is_zero(); });
  }

  /// Equality of rings and entries; the advisory pattern is ignored.
  friend bool operator==(const StructMatrix& a, const StructMatrix& b) {
    return a.ring_ == b.ring_ && a.n_ == b.n_ && a.entries_ == b.entries_;
  }

 private:
  Ring ring_;
  std::size_t n_;
  std::vector<Element> entries_;
  std::optional<Preorder> pattern_;
};

namespace detail {

inline void require_compatible(const StructMatrix& a, const StructMatrix& b) {
  if (!(a.ring() == b.ring())) throw Error(ErrorCode::descriptor_mismatch, a.ring().name() + " vs " + b.ring().name());
  if (a.size() != b.size()) throw Error(ErrorCode::size_mismatch, "matrix sizes differ");
}

inline void require_commutative(const Ring& ring, const char* what) {
  if (!ring.commutative()) {
    throw Error(ErrorCode::noncommutative_ring, std::string(what) + " needs a commutative ring, got " + ring.name());
  }
}

inline void require_leibniz_size(std::size_t n, std::size_t limit, const char* what) {
  if (n > limit) {
    throw Error(ErrorCode::size_limit,
                std::string(what) + " is limited to n <= " + std::to_string(limit) + ", got " + std::to_string(n));
  }
}

/// Sign of a permutation of {0..n-1} by inversion count.
inline int permutation_sign(const std::vector<std::size_t>& perm) {
  unsigned inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

inline Element signed_add(const Element& acc, int sign, const Element& term) {
  return sign > 0 ? acc + term : acc - term;
}

/// Leibniz determinant with factors in row order. Meaningful as a
/// determinant only when the entries commute pairwise.
inline Element leibniz_determinant(const Ring& ring, std::size_t n, const std::vector<Element>& a) {
  std::vector<std::size_t> rho(n);
  std::iota(rho.begin(), rho.end(), std::size_t{0});
  Element det = ring.zero();
  do {
    Element term = ring.one();
    for (std::size_t i = 0; i < n; ++i) term *= a[i * n + rho[i]];
    det = signed_add(det, permutation_sign(rho), term);
  } while (std::next_permutation(rho.begin(), rho.end()));
  return det;
}

/// adj(A)[r][s] = sum over rho with rho(s) = r of sgn(rho) times the product
/// of a[i][rho(i)] over rows i != s, in row order. Each permutation
/// contributes to one entry per choice of s.
inline StructMatrix leibniz_adjoint(const StructMatrix& a) {
  const std::size_t n = a.size();
  const Ring& ring = a.ring();
  std::vector<Element> adj(n * n, ring.zero());
  std::vector<std::size_t> rho(n);
  std::iota(rho.begin(), rho.end(), std::size_t{0});
  do {
    const int sign = permutation_sign(rho);
    for (std::size_t s = 0; s < n; ++s) {
      Element term = ring.one();
      for (std::size_t i = 0; i < n; ++i)
        if (i != s) term *= a(i, rho[i]);
      Element& slot = adj[rho[s] * n + s];
      slot = signed_add(slot, sign, term);
    }
  } while (std::next_permutation(rho.begin(), rho.end()));
  return StructMatrix(ring, n, std::move(adj));
}

}  // namespace detail

/// True iff every entry outside theta is zero.
inline bool check_structural(const StructMatrix& a, const Preorder& theta) {
  if (theta.size() != a.size()) {
    throw Error(ErrorCode::size_mismatch, "preorder on " + std::to_string(theta.size()) + " points vs " +
                                              std::to_string(a.size()) + "x" + std::to_string(a.size()) + " matrix");
  }
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (!theta.contains(i, j) && !a(i, j).is_zero()) return false;
  return true;
}

inline StructMatrix operator+(const StructMatrix& a, const StructMatrix& b) {
  detail::require_compatible(a, b);
  std::vector<Element> out;
  out.reserve(a.entries().size());
  for (std::size_t i = 0; i < a.entries().size(); ++i) out.push_back(a.entries()[i] + b.entries()[i]);
  return StructMatrix(a.ring(), a.size(), std::move(out));
}

inline StructMatrix operator-(const StructMatrix& a, const StructMatrix& b) {
  detail::require_compatible(a, b);
  std::vector<Element> out;
  out.reserve(a.entries().size());
  for (std::size_t i = 0; i < a.entries().size(); ++i) out.push_back(a.entries()[i] - b.entries()[i]);
  return StructMatrix(a.ring(), a.size(), std::move(out));
}

inline StructMatrix operator-(const StructMatrix& a) {
  std::vector<Element> out;
  out.reserve(a.entries().size());
  for (const auto& e : a.entries()) out.push_back(-e);
  return StructMatrix(a.ring(), a.size(), std::move(out));
}

/// Exact product. The result carries no pattern.
inline StructMatrix matmul(const StructMatrix& a, const StructMatrix& b) {
  detail::require_compatible(a, b);
  const std::size_t n = a.size();
  std::vector<Element> out;
  out.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Element acc = a(i, 0) * b(0, j);
      for (std::size_t k = 1; k < n; ++k) acc += a(i, k) * b(k, j);
      out.push_back(std::move(acc));
    }
  return StructMatrix(a.ring(), n, std::move(out));
}

inline StructMatrix operator*(const StructMatrix& a, const StructMatrix& b) { return matmul(a, b); }

/// r * I.
inline StructMatrix scalar_embed(const Element& r, std::size_t n) {
  StructMatrix m(r.ring(), n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, r);
  return m;
}

/// (c I) * A, i.e. every entry multiplied by c on the left.
inline StructMatrix left_scale(const Element& c, const StructMatrix& a) {
  std::vector<Element> out;
  out.reserve(a.entries().size());
  for (const auto& e : a.entries()) out.push_back(c * e);
  return StructMatrix(a.ring(), a.size(), std::move(out));
}

inline StructMatrix pow(const StructMatrix& a, unsigned k) {
  StructMatrix result = StructMatrix::identity(a.ring(), a.size());
  for (unsigned i = 0; i < k; ++i) result = result * a;
  return result;
}

inline Element determinant(const StructMatrix& a) {
  detail::require_commutative(a.ring(), "determinant");
  detail::require_leibniz_size(a.size(), kMaxLeibnizSize, "determinant");
  return detail::leibniz_determinant(a.ring(), a.size(), a.entries());
}

/// Classical adjugate, so that A adj(A) = adj(A) A = det(A) I.
inline StructMatrix adjoint_classical(const StructMatrix& a) {
  detail::require_commutative(a.ring(), "classical adjoint");
  detail::require_leibniz_size(a.size(), kMaxLeibnizSize, "classical adjoint");
  return detail::leibniz_adjoint(a);
}

/// Preadjoint over an arbitrary ring:
///
///   a*[r][s] = sum over tau, rho of sgn(rho) * prod_p a[tau(p)][rho(tau(p))]
///
/// where tau permutes {0..n-1} \ {s}, rho ranges over permutations of
/// {0..n-1} with rho(s) = r, and p runs over the positions {0..n-1} \ {s} in
/// increasing order; the factors are multiplied left to right in that order.
/// Over a commutative ring this equals (n-1)! adj(A). Permutations are
/// streamed with next_permutation; sizes above `max_n` are rejected.
inline StructMatrix preadjoint(const StructMatrix& a, std::size_t max_n = kDefaultPreadjointLimit) {
  const std::size_t n = a.size();
  detail::require_leibniz_size(n, max_n, "preadjoint");
  const Ring& ring = a.ring();
  std::vector<Element> out(n * n, ring.zero());
  std::vector<std::size_t> rho(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = 0; s < n; ++s) {
      std::vector<std::size_t> domain, targets;
      for (std::size_t i = 0; i < n; ++i) {
        if (i != s) domain.push_back(i);
        if (i != r) targets.push_back(i);
      }
      Element sum = ring.zero();
      // rho restricted to domain is a bijection onto targets.
      std::vector<std::size_t> image = targets;
      do {
        rho[s] = r;
        for (std::size_t q = 0; q < domain.size(); ++q) rho[domain[q]] = image[q];
        const int sign = detail::permutation_sign(rho);
        std::vector<std::size_t> tau = domain;
        do {
          Element term = ring.one();
          for (std::size_t row : tau) {
            term *= a(row, rho[row]);
            if (term.is_zero()) break;
          }
          if (!term.is_zero()) sum = detail::signed_add(sum, sign, term);
        } while (std::next_permutation(tau.begin(), tau.end()));
      } while (std::next_permutation(image.begin(), image.end()));
      out[r * n + s] = std::move(sum);
    }
  return StructMatrix(ring, n, std::move(out));
}

// ---------------------------------------------------------------------------
// Polynomials

/// c_0 + c_1 t + ... + c_d t^d with c_d = leading * 1 for a nonzero integer
/// `leading` (1 for a monic polynomial).
class MonicPolynomial {
 public:
  /// `lower` holds c_0 .. c_{d-1}.
  MonicPolynomial(Ring ring, std::vector<Element> lower, BigInt leading = 1)
      : ring_(std::move(ring)), lower_(std::move(lower)), leading_(std::move(leading)) {
    if (lower_.empty()) throw Error(ErrorCode::invalid_argument, "polynomial degree must be at least 1");
    if (ring_.from_int(leading_).is_zero()) {
      throw Error(ErrorCode::invalid_argument, "leading coefficient vanishes in " + ring_.name());
    }
    for (const auto& c : lower_)
      if (!(c.ring() == ring_)) throw Error(ErrorCode::descriptor_mismatch, "coefficient not in " + ring_.name());
  }

  const Ring& ring() const noexcept { return ring_; }
  std::size_t degree() const noexcept { return lower_.size(); }
  const BigInt& leading() const noexcept { return leading_; }

  Element coefficient(std::size_t i) const {
    if (i < lower_.size()) return lower_[i];
    if (i == lower_.size()) return ring_.from_int(leading_);
    return ring_.zero();
  }

  friend bool operator==(const MonicPolynomial& a, const MonicPolynomial& b) {
    return a.ring_ == b.ring_ && a.lower_ == b.lower_ && a.leading_ == b.leading_;
  }

 private:
  Ring ring_;
  std::vector<Element> lower_;
  BigInt leading_;
};

inline std::ostream& operator<<(std::ostream& os, const MonicPolynomial& p) {
  for (std::size_t i = p.degree() + 1; i-- > 0;) {
    os << "(" << describe(p.coefficient(i)) << ")";
    if (i) os << "*t^" << i << " + ";
  }
  return os;
}

// Uniform access to the two algebra types a polynomial can be evaluated at.
inline Element identity_like(const Element& x) { return x.ring().one(); }
inline StructMatrix identity_like(const StructMatrix& x) { return StructMatrix::identity(x.ring(), x.size()); }
inline Element left_scale(const Element& c, const Element& x) { return c * x; }
inline const Ring& ring_of(const Element& x) { return x.ring(); }
inline const Ring& ring_of(const StructMatrix& x) { return x.ring(); }

/// p(x) = sum c_i x^i with coefficients acting from the left (Horner).
template <class T>
T evaluate(const MonicPolynomial& p, const T& x) {
  if (!(p.ring() == ring_of(x))) throw Error(ErrorCode::descriptor_mismatch, "polynomial and argument rings differ");
  const T one = identity_like(x);
  T acc = left_scale(p.coefficient(p.degree()), one);
  for (std::size_t i = p.degree(); i-- > 0;) acc = acc * x + left_scale(p.coefficient(i), one);
  return acc;
}

/// Characteristic polynomial det(tI - A), computed without division: the
/// coefficient of t^i is (-1)^(n-i) times the sum of the (n-i) x (n-i)
/// principal minors.
inline MonicPolynomial char_poly(const StructMatrix& a) {
  detail::require_commutative(a.ring(), "characteristic polynomial");
  const std::size_t n = a.size();
  detail::require_leibniz_size(n, kMaxLeibnizSize, "characteristic polynomial");
  const Ring& ring = a.ring();
  std::vector<Element> minor_sums(n + 1, ring.zero());
  minor_sums[0] = ring.one();
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    const std::size_t k = idx.size();
    std::vector<Element> sub;
    sub.reserve(k * k);
    for (std::size_t i : idx)
      for (std::size_t j : idx) sub.push_back(a(i, j));
    minor_sums[k] += detail::leibniz_determinant(ring, k, sub);
  }
  std::vector<Element> lower;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t k = n - i;
    lower.push_back(k % 2 == 0 ? minor_sums[k] : -minor_sums[k]);
  }
  return MonicPolynomial(ring, std::move(lower));
}

// ---------------------------------------------------------------------------
// Block flattening: M_n(M_m(R)) -> M_nm(R)

/// Block (i, j)'s entry (p, q) lands at (m i + p, m j + q).
inline StructMatrix flatten_blocks(const StructMatrix& b) {
  if (b.ring().kind() != RingKind::matrix) {
    throw Error(ErrorCode::descriptor_mismatch, "flatten_blocks needs a matrix-ring descriptor, got " + b.ring().name());
  }
  const std::size_t n = b.size(), m = b.ring().matrix_size(), nm = n * m;
  const Ring base = b.ring().base();
  std::vector<Element> out(nm * nm, base.zero());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto& block = b(i, j).matrix_entries();
      for (std::size_t p = 0; p < m; ++p)
        for (std::size_t q = 0; q < m; ++q) out[(m * i + p) * nm + (m * j + q)] = block[p * m + q];
    }
  return StructMatrix(base, nm, std::move(out));
}

/// Inverse of flatten_blocks for the matrix ring `block_ring`.
inline StructMatrix unflatten_blocks(const StructMatrix& f, const Ring& block_ring) {
  if (block_ring.kind() != RingKind::matrix || !(block_ring.base() == f.ring())) {
    throw Error(ErrorCode::descriptor_mismatch, "block ring must be a matrix ring over " + f.ring().name());
  }
  const std::size_t m = block_ring.matrix_size();
  if (f.size() % m != 0) throw Error(ErrorCode::size_mismatch, "size not divisible by block size");
  const std::size_t n = f.size() / m;
  std::vector<Element> blocks;
  blocks.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Element> block;
      block.reserve(m * m);
      for (std::size_t p = 0; p < m; ++p)
        for (std::size_t q = 0; q < m; ++q) block.push_back(f(m * i + p, m * j + q));
      blocks.push_back(block_ring.matrix_element(std::move(block)));
    }
  return StructMatrix(block_ring, n, std::move(blocks));
}

/// Membership in M_n(outer, M_m(inner, R)): blocks outside `outer` vanish
/// and every block lies in M_m(inner, R).
inline bool check_block_structural(const StructMatrix& b, const Preorder& outer, const Preorder& inner) {
  if (b.ring().kind() != RingKind::matrix) throw Error(ErrorCode::descriptor_mismatch, "not a block matrix");
  const std::size_t m = b.ring().matrix_size();
  if (inner.size() != m) throw Error(ErrorCode::size_mismatch, "inner preorder size differs from block size");
  if (!check_structural(b, outer)) return false;
  const Ring base = b.ring().base();
  for (const auto& block : b.entries())
    if (!check_structural(StructMatrix(base, m, block.matrix_entries()), inner)) return false;
  return true;
}

inline std::ostream& operator<<(std::ostream& os, const StructMatrix& a) {
  os << "[";
  for (std::size_t i = 0; i < a.size(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < a.size(); ++j) os << (j ? ", " : "") << describe(a(i, j));
    os << "]";
  }
  return os << "]";
}

}  // namespace structring
