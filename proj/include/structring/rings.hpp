#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "structring/bigint.hpp"
#include "structring/error.hpp"

namespace structring {

enum class RingKind { integers, modular, matrix, grassmann, jacobson };

/// Coefficient field of the Grassmann and Jacobson algebras: the rationals or
/// a prime field F_p. Elements of F_p are kept as integral rationals in
/// [0, p) so both cases share one coefficient type.
class BaseField {
 public:
  static BaseField rationals() { return BaseField(); }

  static BaseField prime_field(const BigInt& p) {
    if (!is_prime(p)) {
      throw Error(ErrorCode::invalid_argument, "field characteristic " + p.str() + " is not prime");
    }
    BaseField f;
    f.prime_ = p;
    return f;
  }

  bool is_rational() const noexcept { return prime_ == 0; }
  /// 0 for the rationals.
  const BigInt& characteristic() const noexcept { return prime_; }

  BigRational normalize(const BigRational& q) const {
    if (is_rational()) return q;
    BigInt num = mod_floor(boost::multiprecision::numerator(q), prime_);
    BigInt den = mod_floor(boost::multiprecision::denominator(q), prime_);
    auto den_inv = mod_inverse(den, prime_);
    if (!den_inv) throw Error(ErrorCode::invalid_argument, "denominator divisible by the characteristic");
    return BigRational(mod_floor(num * *den_inv, prime_));
  }

  BigRational add(const BigRational& a, const BigRational& b) const { return reduce(a + b); }
  BigRational sub(const BigRational& a, const BigRational& b) const { return reduce(a - b); }
  BigRational mul(const BigRational& a, const BigRational& b) const { return reduce(a * b); }
  BigRational neg(const BigRational& a) const { return reduce(-a); }

  std::optional<BigRational> inverse(const BigRational& a) const {
    if (a == 0) return std::nullopt;
    if (is_rational()) return BigRational(1) / a;
    auto inv = mod_inverse(boost::multiprecision::numerator(a), prime_);
    if (!inv) return std::nullopt;
    return BigRational(*inv);
  }

  std::string name() const { return is_rational() ? "Q" : "F_" + prime_.str(); }

  friend bool operator==(const BaseField&, const BaseField&) = default;

 private:
  // Inputs are already normalized, so in F_p the result is an integer.
  BigRational reduce(const BigRational& q) const {
    if (is_rational()) return q;
    return BigRational(mod_floor(boost::multiprecision::numerator(q), prime_));
  }

  BigInt prime_ = 0;
};

/// Grassmann terms keyed by generator subset: bit i-1 set means e_i occurs.
/// Normal form: no zero coefficients.
using GrassmannTerms = std::map<std::uint32_t, BigRational>;
/// Jacobson terms keyed by (i, j) for the basis monomial y^i x^j.
using JacobsonTerms = std::map<std::pair<std::uint64_t, std::uint64_t>, BigRational>;

inline constexpr unsigned kMaxGrassmannGenerators = 31;

struct RingDescriptor {
  RingKind kind = RingKind::integers;
  BigInt modulus = 0;
  unsigned size = 0;
  unsigned generators = 0;
  std::shared_ptr<const RingDescriptor> base;
  BaseField field;
};

inline bool same_descriptor(const RingDescriptor& a, const RingDescriptor& b) {
  if (&a == &b) return true;
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case RingKind::integers: return true;
    case RingKind::modular: return a.modulus == b.modulus;
    case RingKind::matrix: return a.size == b.size && same_descriptor(*a.base, *b.base);
    case RingKind::grassmann: return a.generators == b.generators && a.field == b.field;
    case RingKind::jacobson: return a.field == b.field;
  }
  return false;
}

class Element;

/// Handle to an immutable ring descriptor. Cheap to copy.
class Ring {
 public:
  static Ring integers() { return Ring(std::make_shared<RingDescriptor>()); }

  static Ring modular(const BigInt& m) {
    if (m < 2) throw Error(ErrorCode::invalid_argument, "modulus must be at least 2");
    if (m >= max_modulus()) throw Error(ErrorCode::invalid_argument, "modulus must be below 2^62");
    auto d = std::make_shared<RingDescriptor>();
    d->kind = RingKind::modular;
    d->modulus = m;
    return Ring(std::move(d));
  }

  /// k x k matrices over a commutative base ring.
  static Ring matrix(unsigned k, const Ring& base) {
    if (k == 0) throw Error(ErrorCode::invalid_argument, "matrix ring size must be positive");
    if (!base.commutative()) {
      throw Error(ErrorCode::invalid_argument, "matrix ring base must be commutative, got " + base.name());
    }
    auto d = std::make_shared<RingDescriptor>();
    d->kind = RingKind::matrix;
    d->size = k;
    d->base = base.d_;
    return Ring(std::move(d));
  }

  static Ring grassmann(unsigned g, const BaseField& field) {
    if (g == 0 || g > kMaxGrassmannGenerators) {
      throw Error(ErrorCode::invalid_argument, "Grassmann generator count must be in [1, 31]");
    }
    auto d = std::make_shared<RingDescriptor>();
    d->kind = RingKind::grassmann;
    d->generators = g;
    d->field = field;
    return Ring(std::move(d));
  }

  /// K<x, y> / (xy - 1).
  static Ring jacobson(const BaseField& field) {
    auto d = std::make_shared<RingDescriptor>();
    d->kind = RingKind::jacobson;
    d->field = field;
    return Ring(std::move(d));
  }

  RingKind kind() const noexcept { return d_->kind; }
  const BigInt& modulus() const noexcept { return d_->modulus; }
  unsigned matrix_size() const noexcept { return d_->size; }
  Ring base() const {
    if (d_->kind != RingKind::matrix) throw Error(ErrorCode::invalid_argument, name() + " has no base ring");
    return Ring(d_->base);
  }
  unsigned generators() const noexcept { return d_->generators; }
  const BaseField& field() const noexcept { return d_->field; }
  const RingDescriptor& descriptor() const noexcept { return *d_; }

  bool commutative() const {
    switch (kind()) {
      case RingKind::integers:
      case RingKind::modular: return true;
      case RingKind::matrix: return matrix_size() == 1 && base().commutative();
      case RingKind::grassmann: return generators() <= 1;
      case RingKind::jacobson: return false;
    }
    return false;
  }

  bool finite() const {
    switch (kind()) {
      case RingKind::modular: return true;
      case RingKind::matrix: return base().finite();
      case RingKind::grassmann: return !field().is_rational();
      default: return false;
    }
  }

  std::string name() const {
    switch (kind()) {
      case RingKind::integers: return "Z";
      case RingKind::modular: return "Z/" + modulus().str();
      case RingKind::matrix: return "M_" + std::to_string(matrix_size()) + "(" + base().name() + ")";
      case RingKind::grassmann: return "Grassmann(" + std::to_string(generators()) + ", " + field().name() + ")";
      case RingKind::jacobson: return "Jacobson(" + field().name() + ")";
    }
    return "?";
  }

  Element zero() const;
  Element one() const;
  /// Image of the integer n under the unique unital map Z -> R.
  Element from_int(const BigInt& n) const;
  /// Integers and Modular only.
  Element integer(const BigInt& value) const;
  Element matrix_element(std::vector<Element> entries) const;
  Element grassmann_element(const GrassmannTerms& terms) const;
  /// e_i, 1-based.
  Element generator(unsigned i) const;
  Element jacobson_element(const JacobsonTerms& terms) const;
  Element jacobson_monomial(std::uint64_t i, std::uint64_t j) const;
  Element jacobson_x() const;
  Element jacobson_y() const;

  friend bool operator==(const Ring& a, const Ring& b) { return same_descriptor(*a.d_, *b.d_); }

 private:
  explicit Ring(std::shared_ptr<const RingDescriptor> d) : d_(std::move(d)) {}

  std::shared_ptr<const RingDescriptor> d_;
};

struct MatrixPayload {
  std::vector<Element> entries;  // row-major k x k
};

/// A ring element in canonical normal form: equal elements have identical
/// payloads.
class Element {
 public:
  using Payload = std::variant<BigInt, MatrixPayload, GrassmannTerms, JacobsonTerms>;

  const Ring& ring() const noexcept { return ring_; }

  bool is_zero() const;

  const BigInt& value() const {
    if (auto* v = std::get_if<BigInt>(&payload_)) return *v;
    throw Error(ErrorCode::descriptor_mismatch, ring_.name() + " element is not an integer residue");
  }
  const std::vector<Element>& matrix_entries() const {
    if (auto* v = std::get_if<MatrixPayload>(&payload_)) return v->entries;
    throw Error(ErrorCode::descriptor_mismatch, ring_.name() + " element is not a matrix");
  }
  const GrassmannTerms& grassmann_terms() const {
    if (auto* v = std::get_if<GrassmannTerms>(&payload_)) return *v;
    throw Error(ErrorCode::descriptor_mismatch, ring_.name() + " element is not a Grassmann element");
  }
  const JacobsonTerms& jacobson_terms() const {
    if (auto* v = std::get_if<JacobsonTerms>(&payload_)) return *v;
    throw Error(ErrorCode::descriptor_mismatch, ring_.name() + " element is not a Jacobson element");
  }

  friend Element operator+(const Element& a, const Element& b);
  friend Element operator-(const Element& a, const Element& b);
  friend Element operator*(const Element& a, const Element& b);
  friend Element operator-(const Element& a);
  Element& operator+=(const Element& b) { return *this = *this + b; }
  Element& operator-=(const Element& b) { return *this = *this - b; }
  Element& operator*=(const Element& b) { return *this = *this * b; }

  friend bool operator==(const Element& a, const Element& b);

 private:
  friend class Ring;
  Element(Ring ring, Payload payload) : ring_(std::move(ring)), payload_(std::move(payload)) {}

  Ring ring_;
  Payload payload_;
};

inline bool operator==(const MatrixPayload& a, const MatrixPayload& b) { return a.entries == b.entries; }

inline bool operator==(const Element& a, const Element& b) {
  return a.ring_ == b.ring_ && a.payload_ == b.payload_;
}

// ---------------------------------------------------------------------------
// Basis multiplication rules

namespace detail {

/// Product of Grassmann basis monomials given as generator bitmasks. The sign
/// is the parity of the number of pairs (s in S, t in T) with s > t, i.e. the
/// transpositions needed to sort the concatenation S then T.
inline std::optional<std::pair<int, std::uint32_t>> grassmann_mul_mask(std::uint32_t s, std::uint32_t t) {
  if (s & t) return std::nullopt;
  unsigned inversions = 0;
  for (std::uint32_t rest = t; rest != 0; rest &= rest - 1) {
    unsigned bit = static_cast<unsigned>(std::countr_zero(rest));
    inversions += static_cast<unsigned>(std::popcount(s >> (bit + 1)));
  }
  return std::make_pair((inversions % 2 == 0) ? 1 : -1, s | t);
}

}  // namespace detail

struct SignedMonomial {
  int sign;
  std::vector<unsigned> generators;  // 1-based, strictly increasing

  friend bool operator==(const SignedMonomial&, const SignedMonomial&) = default;
};

/// e_S * e_T for generator subsets given as strictly increasing 1-based index
/// lists. Returns nullopt (zero) when S and T intersect.
inline std::optional<SignedMonomial> grassmann_mul_basis(std::span<const unsigned> s, std::span<const unsigned> t) {
  auto to_mask = [](std::span<const unsigned> idx) {
    std::uint32_t mask = 0;
    unsigned prev = 0;
    for (unsigned i : idx) {
      if (i == 0 || i > kMaxGrassmannGenerators || i <= prev) {
        throw Error(ErrorCode::invalid_argument, "generator indices must be strictly increasing in [1, 31]");
      }
      mask |= 1u << (i - 1);
      prev = i;
    }
    return mask;
  };
  auto product = detail::grassmann_mul_mask(to_mask(s), to_mask(t));
  if (!product) return std::nullopt;
  SignedMonomial out{product->first, {}};
  for (unsigned i = 0; i < 32; ++i)
    if (product->second & (1u << i)) out.generators.push_back(i + 1);
  return out;
}

/// (y^i x^j)(y^k x^l) in K<x,y>/(xy - 1): the inner x^j y^k cancels min(j, k)
/// xy pairs.
inline std::pair<std::uint64_t, std::uint64_t> jacobson_mul_basis(std::uint64_t i, std::uint64_t j,
                                                                  std::uint64_t k, std::uint64_t l) {
  if (k >= j) return {i + (k - j), l};
  return {i, l + (j - k)};
}

// ---------------------------------------------------------------------------
// Ring factories

inline Element Ring::zero() const { return from_int(0); }
inline Element Ring::one() const { return from_int(1); }

inline Element Ring::from_int(const BigInt& n) const {
  switch (kind()) {
    case RingKind::integers: return Element(*this, n);
    case RingKind::modular: return Element(*this, mod_floor(n, modulus()));
    case RingKind::matrix: {
      const unsigned k = matrix_size();
      Ring b = base();
      std::vector<Element> entries(static_cast<std::size_t>(k) * k, b.zero());
      Element diag = b.from_int(n);
      for (unsigned i = 0; i < k; ++i) entries[i * k + i] = diag;
      return Element(*this, MatrixPayload{std::move(entries)});
    }
    case RingKind::grassmann: {
      GrassmannTerms terms;
      BigRational c = field().normalize(BigRational(n));
      if (c != 0) terms.emplace(0u, c);
      return Element(*this, std::move(terms));
    }
    case RingKind::jacobson: {
      JacobsonTerms terms;
      BigRational c = field().normalize(BigRational(n));
      if (c != 0) terms.emplace(std::make_pair(0u, 0u), c);
      return Element(*this, std::move(terms));
    }
  }
  throw Error(ErrorCode::invalid_argument, "unknown ring kind");
}

inline Element Ring::integer(const BigInt& value) const {
  if (kind() != RingKind::integers && kind() != RingKind::modular) {
    throw Error(ErrorCode::descriptor_mismatch, name() + " has no integer payload");
  }
  return from_int(value);
}

inline Element Ring::matrix_element(std::vector<Element> entries) const {
  if (kind() != RingKind::matrix) throw Error(ErrorCode::descriptor_mismatch, name() + " is not a matrix ring");
  const std::size_t k = matrix_size();
  if (entries.size() != k * k) throw Error(ErrorCode::size_mismatch, "matrix ring element needs k*k entries");
  Ring b = base();
  for (const auto& e : entries)
    if (!(e.ring() == b)) throw Error(ErrorCode::descriptor_mismatch, "entry not in " + b.name());
  return Element(*this, MatrixPayload{std::move(entries)});
}

inline Element Ring::grassmann_element(const GrassmannTerms& terms) const {
  if (kind() != RingKind::grassmann) throw Error(ErrorCode::descriptor_mismatch, name() + " is not a Grassmann algebra");
  const std::uint32_t allowed = generators() >= 32 ? ~0u : ((1u << generators()) - 1);
  GrassmannTerms out;
  for (const auto& [mask, c] : terms) {
    if (mask & ~allowed) throw Error(ErrorCode::invalid_argument, "generator index exceeds " + std::to_string(generators()));
    BigRational v = field().normalize(c);
    if (v != 0) out.emplace(mask, v);
  }
  return Element(*this, std::move(out));
}

inline Element Ring::generator(unsigned i) const {
  if (i == 0 || i > generators()) throw Error(ErrorCode::invalid_argument, "generator index out of range");
  return grassmann_element({{1u << (i - 1), BigRational(1)}});
}

inline Element Ring::jacobson_element(const JacobsonTerms& terms) const {
  if (kind() != RingKind::jacobson) throw Error(ErrorCode::descriptor_mismatch, name() + " is not the Jacobson algebra");
  JacobsonTerms out;
  for (const auto& [ij, c] : terms) {
    BigRational v = field().normalize(c);
    if (v != 0) out.emplace(ij, v);
  }
  return Element(*this, std::move(out));
}

inline Element Ring::jacobson_monomial(std::uint64_t i, std::uint64_t j) const {
  return jacobson_element({{{i, j}, BigRational(1)}});
}

inline Element Ring::jacobson_x() const { return jacobson_monomial(0, 1); }
inline Element Ring::jacobson_y() const { return jacobson_monomial(1, 0); }

// ---------------------------------------------------------------------------
// Arithmetic

namespace detail {

inline void require_same_ring(const Element& a, const Element& b) {
  if (!(a.ring() == b.ring())) {
    throw Error(ErrorCode::descriptor_mismatch, a.ring().name() + " vs " + b.ring().name());
  }
}

template <class Terms>
Terms merge_terms(const BaseField& f, const Terms& a, const Terms& b, bool subtract) {
  Terms out = a;
  for (const auto& [key, c] : b) {
    auto it = out.find(key);
    if (it == out.end()) {
      out.emplace(key, subtract ? f.neg(c) : c);
      continue;
    }
    it->second = subtract ? f.sub(it->second, c) : f.add(it->second, c);
    if (it->second == 0) out.erase(it);
  }
  return out;
}

template <class Terms>
void accumulate(const BaseField& f, Terms& out, const typename Terms::key_type& key, const BigRational& c) {
  auto [it, inserted] = out.emplace(key, c);
  if (inserted) return;
  it->second = f.add(it->second, c);
  if (it->second == 0) out.erase(it);
}

}  // namespace detail

inline bool Element::is_zero() const {
  return std::visit(
      [](const auto& p) -> bool {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, BigInt>) {
          return p == 0;
        } else if constexpr (std::is_same_v<P, MatrixPayload>) {
          return std::all_of(p.entries.begin(), p.entries.end(), [](const Element& e) { return e.is_zero(); });
        } else {
          return p.empty();
        }
      },
      payload_);
}

inline Element operator+(const Element& a, const Element& b) {
  detail::require_same_ring(a, b);
  const Ring& r = a.ring();
  switch (r.kind()) {
    case RingKind::integers: return Element(r, a.value() + b.value());
    case RingKind::modular: {
      BigInt s = a.value() + b.value();
      if (s >= r.modulus()) s -= r.modulus();
      return Element(r, std::move(s));
    }
    case RingKind::matrix: {
      const auto& x = a.matrix_entries();
      const auto& y = b.matrix_entries();
      std::vector<Element> out;
      out.reserve(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) out.push_back(x[i] + y[i]);
      return Element(r, MatrixPayload{std::move(out)});
    }
    case RingKind::grassmann:
      return Element(r, detail::merge_terms(r.field(), a.grassmann_terms(), b.grassmann_terms(), false));
    case RingKind::jacobson:
      return Element(r, detail::merge_terms(r.field(), a.jacobson_terms(), b.jacobson_terms(), false));
  }
  throw Error(ErrorCode::invalid_argument, "unknown ring kind");
}

inline Element operator-(const Element& a) {
  const Ring& r = a.ring();
  switch (r.kind()) {
    case RingKind::integers: return Element(r, BigInt(-a.value()));
    case RingKind::modular: return Element(r, a.value() == 0 ? BigInt(0) : BigInt(r.modulus() - a.value()));
    case RingKind::matrix: {
      std::vector<Element> out;
      for (const auto& e : a.matrix_entries()) out.push_back(-e);
      return Element(r, MatrixPayload{std::move(out)});
    }
    case RingKind::grassmann: {
      GrassmannTerms out;
      for (const auto& [k, c] : a.grassmann_terms()) out.emplace(k, r.field().neg(c));
      return Element(r, std::move(out));
    }
    case RingKind::jacobson: {
      JacobsonTerms out;
      for (const auto& [k, c] : a.jacobson_terms()) out.emplace(k, r.field().neg(c));
      return Element(r, std::move(out));
    }
  }
  throw Error(ErrorCode::invalid_argument, "unknown ring kind");
}

inline Element operator-(const Element& a, const Element& b) {
  detail::require_same_ring(a, b);
  const Ring& r = a.ring();
  switch (r.kind()) {
    case RingKind::grassmann:
      return Element(r, detail::merge_terms(r.field(), a.grassmann_terms(), b.grassmann_terms(), true));
    case RingKind::jacobson:
      return Element(r, detail::merge_terms(r.field(), a.jacobson_terms(), b.jacobson_terms(), true));
    default: return a + (-b);
  }
}

inline Element operator*(const Element& a, const Element& b) {
  detail::require_same_ring(a, b);
  const Ring& r = a.ring();
  switch (r.kind()) {
    case RingKind::integers: return Element(r, a.value() * b.value());
    case RingKind::modular: return Element(r, BigInt((a.value() * b.value()) % r.modulus()));
    case RingKind::matrix: {
      const std::size_t k = r.matrix_size();
      const auto& x = a.matrix_entries();
      const auto& y = b.matrix_entries();
      std::vector<Element> out;
      out.reserve(k * k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
          Element acc = x[i * k] * y[j];
          for (std::size_t l = 1; l < k; ++l) acc += x[i * k + l] * y[l * k + j];
          out.push_back(std::move(acc));
        }
      return Element(r, MatrixPayload{std::move(out)});
    }
    case RingKind::grassmann: {
      GrassmannTerms out;
      const BaseField& f = r.field();
      for (const auto& [s, c] : a.grassmann_terms())
        for (const auto& [t, d] : b.grassmann_terms()) {
          auto prod = detail::grassmann_mul_mask(s, t);
          if (!prod) continue;
          BigRational cd = f.mul(c, d);
          detail::accumulate(f, out, prod->second, prod->first > 0 ? cd : f.neg(cd));
        }
      return Element(r, std::move(out));
    }
    case RingKind::jacobson: {
      JacobsonTerms out;
      const BaseField& f = r.field();
      for (const auto& [ij, c] : a.jacobson_terms())
        for (const auto& [kl, d] : b.jacobson_terms())
          detail::accumulate(f, out, jacobson_mul_basis(ij.first, ij.second, kl.first, kl.second), f.mul(c, d));
      return Element(r, std::move(out));
    }
  }
  throw Error(ErrorCode::invalid_argument, "unknown ring kind");
}

enum class ArithOp { add, sub, mul, neg };

/// Uniform entry point for the four ring operations. `b` is ignored for neg.
inline Element arith(ArithOp op, const Element& a, const Element& b) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::neg: return -a;
  }
  throw Error(ErrorCode::invalid_argument, "unknown op");
}

inline Element pow(const Element& a, unsigned k) {
  Element result = a.ring().one();
  for (unsigned i = 0; i < k; ++i) result *= a;
  return result;
}

inline Element commutator(const Element& a, const Element& b) { return a * b - b * a; }

/// n * a, i.e. a added to itself n times (negated for n < 0).
inline Element integer_multiple(const BigInt& n, const Element& a) { return a.ring().from_int(n) * a; }

// ---------------------------------------------------------------------------
// Display

inline std::string describe(const Element& a) {
  const Ring& r = a.ring();
  switch (r.kind()) {
    case RingKind::integers:
    case RingKind::modular: return a.value().str();
    case RingKind::matrix: {
      const std::size_t k = r.matrix_size();
      std::string out = "[";
      for (std::size_t i = 0; i < k; ++i) {
        out += i ? ", [" : "[";
        for (std::size_t j = 0; j < k; ++j) out += (j ? ", " : "") + describe(a.matrix_entries()[i * k + j]);
        out += "]";
      }
      return out + "]";
    }
    case RingKind::grassmann: {
      if (a.is_zero()) return "0";
      std::string out;
      for (const auto& [mask, c] : a.grassmann_terms()) {
        if (!out.empty()) out += " + ";
        out += to_string(c);
        for (unsigned i = 0; i < 32; ++i)
          if (mask & (1u << i)) out += "*e" + std::to_string(i + 1);
      }
      return out;
    }
    case RingKind::jacobson: {
      if (a.is_zero()) return "0";
      std::string out;
      for (const auto& [ij, c] : a.jacobson_terms()) {
        if (!out.empty()) out += " + ";
        out += to_string(c);
        if (ij.first) out += "*y^" + std::to_string(ij.first);
        if (ij.second) out += "*x^" + std::to_string(ij.second);
      }
      return out;
    }
  }
  return "?";
}

inline std::ostream& operator<<(std::ostream& os, const Element& a) { return os << describe(a); }

}  // namespace structring
