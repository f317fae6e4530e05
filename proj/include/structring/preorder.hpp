#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "structring/error.hpp"

namespace structring {

/// A binary relation on a ground set of n points, stored as a dense n x n
/// boolean table. Indices are 0-based in this API; every external format
/// (JSON, CLI, messages) uses 1-based indices.
class Relation {
 public:
  Relation() = default;
  explicit Relation(std::size_t n) : n_(n), table_(n * n, 0) {
    if (n == 0) throw Error(ErrorCode::invalid_argument, "relation ground set must be non-empty");
  }

  static Relation diagonal(std::size_t n) {
    Relation r(n);
    for (std::size_t i = 0; i < n; ++i) r.insert(i, i);
    return r;
  }

  static Relation full(std::size_t n) {
    Relation r(n);
    r.table_.assign(n * n, 1);
    return r;
  }

  /// {(i, j) : i <= j}, the pattern of upper-triangular matrices.
  static Relation upper_triangular(std::size_t n) {
    Relation r(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) r.insert(i, j);
    return r;
  }

  static Relation lower_triangular(std::size_t n) {
    Relation r(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j <= i; ++j) r.insert(i, j);
    return r;
  }

  std::size_t size() const noexcept { return n_; }

  bool contains(std::size_t i, std::size_t j) const {
    check_index(i, j);
    return table_[i * n_ + j] != 0;
  }

  void insert(std::size_t i, std::size_t j) {
    check_index(i, j);
    table_[i * n_ + j] = 1;
  }

  /// Pairs in row-major order.
  std::vector<std::pair<std::size_t, std::size_t>> pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if (table_[i * n_ + j]) out.emplace_back(i, j);
    return out;
  }

  bool is_reflexive() const {
    for (std::size_t i = 0; i < n_; ++i)
      if (!table_[i * n_ + i]) return false;
    return true;
  }

  bool is_transitive() const {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        if (!table_[i * n_ + j]) continue;
        for (std::size_t k = 0; k < n_; ++k)
          if (table_[j * n_ + k] && !table_[i * n_ + k]) return false;
      }
    return true;
  }

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  void check_index(std::size_t i, std::size_t j) const {
    if (i >= n_ || j >= n_) {
      throw Error(ErrorCode::invalid_argument,
                  "pair (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                      ") outside ground set of size " + std::to_string(n_));
    }
  }

  std::size_t n_ = 0;
  std::vector<std::uint8_t> table_;
};

/// True iff `rel` is reflexive and transitive.
inline bool validate(const Relation& rel) { return rel.is_reflexive() && rel.is_transitive(); }

/// A relation known to be reflexive and transitive. Obtainable only through
/// checked construction or closure.
class Preorder {
 public:
  /// Throws InvalidPreorder unless `rel` is reflexive and transitive.
  explicit Preorder(Relation rel) : rel_(std::move(rel)) {
    if (!rel_.is_reflexive()) throw Error(ErrorCode::invalid_preorder, "relation is not reflexive");
    if (!rel_.is_transitive()) throw Error(ErrorCode::invalid_preorder, "relation is not transitive");
  }

  static Preorder diagonal(std::size_t n) { return Preorder(Relation::diagonal(n)); }
  static Preorder full(std::size_t n) { return Preorder(Relation::full(n)); }
  static Preorder upper_triangular(std::size_t n) { return Preorder(Relation::upper_triangular(n)); }
  static Preorder lower_triangular(std::size_t n) { return Preorder(Relation::lower_triangular(n)); }

  std::size_t size() const noexcept { return rel_.size(); }
  bool contains(std::size_t i, std::size_t j) const { return rel_.contains(i, j); }
  const Relation& relation() const noexcept { return rel_; }

  friend bool operator==(const Preorder&, const Preorder&) = default;

 private:
  Relation rel_;
};

/// Smallest preorder containing `rel`: add the diagonal, then Warshall
/// saturation for transitivity.
inline Preorder closure(const Relation& rel) {
  Relation out = rel;
  const std::size_t n = rel.size();
  for (std::size_t i = 0; i < n; ++i) out.insert(i, i);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      if (!out.contains(i, k)) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (out.contains(k, j)) out.insert(i, j);
    }
  return Preorder(std::move(out));
}

/// The relation on {1..nm} whose member (i, j) has block indices
/// (ceil(i/m), ceil(j/m)) in `outer` and in-block offsets (i mod m, j mod m),
/// taken in {1..m}, in `inner`. This is the shape of an n x n structural
/// matrix over m x m structural matrices once flattened. With 0-based
/// indices the block is i / m and the offset i % m.
inline Preorder compose_kron(const Preorder& outer, const Preorder& inner) {
  const std::size_t n = outer.size(), m = inner.size();
  Relation out(n * m);
  for (std::size_t i = 0; i < n * m; ++i)
    for (std::size_t j = 0; j < n * m; ++j)
      if (outer.contains(i / m, j / m) && inner.contains(i % m, j % m)) out.insert(i, j);
  return Preorder(std::move(out));
}

/// Accepts `rel` as-is when it is a preorder; otherwise closes it when
/// `auto_close` is set and throws InvalidPreorder when it is not.
inline Preorder require_preorder(const Relation& rel, bool auto_close) {
  if (validate(rel)) return Preorder(rel);
  if (!auto_close) {
    throw Error(ErrorCode::invalid_preorder,
                rel.is_reflexive() ? "relation is not transitive (use auto-closure to repair)"
                                   : "relation is not reflexive (use auto-closure to repair)");
  }
  return closure(rel);
}

}  // namespace structring
