#pragma once

#include <initializer_list>
#include <vector>

#include "structring/structring.hpp"

namespace testing_helpers {

using namespace structring;

inline StructMatrix int_matrix(const Ring& ring, std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<std::vector<Element>> out;
  for (const auto& row : rows) {
    std::vector<Element> line;
    for (long v : row) line.push_back(ring.from_int(v));
    out.push_back(std::move(line));
  }
  return StructMatrix::from_rows(ring, out);
}

inline Relation relation(std::size_t n, std::initializer_list<std::pair<std::size_t, std::size_t>> one_based) {
  Relation r(n);
  for (auto [i, j] : one_based) r.insert(i - 1, j - 1);
  return r;
}

inline Ring grassmann_q(unsigned g) { return Ring::grassmann(g, BaseField::rationals()); }

}  // namespace testing_helpers
