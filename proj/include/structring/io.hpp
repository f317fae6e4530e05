#pragma once

// JSON encodings for relations, ring descriptors, elements, matrices,
// polynomials and inversion certificates. All indices are 1-based.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "structring/bigint.hpp"
#include "structring/error.hpp"
#include "structring/inverse.hpp"
#include "structring/preorder.hpp"
#include "structring/rings.hpp"
#include "structring/structmat.hpp"

namespace structring::io {

using json = nlohmann::json;

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::invalid_argument, "cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::parse_error, path + ": " + e.what());
  }
}

inline void write_json_file(const std::string& path, const json& doc) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::invalid_argument, "cannot write '" + path + "'");
  out << doc.dump(2) << "\n";
}

namespace detail {

[[noreturn]] inline void fail(const std::string& what) { throw Error(ErrorCode::parse_error, what); }

inline const json& field_of(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) fail(std::string("missing key '") + key + "'");
  return doc.at(key);
}

inline BigInt integer_from(const json& v) {
  if (v.is_number_integer()) {
    return v.is_number_unsigned() ? BigInt(v.get<std::uint64_t>()) : BigInt(v.get<std::int64_t>());
  }
  if (v.is_string()) return parse_bigint(v.get<std::string>());
  fail("expected an integer, got " + v.dump());
}

inline BigRational rational_from(const json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  return BigRational(integer_from(v));
}

inline std::size_t size_from(const json& v, const char* what) {
  BigInt n = integer_from(v);
  if (n < 1 || n > 4096) fail(std::string(what) + " out of range");
  return n.convert_to<std::size_t>();
}

inline json small_integer(const BigInt& v) { return json(v.convert_to<std::int64_t>()); }

inline json coefficient_to_json(const BaseField& f, const BigRational& c) {
  if (f.is_rational()) return to_string(c);
  return small_integer(boost::multiprecision::numerator(c));
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Relations

inline json to_json(const Relation& rel) {
  json pairs = json::array();
  for (auto [i, j] : rel.pairs()) pairs.push_back({i + 1, j + 1});
  return {{"n", rel.size()}, {"pairs", pairs}};
}

inline json to_json(const Preorder& p) { return to_json(p.relation()); }

inline Relation relation_from_json(const json& doc) {
  const std::size_t n = detail::size_from(detail::field_of(doc, "n"), "n");
  Relation rel(n);
  const json& pairs = detail::field_of(doc, "pairs");
  if (!pairs.is_array()) detail::fail("'pairs' must be an array");
  for (const auto& pair : pairs) {
    if (!pair.is_array() || pair.size() != 2) detail::fail("each pair must be [i, j]");
    BigInt i = detail::integer_from(pair[0]), j = detail::integer_from(pair[1]);
    if (i < 1 || j < 1 || i > n || j > n) detail::fail("pair " + pair.dump() + " outside {1.." + std::to_string(n) + "}");
    rel.insert(i.convert_to<std::size_t>() - 1, j.convert_to<std::size_t>() - 1);
  }
  return rel;
}

/// Non-preorders are rejected unless `auto_close` asks for their closure.
inline Preorder preorder_from_json(const json& doc, bool auto_close) {
  return require_preorder(relation_from_json(doc), auto_close);
}

// ---------------------------------------------------------------------------
// Ring descriptors

inline json to_json(const BaseField& f) {
  if (f.is_rational()) return {{"kind", "rat"}};
  return {{"kind", "mod"}, {"modulus", detail::small_integer(f.characteristic())}};
}

inline BaseField field_from_json(const json& doc) {
  const std::string kind = detail::field_of(doc, "kind").get<std::string>();
  if (kind == "rat" || kind == "rational" || kind == "rationals") return BaseField::rationals();
  if (kind == "mod" || kind == "modular") return BaseField::prime_field(detail::integer_from(detail::field_of(doc, "modulus")));
  detail::fail("unknown base field kind '" + kind + "'");
}

inline json to_json(const Ring& r) {
  switch (r.kind()) {
    case RingKind::integers: return {{"kind", "int"}};
    case RingKind::modular: return {{"kind", "mod"}, {"modulus", detail::small_integer(r.modulus())}};
    case RingKind::matrix: return {{"kind", "matrix"}, {"size", r.matrix_size()}, {"base", to_json(r.base())}};
    case RingKind::grassmann: return {{"kind", "grassmann"}, {"generators", r.generators()}, {"base", to_json(r.field())}};
    case RingKind::jacobson: return {{"kind", "jacobson"}, {"base", to_json(r.field())}};
  }
  return {};
}

inline Ring ring_from_json(const json& doc) {
  if (!doc.is_object()) detail::fail("ring descriptor must be an object");
  const std::string kind = detail::field_of(doc, "kind").get<std::string>();
  if (kind == "int" || kind == "integers") return Ring::integers();
  if (kind == "mod" || kind == "modular") return Ring::modular(detail::integer_from(detail::field_of(doc, "modulus")));
  if (kind == "matrix") {
    auto k = static_cast<unsigned>(detail::size_from(detail::field_of(doc, "size"), "size"));
    return Ring::matrix(k, ring_from_json(detail::field_of(doc, "base")));
  }
  if (kind == "grassmann") {
    auto g = static_cast<unsigned>(detail::size_from(detail::field_of(doc, "generators"), "generators"));
    return Ring::grassmann(g, field_from_json(detail::field_of(doc, "base")));
  }
  if (kind == "jacobson") return Ring::jacobson(field_from_json(detail::field_of(doc, "base")));
  detail::fail("unknown ring kind '" + kind + "'");
}

/// Accepts a JSON object or its textual form (as given on a command line).
inline Ring ring_from_text(const std::string& text) {
  try {
    return ring_from_json(json::parse(text));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::parse_error, std::string("ring descriptor: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// Elements

/// Integers: decimal string. Modular: integer residue. Matrix rings: nested
/// row-major array. Grassmann: [[coefficient, [generators ascending]], ...]
/// ordered by degree then lexicographically. Jacobson: [[coefficient, i, j],
/// ...] for c y^i x^j, ordered by (i, j). Rational coefficients are strings
/// "p" or "p/q"; prime-field coefficients are integers.
inline json to_json(const Element& a) {
  const Ring& r = a.ring();
  switch (r.kind()) {
    case RingKind::integers: return a.value().str();
    case RingKind::modular: return detail::small_integer(a.value());
    case RingKind::matrix: {
      const std::size_t k = r.matrix_size();
      json rows = json::array();
      for (std::size_t i = 0; i < k; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < k; ++j) row.push_back(to_json(a.matrix_entries()[i * k + j]));
        rows.push_back(row);
      }
      return rows;
    }
    case RingKind::grassmann: {
      std::vector<std::pair<std::vector<unsigned>, BigRational>> terms;
      for (const auto& [mask, c] : a.grassmann_terms()) {
        std::vector<unsigned> idx;
        for (unsigned i = 0; i < 32; ++i)
          if (mask & (1u << i)) idx.push_back(i + 1);
        terms.emplace_back(std::move(idx), c);
      }
      std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) {
        if (x.first.size() != y.first.size()) return x.first.size() < y.first.size();
        return x.first < y.first;
      });
      json out = json::array();
      for (const auto& [idx, c] : terms) out.push_back({detail::coefficient_to_json(r.field(), c), idx});
      return out;
    }
    case RingKind::jacobson: {
      json out = json::array();
      for (const auto& [ij, c] : a.jacobson_terms())
        out.push_back({detail::coefficient_to_json(r.field(), c), ij.first, ij.second});
      return out;
    }
  }
  return {};
}

inline Element element_from_json(const Ring& r, const json& v) {
  switch (r.kind()) {
    case RingKind::integers:
    case RingKind::modular: return r.integer(detail::integer_from(v));
    case RingKind::matrix: {
      const std::size_t k = r.matrix_size();
      if (!v.is_array() || v.size() != k) detail::fail("matrix-ring element must have " + std::to_string(k) + " rows");
      std::vector<Element> entries;
      for (const auto& row : v) {
        if (!row.is_array() || row.size() != k) detail::fail("matrix-ring element rows must have length " + std::to_string(k));
        for (const auto& e : row) entries.push_back(element_from_json(r.base(), e));
      }
      return r.matrix_element(std::move(entries));
    }
    case RingKind::grassmann: {
      if (!v.is_array()) detail::fail("Grassmann element must be a list of [coefficient, [generators]]");
      Element out = r.zero();
      for (const auto& term : v) {
        if (!term.is_array() || term.size() != 2 || !term[1].is_array()) {
          detail::fail("Grassmann term must be [coefficient, [generators]]");
        }
        std::vector<unsigned> idx;
        for (const auto& g : term[1]) {
          BigInt i = detail::integer_from(g);
          if (i < 1 || i > r.generators()) detail::fail("generator index " + i.str() + " out of range");
          idx.push_back(i.convert_to<unsigned>());
        }
        std::uint32_t mask = 0;
        for (unsigned i : idx) mask |= 1u << (i - 1);
        if (static_cast<std::size_t>(std::popcount(mask)) != idx.size()) detail::fail("repeated generator in term");
        // Listed order may be unsorted: multiply the generators out.
        Element mono = r.grassmann_element({{0u, detail::rational_from(term[0])}});
        for (unsigned i : idx) mono *= r.generator(i);
        out += mono;
      }
      return out;
    }
    case RingKind::jacobson: {
      if (!v.is_array()) detail::fail("Jacobson element must be a list of [coefficient, i, j]");
      JacobsonTerms terms;
      for (const auto& term : v) {
        if (!term.is_array() || term.size() != 3) detail::fail("Jacobson term must be [coefficient, i, j]");
        BigInt i = detail::integer_from(term[1]), j = detail::integer_from(term[2]);
        if (i < 0 || j < 0) detail::fail("Jacobson exponents must be non-negative");
        auto key = std::make_pair(i.convert_to<std::uint64_t>(), j.convert_to<std::uint64_t>());
        BigRational c = r.field().normalize(detail::rational_from(term[0]));
        auto [it, inserted] = terms.emplace(key, c);
        if (!inserted) it->second = r.field().add(it->second, c);
      }
      return r.jacobson_element(terms);
    }
  }
  detail::fail("unknown ring kind");
}

// ---------------------------------------------------------------------------
// Matrices and polynomials

inline json to_json(const StructMatrix& a) {
  json rows = json::array();
  for (std::size_t i = 0; i < a.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < a.size(); ++j) row.push_back(to_json(a(i, j)));
    rows.push_back(row);
  }
  json doc = {{"ring", to_json(a.ring())}, {"n", a.size()}};
  if (a.pattern()) doc["theta"] = to_json(*a.pattern());
  doc["entries"] = rows;
  return doc;
}

inline StructMatrix matrix_from_json(const json& doc, bool auto_close_theta = false) {
  const Ring ring = ring_from_json(detail::field_of(doc, "ring"));
  const json& rows = detail::field_of(doc, "entries");
  if (!rows.is_array()) detail::fail("'entries' must be an array of rows");
  const std::size_t n = doc.contains("n") ? detail::size_from(doc.at("n"), "n") : rows.size();
  if (rows.size() != n) detail::fail("'entries' must have n rows");
  std::vector<Element> entries;
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != n) detail::fail("every row must have n entries");
    for (const auto& e : row) entries.push_back(element_from_json(ring, e));
  }
  StructMatrix m(ring, n, std::move(entries));
  if (doc.contains("theta")) m.set_pattern(preorder_from_json(doc.at("theta"), auto_close_theta));
  return m;
}

/// {"ring": ..., "degree": d, "coeffs": [c_0, ..., c_d], "leading": "k"}
/// where c_d is the image of the integer k.
inline json to_json(const MonicPolynomial& p) {
  json coeffs = json::array();
  for (std::size_t i = 0; i <= p.degree(); ++i) coeffs.push_back(to_json(p.coefficient(i)));
  return {{"ring", to_json(p.ring())}, {"degree", p.degree()}, {"coeffs", coeffs}, {"leading", p.leading().str()}};
}

inline MonicPolynomial polynomial_from_json(const json& doc) {
  const Ring ring = ring_from_json(detail::field_of(doc, "ring"));
  const json& coeffs = detail::field_of(doc, "coeffs");
  if (!coeffs.is_array() || coeffs.size() < 2) detail::fail("'coeffs' must list c_0 .. c_d with d >= 1");
  std::vector<Element> lower;
  for (std::size_t i = 0; i + 1 < coeffs.size(); ++i) lower.push_back(element_from_json(ring, coeffs[i]));
  BigInt leading = doc.contains("leading") ? detail::integer_from(doc.at("leading")) : BigInt(1);
  if (!(element_from_json(ring, coeffs.back()) == ring.from_int(leading))) {
    detail::fail("last coefficient must equal the integer 'leading' (default 1)");
  }
  return MonicPolynomial(ring, std::move(lower), leading);
}

inline json to_json(const InverseCertificate<StructMatrix>& cert) {
  json doc = {{"method", std::string(to_string(cert.method))}, {"inverse", to_json(cert.inverse)}, {"verified", cert.verified()}};
  if (cert.structural) doc["structural"] = *cert.structural;
  return doc;
}

inline json to_json(const InverseCertificate<Element>& cert) {
  return {{"method", std::string(to_string(cert.method))},
          {"ring", to_json(cert.inverse.ring())},
          {"inverse", to_json(cert.inverse)},
          {"verified", cert.verified()}};
}

}  // namespace structring::io
