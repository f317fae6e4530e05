#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "structring/error.hpp"
#include "structring/harness/generators.hpp"
#include "structring/harness/random.hpp"
#include "structring/inverse.hpp"
#include "structring/io.hpp"
#include "structring/preorder.hpp"
#include "structring/ring_units.hpp"
#include "structring/rings.hpp"
#include "structring/structmat.hpp"

namespace structring::harness {

using io::json;

enum class SuiteName { closure, preadjoint, adjoint, flatten, cayley_hamilton, nil_lift, dedekind };

constexpr std::string_view to_string(SuiteName s) {
  switch (s) {
    case SuiteName::closure: return "closure";
    case SuiteName::preadjoint: return "preadjoint";
    case SuiteName::adjoint: return "adjoint";
    case SuiteName::flatten: return "flatten";
    case SuiteName::cayley_hamilton: return "cayley_hamilton";
    case SuiteName::nil_lift: return "nil_lift";
    case SuiteName::dedekind: return "dedekind";
  }
  return "?";
}

inline SuiteName parse_suite_name(std::string_view name) {
  for (auto s : {SuiteName::closure, SuiteName::preadjoint, SuiteName::adjoint, SuiteName::flatten,
                 SuiteName::cayley_hamilton, SuiteName::nil_lift, SuiteName::dedekind})
    if (to_string(s) == name) return s;
  throw Error(ErrorCode::invalid_argument, "unknown suite '" + std::string(name) + "'");
}

struct Scenario {
  explicit Scenario(Ring r) : ring(std::move(r)) {}

  Ring ring;
  std::size_t n = 2;
  /// Fixed preorder; when absent each trial draws one with `density`.
  std::optional<Preorder> theta;
  double density = kDefaultDensity;
  std::uint64_t trials = 100;
  std::uint64_t seed = 0;
  unsigned retry_cap = kDefaultRetryCap;
  /// Index of the first trial; lets a single failing trial be replayed.
  std::uint64_t trial_offset = 0;
};

struct Counterexample {
  std::uint64_t trial;
  std::uint64_t trial_seed;
  std::string message;
  json payload;
};

struct Check {
  std::string name;
  bool passed;
};

struct SuiteReport {
  std::string suite;
  json ring;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  double density = kDefaultDensity;
  unsigned retry_cap = kDefaultRetryCap;
  std::uint64_t trials = 0;
  std::uint64_t skipped = 0;
  std::uint64_t failures = 0;
  std::vector<Counterexample> counterexamples;
  std::vector<Check> checks;
  double wall_time_ms = 0.0;

  bool passed() const { return failures == 0; }
};

inline constexpr std::size_t kMaxStoredCounterexamples = 10;

inline json to_json(const SuiteReport& r) {
  json doc = {{"suite", r.suite},         {"ring", r.ring},         {"n", r.n},
              {"seed", r.seed},           {"density", r.density},   {"retry_cap", r.retry_cap},
              {"trials", r.trials},       {"skipped", r.skipped},   {"failures", r.failures},
              {"passed", r.passed()},     {"wall_time_ms", r.wall_time_ms}};
  json examples = json::array();
  for (const auto& c : r.counterexamples) {
    examples.push_back({{"trial", c.trial}, {"trial_seed", c.trial_seed}, {"message", c.message}, {"payload", c.payload}});
  }
  doc["counterexamples"] = examples;
  if (!r.checks.empty()) {
    json checks = json::array();
    for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}});
    doc["checks"] = checks;
  }
  return doc;
}

namespace detail {

enum class Verdict { pass, fail, skip };

struct TrialResult {
  Verdict verdict = Verdict::pass;
  std::string message;
  json payload = json::object();

  void require(bool ok, const std::string& what) {
    if (ok || verdict == Verdict::fail) return;
    verdict = Verdict::fail;
    message = what;
  }
};

inline std::string replay_command(SuiteName suite, const Scenario& sc, std::uint64_t trial) {
  std::ostringstream cmd;
  cmd << "structring proptest --suite " << to_string(suite) << " --ring '" << io::to_json(sc.ring).dump()
      << "' --n " << sc.n << " --trials 1 --seed " << sc.seed << " --trial-offset " << trial << " --density "
      << sc.density << " --retry-cap " << sc.retry_cap;
  if (sc.theta) cmd << " --theta <theta.json>";
  return cmd.str();
}

/// Identity of the base ring for a ring that may be a matrix ring.
inline std::uint64_t modulus_of_entries(const Ring& ring) {
  const Ring base = ring.kind() == RingKind::matrix ? ring.base() : ring;
  return base.modulus().convert_to<std::uint64_t>();
}

/// Right inverse of A by exhaustive search, column by column, over the
/// flattened matrix with entries in Z/m. Independent of every inversion
/// routine in the library. nullopt when some column has no solution.
inline std::optional<StructMatrix> brute_force_right_inverse(const StructMatrix& a) {
  const bool blocks = a.ring().kind() == RingKind::matrix;
  const StructMatrix flat = blocks ? flatten_blocks(a) : a;
  const std::size_t dim = flat.size();
  const std::uint64_t m = modulus_of_entries(a.ring());
  std::vector<std::uint64_t> f(dim * dim);
  for (std::size_t i = 0; i < dim * dim; ++i) f[i] = flat.entries()[i].value().convert_to<std::uint64_t>();

  std::uint64_t space = 1;
  for (std::size_t i = 0; i < dim; ++i) space *= m;

  std::vector<Element> result(dim * dim, flat.ring().zero());
  std::vector<std::uint64_t> b(dim);
  for (std::size_t col = 0; col < dim; ++col) {
    bool found = false;
    for (std::uint64_t code = 0; code < space && !found; ++code) {
      std::uint64_t rest = code;
      for (std::size_t i = 0; i < dim; ++i) {
        b[i] = rest % m;
        rest /= m;
      }
      bool ok = true;
      for (std::size_t i = 0; i < dim && ok; ++i) {
        std::uint64_t acc = 0;
        for (std::size_t k = 0; k < dim; ++k) acc = (acc + f[i * dim + k] * b[k]) % m;
        ok = acc == (i == col ? 1 % m : 0);
      }
      if (!ok) continue;
      found = true;
      for (std::size_t i = 0; i < dim; ++i) result[i * dim + col] = flat.ring().integer(b[i]);
    }
    if (!found) return std::nullopt;
  }
  StructMatrix right(flat.ring(), dim, std::move(result));
  return blocks ? unflatten_blocks(right, a.ring()) : right;
}

inline constexpr std::uint64_t kMaxBruteForceSpace = std::uint64_t{1} << 16;

inline void require_scenario(SuiteName suite, const Scenario& sc) {
  auto reject = [&](const std::string& why) {
    throw Error(ErrorCode::unsupported_combination,
                std::string(to_string(suite)) + " suite over " + sc.ring.name() + ": " + why);
  };
  if (sc.trials < 1) throw Error(ErrorCode::invalid_argument, "trials must be at least 1");
  if (sc.n < 1) throw Error(ErrorCode::invalid_argument, "n must be positive");
  if (!(sc.density >= 0.0 && sc.density <= 1.0)) throw Error(ErrorCode::invalid_argument, "density must lie in [0, 1]");
  if (sc.theta && sc.theta->size() != sc.n) throw Error(ErrorCode::size_mismatch, "theta size differs from n");
  const Ring& r = sc.ring;
  switch (suite) {
    case SuiteName::closure:
      if (r.kind() == RingKind::jacobson) reject("no inversion procedure for this ring");
      if (r.kind() == RingKind::matrix && sc.n * r.matrix_size() > kMaxLeibnizSize) reject("flattened size too large");
      if (sc.n > kMaxLeibnizSize) reject("n too large");
      break;
    case SuiteName::preadjoint:
      if (sc.n > kDefaultPreadjointLimit) reject("n exceeds the preadjoint limit");
      break;
    case SuiteName::adjoint:
    case SuiteName::cayley_hamilton:
      if (!r.commutative()) reject("ring is not commutative");
      if (sc.n > kMaxLeibnizSize) reject("n too large");
      break;
    case SuiteName::flatten:
      if (r.kind() != RingKind::matrix) reject("ring is not a matrix ring");
      break;
    case SuiteName::nil_lift:
      if (!nilradical_info(r)) reject("no nilradical implemented");
      if (sc.n > kMaxLeibnizSize) reject("n too large");
      break;
    case SuiteName::dedekind: {
      const bool modular = r.kind() == RingKind::modular;
      const bool blocks = r.kind() == RingKind::matrix && r.base().kind() == RingKind::modular;
      if (!modular && !blocks) reject("needs Z/m or a matrix ring over Z/m");
      const std::size_t dim = sc.n * (blocks ? r.matrix_size() : 1);
      BigInt space = boost::multiprecision::pow(BigInt(modulus_of_entries(r)), static_cast<unsigned>(dim));
      if (space > kMaxBruteForceSpace) reject("exhaustive right-inverse search space exceeds 2^16");
      break;
    }
  }
}

// ---------------------------------------------------------------------------
// Trials

inline TrialResult trial_closure(const Scenario& sc, const Preorder& theta, Rng& rng) {
  TrialResult t;
  const StructMatrix a = gen_structural_matrix(theta, sc.ring, rng, true, sc.retry_cap);
  const auto cert = invert(a, theta);
  t.payload = {{"theta", io::to_json(theta)}, {"matrix", io::to_json(a)}, {"computed", io::to_json(cert)}};
  t.require(cert.verified(), "inverse certificate does not verify");
  t.require(cert.structural.value_or(false), "inverse leaves the structural subring");
  return t;
}

inline TrialResult trial_preadjoint(const Scenario& sc, const Preorder& theta, Rng& rng) {
  TrialResult t;
  const StructMatrix a = gen_structural_matrix(theta, sc.ring, rng, false);
  const StructMatrix star = preadjoint(a);
  t.payload = {{"theta", io::to_json(theta)}, {"matrix", io::to_json(a)}, {"computed", io::to_json(star)}};
  t.require(check_structural(star, theta), "preadjoint leaves the structural subring");
  if (sc.ring.commutative() && a.size() <= kMaxLeibnizSize) {
    const StructMatrix expected = left_scale(sc.ring.from_int(factorial(static_cast<unsigned>(a.size() - 1))),
                                             adjoint_classical(a));
    t.require(star == expected, "preadjoint differs from (n-1)! adj(A)");
  }
  return t;
}

inline TrialResult trial_adjoint(const Scenario& sc, const Preorder& theta, Rng& rng) {
  TrialResult t;
  const StructMatrix a = gen_structural_matrix(theta, sc.ring, rng, false);
  const StructMatrix adj = adjoint_classical(a);
  const StructMatrix det_i = scalar_embed(determinant(a), a.size());
  t.payload = {{"theta", io::to_json(theta)}, {"matrix", io::to_json(a)}, {"computed", io::to_json(adj)}};
  t.require(check_structural(adj, theta), "adjoint leaves the structural subring");
  t.require(a * adj == det_i, "A adj(A) != det(A) I");
  t.require(adj * a == det_i, "adj(A) A != det(A) I");
  return t;
}

inline TrialResult trial_flatten(const Scenario& sc, const Preorder& outer, Rng& rng) {
  TrialResult t;
  const Ring& ring = sc.ring;
  const std::size_t n = sc.n, m = ring.matrix_size();
  const Preorder inner = gen_preorder(m, sc.density, rng);
  const Preorder kron = compose_kron(outer, inner);
  const StructMatrix x = gen_block_structural(outer, inner, ring, rng);
  const StructMatrix y = gen_structural_matrix(Preorder::full(n), ring, rng, false);
  const StructMatrix fx = flatten_blocks(x), fy = flatten_blocks(y);
  t.payload = {{"theta", io::to_json(outer)}, {"inner_theta", io::to_json(inner)}, {"x", io::to_json(x)}, {"y", io::to_json(y)}};

  t.require(flatten_blocks(x * y) == fx * fy, "flatten(XY) != flatten(X) flatten(Y)");
  t.require(flatten_blocks(x + y) == fx + fy, "flatten(X + Y) != flatten(X) + flatten(Y)");
  t.require(flatten_blocks(StructMatrix::identity(ring, n)) == StructMatrix::identity(ring.base(), n * m),
            "flatten(I) != I");
  t.require(unflatten_blocks(fx, ring) == x && unflatten_blocks(fy, ring) == y, "flatten is not injective");
  t.require(check_block_structural(x, outer, inner), "generated block matrix is not structural");
  t.require(check_block_structural(x, outer, inner) == check_structural(fx, kron), "structural test disagrees for X");
  t.require(check_block_structural(y, outer, inner) == check_structural(fy, kron), "structural test disagrees for Y");

  // One nonzero entry outside the composed relation must break both sides.
  std::vector<std::pair<std::size_t, std::size_t>> outside;
  for (std::size_t i = 0; i < n * m; ++i)
    for (std::size_t j = 0; j < n * m; ++j)
      if (!kron.contains(i, j)) outside.emplace_back(i, j);
  if (!outside.empty()) {
    auto [i, j] = outside[rng.below(outside.size())];
    StructMatrix bumped = fx;
    bumped.set(i, j, bumped(i, j) + ring.base().one());
    const StructMatrix unbumped = unflatten_blocks(bumped, ring);
    t.require(!check_structural(bumped, kron), "perturbed matrix still flattened-structural");
    t.require(!check_block_structural(unbumped, outer, inner), "perturbed matrix still block-structural");
  }
  return t;
}

inline TrialResult trial_cayley_hamilton(const Scenario& sc, const Preorder& theta, Rng& rng, std::uint64_t index) {
  TrialResult t;
  std::optional<StructMatrix> sample;
  if (index % 2 == 0) {
    try {
      sample = gen_structural_matrix(theta, sc.ring, rng, true, sc.retry_cap);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::generation_failed) throw;
    }
  }
  const StructMatrix a = sample ? *sample : gen_structural_matrix(theta, sc.ring, rng, false);
  const MonicPolynomial chi = char_poly(a);
  t.payload = {{"theta", io::to_json(theta)}, {"matrix", io::to_json(a)}, {"computed", io::to_json(chi)}};
  t.require(evaluate(chi, a).is_zero(), "chi_A(A) != 0");
  const Element det = determinant(a);
  t.require(chi.coefficient(0) == (a.size() % 2 == 0 ? det : -det), "constant term != (-1)^n det(A)");
  if (is_unit(det)) {
    const auto by_adj = inv_adjugate(a);
    const auto by_chi = inv_char_poly(a);
    t.require(by_adj.inverse == by_chi.inverse, "char-poly inverse differs from adjugate inverse");
    t.require(by_adj.inverse == inverse_from_monic_annihilator(a, chi).inverse, "annihilator inverse differs");
    if (sc.ring.kind() == RingKind::modular) {
      const BigInt group_bound = boost::multiprecision::pow(sc.ring.modulus(), static_cast<unsigned>(a.size() * a.size()));
      if (group_bound <= (BigInt(1) << 16)) {
        t.require(inv_by_power_order(a).inverse == by_adj.inverse, "power-order inverse differs");
      }
    }
  }
  return t;
}

inline TrialResult trial_nil_lift(const Scenario& sc, const Preorder& theta, Rng& rng) {
  TrialResult t;
  const Ring& ring = sc.ring;
  const unsigned k = nilradical_info(ring)->nil_index_bound;

  // Element level: approximate inverses modulo the nilradical.
  Element x = ring.zero();
  do {
    x = random_element(ring, rng);
  } while (!is_unit(x));
  const Element s1 = *try_invert_base(nil_decompose(x).body);
  std::vector<Element> approximants{s1};
  if (rng.chance(0.5)) approximants.push_back(s1 + random_nil_element(ring, rng));
  const auto lifted = lift_inverse_nil_binomial(x, approximants, k);
  t.require(lifted.inverse == *try_invert_base(x), "binomial lift differs from the direct inverse");

  // Matrix level: the inverse of the body matrix is an inverse modulo M_n(N).
  const StructMatrix a = gen_structural_matrix(theta, ring, rng, true, sc.retry_cap);
  std::vector<Element> body;
  for (const auto& e : a.entries()) body.push_back(nil_decompose(e).body);
  const StructMatrix body_inv = invert(StructMatrix(ring, a.size(), std::move(body))).inverse;
  const auto by_lift = lift_inverse_nil_binomial(a, std::vector<StructMatrix>{body_inv}, k);
  const auto by_series = inv_nil_geometric(a, theta);
  t.payload = {{"theta", io::to_json(theta)},
               {"element", io::to_json(x)},
               {"matrix", io::to_json(a)},
               {"computed", io::to_json(by_series)}};
  t.require(by_lift.inverse == by_series.inverse, "binomial lift differs from the geometric lift");
  t.require(by_series.structural.value_or(false), "nil-geometric inverse leaves the structural subring");
  if (ring.commutative()) t.require(inv_adjugate(a).inverse == by_series.inverse, "geometric lift differs from adjugate");
  return t;
}

inline TrialResult trial_dedekind(const Scenario& sc, const Preorder& theta, Rng& rng) {
  TrialResult t;
  const StructMatrix a = gen_structural_matrix(theta, sc.ring, rng, true, sc.retry_cap);
  const auto right = brute_force_right_inverse(a);
  t.payload = {{"theta", io::to_json(theta)}, {"matrix", io::to_json(a)}};
  if (!right) {
    t.require(false, "invertible matrix has no right inverse");
    return t;
  }
  t.payload["computed"] = io::to_json(*right);
  const StructMatrix id = StructMatrix::identity(sc.ring, a.size());
  t.require(a * *right == id, "brute-force right inverse does not satisfy AB = I");
  t.require(*right * a == id, "AB = I but BA != I");
  return t;
}

}  // namespace detail

/// Runs `scenario.trials` independent trials. Trial i uses the seed
/// derive_seed(seed, trial_offset + i); the preorder is drawn first (unless
/// fixed), then the instance. Generation failures count as skipped; any
/// other error or a violated property is a failure with its full instance
/// recorded.
inline SuiteReport run_suite(SuiteName suite, const Scenario& sc) {
  detail::require_scenario(suite, sc);
  const auto start = std::chrono::steady_clock::now();
  SuiteReport report;
  report.suite = std::string(to_string(suite));
  report.ring = io::to_json(sc.ring);
  report.n = sc.n;
  report.seed = sc.seed;
  report.density = sc.density;
  report.retry_cap = sc.retry_cap;

  for (std::uint64_t i = 0; i < sc.trials; ++i) {
    const std::uint64_t index = sc.trial_offset + i;
    const std::uint64_t trial_seed = derive_seed(sc.seed, index);
    Rng rng(trial_seed);
    ++report.trials;
    detail::TrialResult result;
    try {
      const Preorder theta = sc.theta ? *sc.theta : gen_preorder(sc.n, sc.density, rng);
      switch (suite) {
        case SuiteName::closure: result = detail::trial_closure(sc, theta, rng); break;
        case SuiteName::preadjoint: result = detail::trial_preadjoint(sc, theta, rng); break;
        case SuiteName::adjoint: result = detail::trial_adjoint(sc, theta, rng); break;
        case SuiteName::flatten: result = detail::trial_flatten(sc, theta, rng); break;
        case SuiteName::cayley_hamilton: result = detail::trial_cayley_hamilton(sc, theta, rng, index); break;
        case SuiteName::nil_lift: result = detail::trial_nil_lift(sc, theta, rng); break;
        case SuiteName::dedekind: result = detail::trial_dedekind(sc, theta, rng); break;
      }
    } catch (const Error& e) {
      result.verdict = e.code() == ErrorCode::generation_failed ? detail::Verdict::skip : detail::Verdict::fail;
      result.message = e.what();
    }
    if (result.verdict == detail::Verdict::skip) ++report.skipped;
    if (result.verdict != detail::Verdict::fail) continue;
    ++report.failures;
    if (report.counterexamples.size() < kMaxStoredCounterexamples) {
      result.payload["replay"] = detail::replay_command(suite, sc, index);
      report.counterexamples.push_back({index, trial_seed, result.message, std::move(result.payload)});
    }
  }
  report.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

/// Every preorder on {1..n}, in increasing order of the bit pattern of
/// their off-diagonal pairs.
inline std::vector<Preorder> all_preorders(std::size_t n) {
  if (n > 5) throw Error(ErrorCode::size_limit, "preorder enumeration is limited to n <= 5");
  std::vector<std::pair<std::size_t, std::size_t>> off;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) off.emplace_back(i, j);
  std::vector<Preorder> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << off.size()); ++bits) {
    Relation rel = Relation::diagonal(n);
    for (std::size_t b = 0; b < off.size(); ++b)
      if (bits & (std::uint64_t{1} << b)) rel.insert(off[b].first, off[b].second);
    if (validate(rel)) out.emplace_back(rel);
  }
  return out;
}

inline constexpr std::uint64_t kMaxExhaustiveMatrices = 4096;

/// Exhaustive closure check over Z/m: for every preorder on {1..n} and
/// every structural matrix, the two-sided inverse is located by searching
/// all n x n matrices (independently of the library's inversion routines);
/// each invertible matrix must have a structural inverse, and invert() must
/// agree with the search. One trial per invertible structural matrix.
inline SuiteReport run_exhaustive_closure(const Ring& ring, std::size_t n) {
  if (ring.kind() != RingKind::modular) throw Error(ErrorCode::unsupported_combination, "exhaustive closure needs Z/m");
  const std::uint64_t m = ring.modulus().convert_to<std::uint64_t>();
  BigInt space = boost::multiprecision::pow(BigInt(m), static_cast<unsigned>(n * n));
  if (space > kMaxExhaustiveMatrices) {
    throw Error(ErrorCode::unsupported_combination, "search space exceeds " + std::to_string(kMaxExhaustiveMatrices) + " matrices");
  }
  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t count = space.convert_to<std::uint64_t>();

  auto decode = [&](std::uint64_t code) {
    std::vector<std::uint64_t> v(n * n);
    for (auto& e : v) {
      e = code % m;
      code /= m;
    }
    return v;
  };
  auto mul_is_identity = [&](const std::vector<std::uint64_t>& x, const std::vector<std::uint64_t>& y) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        std::uint64_t acc = 0;
        for (std::size_t k = 0; k < n; ++k) acc = (acc + x[i * n + k] * y[k * n + j]) % m;
        if (acc != (i == j ? 1 % m : 0)) return false;
      }
    return true;
  };
  auto to_matrix = [&](const std::vector<std::uint64_t>& v) {
    std::vector<Element> entries;
    for (auto e : v) entries.push_back(ring.integer(e));
    return StructMatrix(ring, n, std::move(entries));
  };

  // Inverse table over all of M_n(Z/m) by search.
  std::vector<std::optional<std::uint64_t>> inverse_of(count);
  for (std::uint64_t a = 0; a < count; ++a) {
    if (inverse_of[a]) continue;
    const auto x = decode(a);
    for (std::uint64_t b = 0; b < count; ++b) {
      const auto y = decode(b);
      if (mul_is_identity(x, y) && mul_is_identity(y, x)) {
        inverse_of[a] = b;
        inverse_of[b] = a;
        break;
      }
    }
  }

  SuiteReport report;
  report.suite = "closure (exhaustive)";
  report.ring = io::to_json(ring);
  report.n = n;
  for (const Preorder& theta : all_preorders(n)) {
    for (std::uint64_t a = 0; a < count; ++a) {
      const auto x = decode(a);
      bool structural = true;
      for (std::size_t i = 0; i < n && structural; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (!theta.contains(i, j) && x[i * n + j] != 0) structural = false;
      if (!structural) continue;

      const StructMatrix am = to_matrix(x);
      std::string problem;
      std::optional<StructMatrix> found;
      if (inverse_of[a]) found = to_matrix(decode(*inverse_of[a]));
      try {
        const auto cert = invert(am, theta);
        if (!found) problem = "invert() succeeded on a matrix with no inverse";
        else if (!(cert.inverse == *found)) problem = "invert() disagrees with exhaustive search";
      } catch (const Error& e) {
        if (e.code() != ErrorCode::not_invertible) problem = e.what();
        else if (found) problem = "invert() rejected an invertible matrix";
      }
      if (!found && problem.empty()) continue;
      ++report.trials;
      if (found && !check_structural(*found, theta)) problem = "inverse leaves the structural subring";
      if (problem.empty()) continue;
      ++report.failures;
      if (report.counterexamples.size() < kMaxStoredCounterexamples) {
        json payload = {{"theta", io::to_json(theta)}, {"matrix", io::to_json(am)}};
        if (found) payload["computed"] = io::to_json(*found);
        report.counterexamples.push_back({a, 0, problem, payload});
      }
    }
  }
  report.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace structring::harness
