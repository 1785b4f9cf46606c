#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzylie/algebra.hpp"
#include "fuzzylie/ifalgebra.hpp"
#include "fuzzylie/ifset.hpp"

namespace fuzzylie {

enum class TheoremId { T3_2, T3_3, T3_4, C3_5, T4_1, T4_2, T5_1, NEG5, T6_1, T6_2, L7_2, T7_3 };

/// "T3.2", "C3.5", ... as used on the command line and in reports.
std::string to_string(TheoremId id);
std::optional<TheoremId> parse_theorem_id(std::string_view text);
const std::vector<TheoremId>& all_theorems();

/// Named algebra families at desk scale:
///   abelian     any d, n
///   f2          d = n, [e0, ..., e(n-1)] = e0
///   heisenberg  d = n + 1, [e0, ..., e(n-1)] = en
///   auto        f2 when d == n, heisenberg when d == n + 1, abelian otherwise
/// Throws std::invalid_argument on an unknown family or a dimension the family
/// does not have.
AlgebraPtr family_algebra(std::string_view family, unsigned p, std::size_t d, std::size_t n);

struct VerifyConfig {
  std::string family = "auto";
  /// Overrides family/p/d/n when set.
  AlgebraPtr algebra;
  unsigned p = 3;
  std::size_t d = 2;
  std::size_t n = 2;
  std::size_t trials = 500;
  std::uint64_t seed = 1;
  /// Chain length handed to the generators.
  std::size_t levels = 3;
};

/// What a witness asserts about one of its sets.
enum class ClaimKind {
  fuzzy,             ///< the set passes the fuzzy predicate `kind`
  cuts,              ///< every non-empty cut of strictness `cut` over the threshold grid is crisp `kind`
  coset_criterion,   ///< mu(x-y)=mu(0), lambda(x-y)=lambda(0) agrees with coset table equality for all x, y
  quotient,          ///< the quotient is an n-Lie algebra with representative-independent operations
};

struct Claim {
  ClaimKind claim = ClaimKind::fuzzy;
  IFKind kind = IFKind::subalgebra;
  CutKind cut{};
  std::string set;   ///< name of the set in Witness::sets
  bool holds = false;  ///< recorded verdict
};

/// A fully reconstructible counterexample (or control detection): every set
/// carries its algebra, maps are kept for the record.
struct Witness {
  std::string detail;
  std::vector<std::pair<std::string, IFSet>> sets;
  std::vector<std::pair<std::string, LinearMap>> maps;
  std::vector<Claim> claims;

  const IFSet& set(std::string_view name) const;
};

/// Recomputes a claim from scratch.
bool evaluate_claim(const Witness& w, const Claim& c);
/// True when every recorded verdict is reproduced.
bool replay(const Witness& w);

struct CheckReport {
  TheoremId id = TheoremId::T3_2;
  std::string algebra;  ///< short description of the carrier(s)
  std::size_t trials = 0;
  std::size_t failure_count = 0;
  std::vector<Witness> failures;  ///< first few failures, capped
  std::size_t control_trials = 0;
  std::size_t control_detections = 0;
  std::vector<Witness> controls;  ///< first few control detections, capped
  std::uint64_t seed = 0;
  std::chrono::milliseconds elapsed{0};
  /// PASS / FAIL, or for NEG5: WITNESS FOUND / NOT FOUND AT SCALE.
  std::string outcome;
  std::vector<std::string> notes;

  /// No failures and every negative control was detected at least once.
  bool passed() const;
};

/// Runs one theorem check. Deterministic in (id, config). Throws
/// std::invalid_argument on a bad config and GuardExceeded beyond the size guards.
CheckReport verify(TheoremId id, const VerifyConfig& config);

struct ProductSearchConfig {
  AlgebraPtr left;   ///< defaults to f2 over GF(3)
  AlgebraPtr right;  ///< defaults to the 1-dim abelian algebra over GF(3)
  /// Degrees used for the two levels are k/denominator.
  unsigned denominator = 3;
  std::uint64_t seed = 1;
  /// Work budget in bracket tuples: the search stops after budget / p^(d*n)
  /// pairs of the product algebra (at least 1000). The report notes when the
  /// space was not exhausted.
  std::uint64_t tuple_budget = std::uint64_t{1} << 27;
};

/// Searches all pairs of two-level ideals (A on left, B on right) for one whose
/// Cartesian product is not an ideal of the product algebra. Enumeration order
/// is fixed; the seed only shuffles the order in which pairs are visited.
CheckReport search_product_ideal_counterexample(const ProductSearchConfig& config);

}  // namespace fuzzylie
