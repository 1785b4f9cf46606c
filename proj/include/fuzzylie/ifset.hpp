#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzylie/algebra.hpp"

namespace fuzzylie {

/// Exact rational membership degree in [0, 1], always in lowest terms.
class Degree {
 public:
  constexpr Degree() = default;
  Degree(std::int64_t num, std::int64_t den);

  static Degree zero() { return Degree(); }
  static Degree one() { return Degree(1, 1); }
  /// Parses "num/den" or "num"; no decimals.
  static Degree parse(std::string_view text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  /// 1 - x
  Degree complement() const { return Degree(den_ - num_, den_); }

  bool operator==(const Degree&) const = default;
  std::strong_ordering operator<=>(const Degree& o) const;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::string to_string(const Degree& d);
inline Degree degree_min(const Degree& a, const Degree& b) { return b < a ? b : a; }
inline Degree degree_max(const Degree& a, const Degree& b) { return a < b ? b : a; }
inline std::strong_ordering degree_cmp(const Degree& a, const Degree& b) { return a <=> b; }
/// True when a + b <= 1.
bool sum_at_most_one(const Degree& a, const Degree& b);

/// Thrown when membership tables break mu + lambda <= 1.
class InvariantError : public std::invalid_argument {
 public:
  InvariantError(const std::string& what, Element element)
      : std::invalid_argument(what), element_(element) {}
  Element element() const { return element_; }

 private:
  Element element_;
};

/// An intuitionistic fuzzy set on the elements of an algebra.
class IFSet {
 public:
  IFSet(AlgebraPtr carrier, std::vector<Degree> mu, std::vector<Degree> lambda);

  static IFSet constant(AlgebraPtr carrier, Degree mu, Degree lambda);
  /// mu = 1, lambda = 0 on the subset; mu = 0, lambda = 1 elsewhere.
  static IFSet characteristic(AlgebraPtr carrier, const CrispSubset& subset);

  const AlgebraPtr& carrier() const { return carrier_; }
  std::size_t size() const { return mu_.size(); }
  const Degree& mu(Element x) const { return mu_.at(x); }
  const Degree& lambda(Element x) const { return lambda_.at(x); }
  const std::vector<Degree>& mu_table() const { return mu_; }
  const std::vector<Degree>& lambda_table() const { return lambda_; }

  /// Same carrier algebra and identical tables.
  bool operator==(const IFSet& o) const;

 private:
  AlgebraPtr carrier_;
  std::vector<Degree> mu_;
  std::vector<Degree> lambda_;
};

bool same_carrier(const IFSet& a, const IFSet& b);

IFSet if_complement(const IFSet& a);
bool if_subset(const IFSet& a, const IFSet& b);
IFSet if_intersect(const IFSet& a, const IFSet& b);
IFSet if_union(const IFSet& a, const IFSet& b);
/// (mu, 1 - mu)
IFSet if_box(const IFSet& a);
/// (1 - lambda, lambda)
IFSet if_diamond(const IFSet& a);
/// Pointwise min of mu and max of lambda over a non-empty finite family.
IFSet if_intersect_family(std::span<const IFSet> family);

struct CutKind {
  bool strict_mu = false;      ///< mu > s instead of mu >= s
  bool strict_lambda = false;  ///< lambda < t instead of lambda <= t
};

/// {x : mu(x) >= s (or > s), lambda(x) <= t (or < t)}
CrispSubset level_cut(const IFSet& a, const Degree& s, const Degree& t, CutKind kind = {});
inline CrispSubset upper_cut(const IFSet& a, const Degree& s) { return level_cut(a, s, Degree::one()); }
inline CrispSubset lower_cut(const IFSet& a, const Degree& t) { return level_cut(a, Degree::zero(), t); }

/// Sorted pairs (s, t) with s in {distinct mu values, 0, 1} and t in
/// {distinct lambda values, 0, 1}. Every level cut of `a` equals a cut taken
/// at one of these pairs with the same strictness.
std::vector<std::pair<Degree, Degree>> threshold_grid(const IFSet& a);

/// 1 - mu(x) - lambda(x)
Degree uncertainty(const IFSet& a, Element x);

}  // namespace fuzzylie
