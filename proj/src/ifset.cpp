#include "fuzzylie/ifset.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>

namespace fuzzylie {

namespace {

using Wide = __int128;

void require_same_carrier(const IFSet& a, const IFSet& b) {
  if (!same_carrier(a, b)) throw std::invalid_argument("fuzzy sets live on different carriers");
}

}  // namespace

Degree::Degree(std::int64_t num, std::int64_t den) {
  if (den <= 0) throw std::invalid_argument("degree denominator must be positive");
  if (num < 0 || num > den)
    throw std::invalid_argument("degree " + std::to_string(num) + "/" + std::to_string(den) +
                                " is outside [0, 1]");
  const auto g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Degree Degree::parse(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
      throw std::invalid_argument("malformed degree '" + std::string(text) + "'");
    return v;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Degree(parse_int(text), 1);
  return Degree(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::strong_ordering Degree::operator<=>(const Degree& o) const {
  const Wide lhs = static_cast<Wide>(num_) * o.den_;
  const Wide rhs = static_cast<Wide>(o.num_) * den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string to_string(const Degree& d) {
  if (d.den() == 1) return std::to_string(d.num());
  return std::to_string(d.num()) + "/" + std::to_string(d.den());
}

bool sum_at_most_one(const Degree& a, const Degree& b) {
  return static_cast<Wide>(a.num()) * b.den() + static_cast<Wide>(b.num()) * a.den() <=
         static_cast<Wide>(a.den()) * b.den();
}

IFSet::IFSet(AlgebraPtr carrier, std::vector<Degree> mu, std::vector<Degree> lambda)
    : carrier_(std::move(carrier)), mu_(std::move(mu)), lambda_(std::move(lambda)) {
  if (!carrier_) throw std::invalid_argument("fuzzy set needs a carrier");
  if (mu_.size() != carrier_->size() || lambda_.size() != carrier_->size())
    throw std::invalid_argument("membership tables must cover all " +
                                std::to_string(carrier_->size()) + " elements");
  for (std::size_t x = 0; x < mu_.size(); ++x)
    if (!sum_at_most_one(mu_[x], lambda_[x]))
      throw InvariantError("element " + std::to_string(x) + ": mu + lambda = " + to_string(mu_[x]) +
                               " + " + to_string(lambda_[x]) + " exceeds 1",
                           static_cast<Element>(x));
}

IFSet IFSet::constant(AlgebraPtr carrier, Degree mu, Degree lambda) {
  const auto n = carrier->size();
  return IFSet(std::move(carrier), std::vector<Degree>(n, mu), std::vector<Degree>(n, lambda));
}

IFSet IFSet::characteristic(AlgebraPtr carrier, const CrispSubset& subset) {
  const auto n = carrier->size();
  if (subset.universe() != n) throw std::invalid_argument("subset does not match carrier size");
  std::vector<Degree> mu(n), lambda(n);
  for (std::size_t x = 0; x < n; ++x) {
    const bool in = subset.contains(static_cast<Element>(x));
    mu[x] = in ? Degree::one() : Degree::zero();
    lambda[x] = in ? Degree::zero() : Degree::one();
  }
  return IFSet(std::move(carrier), std::move(mu), std::move(lambda));
}

bool same_carrier(const IFSet& a, const IFSet& b) {
  return a.carrier() == b.carrier() || *a.carrier() == *b.carrier();
}

bool IFSet::operator==(const IFSet& o) const {
  return same_carrier(*this, o) && mu_ == o.mu_ && lambda_ == o.lambda_;
}

IFSet if_complement(const IFSet& a) { return IFSet(a.carrier(), a.lambda_table(), a.mu_table()); }

bool if_subset(const IFSet& a, const IFSet& b) {
  require_same_carrier(a, b);
  for (Element x = 0; x < a.size(); ++x)
    if (a.mu(x) > b.mu(x) || a.lambda(x) < b.lambda(x)) return false;
  return true;
}

IFSet if_intersect(const IFSet& a, const IFSet& b) {
  const IFSet family[] = {a, b};
  return if_intersect_family(family);
}

IFSet if_union(const IFSet& a, const IFSet& b) {
  require_same_carrier(a, b);
  std::vector<Degree> mu(a.size()), lambda(a.size());
  for (Element x = 0; x < a.size(); ++x) {
    mu[x] = degree_max(a.mu(x), b.mu(x));
    lambda[x] = degree_min(a.lambda(x), b.lambda(x));
  }
  return IFSet(a.carrier(), std::move(mu), std::move(lambda));
}

IFSet if_box(const IFSet& a) {
  std::vector<Degree> lambda(a.size());
  for (Element x = 0; x < a.size(); ++x) lambda[x] = a.mu(x).complement();
  return IFSet(a.carrier(), a.mu_table(), std::move(lambda));
}

IFSet if_diamond(const IFSet& a) {
  std::vector<Degree> mu(a.size());
  for (Element x = 0; x < a.size(); ++x) mu[x] = a.lambda(x).complement();
  return IFSet(a.carrier(), std::move(mu), a.lambda_table());
}

IFSet if_intersect_family(std::span<const IFSet> family) {
  if (family.empty()) throw std::invalid_argument("intersection of an empty family");
  std::vector<Degree> mu = family[0].mu_table(), lambda = family[0].lambda_table();
  for (const auto& s : family.subspan(1)) {
    require_same_carrier(family[0], s);
    for (Element x = 0; x < mu.size(); ++x) {
      mu[x] = degree_min(mu[x], s.mu(x));
      lambda[x] = degree_max(lambda[x], s.lambda(x));
    }
  }
  return IFSet(family[0].carrier(), std::move(mu), std::move(lambda));
}

CrispSubset level_cut(const IFSet& a, const Degree& s, const Degree& t, CutKind kind) {
  CrispSubset out(a.size());
  for (Element x = 0; x < a.size(); ++x) {
    const bool mu_ok = kind.strict_mu ? a.mu(x) > s : a.mu(x) >= s;
    const bool lambda_ok = kind.strict_lambda ? a.lambda(x) < t : a.lambda(x) <= t;
    if (mu_ok && lambda_ok) out.insert(x);
  }
  return out;
}

std::vector<std::pair<Degree, Degree>> threshold_grid(const IFSet& a) {
  std::set<Degree> mus{Degree::zero(), Degree::one()};
  std::set<Degree> lambdas{Degree::zero(), Degree::one()};
  mus.insert(a.mu_table().begin(), a.mu_table().end());
  lambdas.insert(a.lambda_table().begin(), a.lambda_table().end());
  std::vector<std::pair<Degree, Degree>> grid;
  for (const auto& s : mus)
    for (const auto& t : lambdas) grid.emplace_back(s, t);
  return grid;
}

Degree uncertainty(const IFSet& a, Element x) {
  const Degree& m = a.mu(x);
  const Degree& l = a.lambda(x);
  const Wide den = static_cast<Wide>(m.den()) * l.den();
  Wide num = den - static_cast<Wide>(m.num()) * l.den() - static_cast<Wide>(l.num()) * m.den();
  Wide g = num;
  Wide b = den;
  while (b != 0) {
    const Wide r = g % b;
    g = b;
    b = r;
  }
  if (g == 0) g = 1;
  return Degree(static_cast<std::int64_t>(num / g), static_cast<std::int64_t>(den / g));
}

}  // namespace fuzzylie
