#include "fuzzylie/generators.hpp"

#include <algorithm>

#include "fuzzylie/random.hpp"

namespace fuzzylie {

namespace {

unsigned uniform(std::mt19937_64& rng, unsigned lo, unsigned hi) {
  return static_cast<unsigned>(uniform_between(rng, lo, hi));
}

}  // namespace

ChainGenerator::ChainGenerator(AlgebraPtr algebra, ChainKind kind, unsigned denominator)
    : algebra_(std::move(algebra)), kind_(kind), denominator_(denominator) {
  if (denominator_ == 0) throw std::invalid_argument("denominator must be positive");
  members_ = kind == ChainKind::ideal ? enumerate_crisp_ideals(*algebra_)
                                      : enumerate_crisp_subalgebras(*algebra_);
}

IFSet ChainGenerator::generate(std::size_t levels, std::mt19937_64& rng) const {
  if (levels == 0) throw std::invalid_argument("at least one level is required");
  const auto& L = *algebra_;

  // Chain from the top: chain.back() is the whole algebra.
  std::vector<const CrispSubspace*> chain;
  const CrispSubspace* current = nullptr;
  for (const auto& m : members_)
    if (m.dim() == L.dim()) current = &m;
  chain.push_back(current);
  while (chain.size() < levels) {
    std::vector<const CrispSubspace*> below;
    for (const auto& m : members_)
      if (m.dim() < current->dim() && m.members().is_subset_of(current->members())) below.push_back(&m);
    if (below.empty()) break;
    current = below[uniform(rng, 0, static_cast<unsigned>(below.size() - 1))];
    chain.push_back(current);
  }
  std::reverse(chain.begin(), chain.end());

  // mu_1 >= mu_2 >= ... > 0 and lambda_1 <= lambda_2 <= ... with mu_j + lambda_j <= 1.
  const unsigned D = denominator_;
  std::vector<unsigned> mus(chain.size());
  for (auto& m : mus) m = uniform(rng, 1, D);
  std::sort(mus.rbegin(), mus.rend());
  std::vector<unsigned> lambdas(chain.size());
  unsigned prev = 0;
  for (std::size_t j = 0; j < chain.size(); ++j) {
    lambdas[j] = uniform(rng, prev, D - mus[j]);
    prev = lambdas[j];
  }

  std::vector<Degree> mu(L.size()), lambda(L.size());
  for (Element x = 0; x < L.size(); ++x) {
    std::size_t j = 0;
    while (!chain[j]->contains(x)) ++j;
    mu[x] = Degree(mus[j], D);
    lambda[x] = Degree(lambdas[j], D);
  }
  return IFSet(algebra_, std::move(mu), std::move(lambda));
}

IFSet ChainGenerator::generate(std::size_t levels, std::uint64_t seed) const {
  std::mt19937_64 rng(seed);
  return generate(levels, rng);
}

IFSet random_if_subalgebra(const AlgebraPtr& algebra, std::size_t levels, std::uint64_t seed) {
  return ChainGenerator(algebra, ChainKind::subalgebra).generate(levels, seed);
}

IFSet random_if_ideal(const AlgebraPtr& algebra, std::size_t levels, std::uint64_t seed) {
  return ChainGenerator(algebra, ChainKind::ideal).generate(levels, seed);
}

IFSet random_ifset(const AlgebraPtr& algebra, std::mt19937_64& rng, unsigned denominator) {
  std::vector<Degree> mu(algebra->size()), lambda(algebra->size());
  for (Element x = 0; x < algebra->size(); ++x) {
    const unsigned m = uniform(rng, 0, denominator);
    mu[x] = Degree(m, denominator);
    lambda[x] = Degree(uniform(rng, 0, denominator - m), denominator);
  }
  return IFSet(algebra, std::move(mu), std::move(lambda));
}

IFSet corrupt(const IFSet& a, Element x) {
  if (x == 0) throw std::invalid_argument("corruption needs a non-zero element");
  auto mu = a.mu_table();
  auto lambda = a.lambda_table();
  mu.at(x) = Degree::one();
  lambda.at(x) = Degree::zero();
  mu.at(0) = Degree::zero();
  lambda.at(0) = Degree::one();
  return IFSet(a.carrier(), std::move(mu), std::move(lambda));
}

}  // namespace fuzzylie
