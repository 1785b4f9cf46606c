#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "fuzzylie/algebra.hpp"
#include "fuzzylie/ifset.hpp"

namespace fuzzylie {

enum class ChainKind { subalgebra, ideal };

/// Builds fuzzy subalgebras (or ideals) from random chains
/// S_1 ⊂ S_2 ⊂ ... ⊂ S_k = L of crisp subalgebras (ideals): elements first
/// appearing in S_j get mu_j, lambda_j with mu non-increasing and lambda
/// non-decreasing along the chain. Every level cut is then one of the S_j, so
/// the result always satisfies the corresponding fuzzy predicate.
class ChainGenerator {
 public:
  ChainGenerator(AlgebraPtr algebra, ChainKind kind, unsigned denominator = 12);

  const AlgebraPtr& algebra() const { return algebra_; }
  ChainKind kind() const { return kind_; }
  /// The crisp subalgebras (ideals) chains are drawn from.
  const std::vector<CrispSubspace>& members() const { return members_; }

  /// At most `levels` distinct chain members; fewer when no proper member is left.
  IFSet generate(std::size_t levels, std::mt19937_64& rng) const;
  IFSet generate(std::size_t levels, std::uint64_t seed) const;

 private:
  AlgebraPtr algebra_;
  ChainKind kind_;
  unsigned denominator_;
  std::vector<CrispSubspace> members_;
};

IFSet random_if_subalgebra(const AlgebraPtr& algebra, std::size_t levels, std::uint64_t seed);
IFSet random_if_ideal(const AlgebraPtr& algebra, std::size_t levels, std::uint64_t seed);

/// Arbitrary membership tables with denominators dividing `denominator`.
IFSet random_ifset(const AlgebraPtr& algebra, std::mt19937_64& rng, unsigned denominator = 4);

/// Sets (mu, lambda) to (0, 1) at zero and (1, 0) at x, so mu(0 * x) < mu(x).
/// The result is never a fuzzy subspace when x != 0.
IFSet corrupt(const IFSet& a, Element x);

}  // namespace fuzzylie
