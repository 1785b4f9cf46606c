#pragma once

#include <memory>

#include "fuzzylie/algebra.hpp"

namespace fixtures {

using namespace fuzzylie;

/// 2-dim non-abelian Lie algebra: [e0, e1] = e0.
inline AlgebraPtr f2(unsigned p = 3) {
  PrimeField f(p);
  return std::make_shared<const NLieAlgebra>(f, 2, 2,
                                             std::map<BasisTuple, FVector>{{{0, 1}, FVector::unit(f, 2, 0)}});
}

/// 3-dim Heisenberg algebra: [e0, e1] = e2.
inline AlgebraPtr heisenberg(unsigned p = 2) {
  PrimeField f(p);
  return std::make_shared<const NLieAlgebra>(f, 3, 2,
                                             std::map<BasisTuple, FVector>{{{0, 1}, FVector::unit(f, 3, 2)}});
}

inline AlgebraPtr abelian(unsigned p, std::size_t d, std::size_t n = 2) {
  return std::make_shared<const NLieAlgebra>(NLieAlgebra::abelian(PrimeField(p), d, n));
}

inline FVector vec(unsigned p, std::initializer_list<unsigned> coords) {
  std::vector<std::uint8_t> c;
  for (auto v : coords) c.push_back(static_cast<std::uint8_t>(v));
  return FVector(PrimeField(p), std::move(c));
}

}  // namespace fixtures
