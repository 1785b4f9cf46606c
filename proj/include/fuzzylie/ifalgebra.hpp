#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fuzzylie/algebra.hpp"
#include "fuzzylie/ifset.hpp"

namespace fuzzylie {

/// Strongest structure a fuzzy set was shown to have. Ordered: ideal implies subalgebra
/// implies subspace.
enum class IFKind { none, subspace, subalgebra, ideal };

std::string to_string(IFKind kind);

/// One failed inequality. `witness` holds element indices, except for the
/// scalar conditions where it is (x, alpha).
struct Violation {
  std::string condition;
  std::vector<Element> witness;
};

struct IFAlgebraWitness {
  IFKind kind = IFKind::none;
  std::vector<Violation> violations;
  /// True when the checked property holds.
  bool holds() const { return violations.empty(); }
};

struct CheckOptions {
  std::size_t max_violations = 8;
  /// Exhaustive checks refuse to run beyond this many tuples.
  std::uint64_t tuple_guard = std::uint64_t{1} << 24;
  /// When set, tuple sets beyond the guard are sampled with this seed instead.
  std::optional<std::uint64_t> sample_seed;
  std::size_t samples = 200000;
};

/// Conditions on x + y and alpha * x, exhaustive over all pairs.
IFAlgebraWitness is_if_subspace(const NLieAlgebra& L, const IFSet& a, const CheckOptions& opts = {});
/// Subspace conditions plus mu([x1..xn]) >= min mu(xi), lambda([x1..xn]) <= max lambda(xi).
IFAlgebraWitness is_if_subalgebra(const NLieAlgebra& L, const IFSet& a, const CheckOptions& opts = {});
/// Subspace conditions plus mu([x1..xn]) >= max mu(xi), lambda([x1..xn]) <= min lambda(xi).
IFAlgebraWitness is_if_ideal(const NLieAlgebra& L, const IFSet& a, const CheckOptions& opts = {});

inline IFAlgebraWitness is_if_subalgebra(const IFSet& a) { return is_if_subalgebra(*a.carrier(), a); }
inline IFAlgebraWitness is_if_ideal(const IFSet& a) { return is_if_ideal(*a.carrier(), a); }

/// mu(x) = max over x = a + b of mu_A(a) ∧ mu_B(b); lambda(x) = min of lambda_A(a) ∨ lambda_B(b).
IFSet if_sum(const NLieAlgebra& L, const IFSet& a, const IFSet& b);

/// A × B on the direct product algebra: (x, y) -> (mu_A(x) ∧ mu_B(y), lambda_A(x) ∨ lambda_B(y)).
IFSet if_cartesian_product(const IFSet& a, const IFSet& b);
/// Same, on a caller-supplied product algebra (must equal direct_product of the carriers).
IFSet if_cartesian_product(const IFSet& a, const IFSet& b, AlgebraPtr product);

/// Image of A under a homomorphism, as a fuzzy set on the image subalgebra.
IFSet if_image(const LinearMap& phi, const IFSet& a);
/// Same, on a precomputed image subalgebra of phi.
IFSet if_image(const LinearMap& phi, const IFSet& a, const ImageSubalgebra& image);
IFSet if_preimage(const LinearMap& phi, const IFSet& b);

/// x + A: y -> (mu(y - x), lambda(y - x)). Requires A to be an ideal.
IFSet coset(const NLieAlgebra& L, const IFSet& a, const FVector& x);
/// mu(x - y) = mu(0) and lambda(x - y) = lambda(0).
bool cosets_equal(const NLieAlgebra& L, const IFSet& a, const FVector& x, const FVector& y);
/// {x : mu(x) = mu(0), lambda(x) = lambda(0)} as a crisp ideal.
CrispSubspace kernel_ideal(const NLieAlgebra& L, const IFSet& a);

struct CosetLabel {
  FVector representative;  ///< canonical member of the kernel-ideal coset
  Element quotient_element;

  bool operator==(const CosetLabel&) const = default;
};

/// L/A realized as L/kernel_ideal(A), with the coset operations on arbitrary
/// representatives.
class IFQuotient {
 public:
  IFQuotient(AlgebraPtr algebra, IFSet ideal);

  const AlgebraPtr& algebra() const { return quotient_.algebra; }
  const LinearMap& projection() const { return quotient_.projection; }
  const CrispSubspace& kernel() const { return quotient_.ideal; }
  const IFSet& ideal() const { return ideal_; }
  /// labels()[q] describes quotient element q.
  const std::vector<CosetLabel>& labels() const { return labels_; }

  CosetLabel label_of(const FVector& x) const;
  /// (x + A) + (y + A) = (x + y) + A
  CosetLabel add(const FVector& x, const FVector& y) const;
  /// alpha (x + A) = alpha x + A
  CosetLabel scale(const Scalar& alpha, const FVector& x) const;
  /// [x1 + A, ..., xn + A] = [x1, ..., xn] + A
  CosetLabel bracket(std::span<const FVector> xs) const;

 private:
  AlgebraPtr source_;
  IFSet ideal_;
  CrispQuotient quotient_;
  std::vector<CosetLabel> labels_;
};

IFQuotient quotient_if(const AlgebraPtr& L, const IFSet& a);

}  // namespace fuzzylie
