#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "fuzzylie/field.hpp"

namespace fuzzylie {

/// A crisp subset of a finite carrier, as a membership bitmap over element indices.
class CrispSubset {
 public:
  CrispSubset() = default;
  explicit CrispSubset(std::size_t universe) : bits_(universe, false) {}

  std::size_t universe() const { return bits_.size(); }
  bool contains(Element x) const { return bits_.at(x); }
  void insert(Element x) { bits_.at(x) = true; }
  std::size_t count() const;
  bool empty() const { return count() == 0; }
  std::vector<Element> members() const;

  bool is_subset_of(const CrispSubset& other) const;

  bool operator==(const CrispSubset&) const = default;

 private:
  std::vector<bool> bits_;
};

/// A linear subspace of GF(p)^d: reduced row-echelon basis plus member bitmap.
class CrispSubspace {
 public:
  /// Span of arbitrary generators (any count, possibly dependent).
  static CrispSubspace span(PrimeField field, std::size_t dim, std::span<const FVector> generators);
  static CrispSubspace zero(PrimeField field, std::size_t dim);
  static CrispSubspace whole(PrimeField field, std::size_t dim);

  const PrimeField& field() const { return field_; }
  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<FVector>& basis() const { return basis_; }
  /// Pivot column of each basis row.
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  const CrispSubset& members() const { return members_; }
  bool contains(Element x) const { return members_.contains(x); }
  bool contains(const FVector& v) const { return members_.contains(v.index()); }

  /// The unique member of v + S whose pivot coordinates are all zero.
  FVector reduce(const FVector& v) const;
  /// Coordinates of a member in the echelon basis.
  std::vector<std::uint8_t> coordinates(const FVector& v) const;

  bool operator==(const CrispSubspace& o) const { return field_ == o.field_ && basis_ == o.basis_; }

 private:
  CrispSubspace(PrimeField field, std::size_t dim) : field_(field), ambient_dim_(dim) {}

  PrimeField field_;
  std::size_t ambient_dim_;
  std::vector<FVector> basis_;
  std::vector<std::size_t> pivots_;
  CrispSubset members_;
};

/// Returns the subset as a subspace when it is non-empty and closed under
/// addition and scalar multiplication.
std::optional<CrispSubspace> as_subspace(PrimeField field, std::size_t dim, const CrispSubset& set);

/// Increasing tuple of basis indices.
using BasisTuple = std::vector<std::size_t>;

/// A finite n-Lie algebra over GF(p), given by structure constants on strictly
/// increasing basis tuples. Skew symmetry holds by construction; the Filippov
/// identity is checked separately by validate_filippov.
class NLieAlgebra {
 public:
  NLieAlgebra(PrimeField field, std::size_t dim, std::size_t arity,
              std::map<BasisTuple, FVector> structure_constants);

  static NLieAlgebra abelian(PrimeField field, std::size_t dim, std::size_t arity);

  const PrimeField& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  std::size_t arity() const { return arity_; }
  /// Non-zero structure constants only.
  const std::map<BasisTuple, FVector>& structure_constants() const { return sc_; }
  bool is_abelian() const { return sc_.empty(); }
  /// Number of elements p^d.
  std::size_t size() const { return size_; }

  FVector vector(Element x) const { return FVector::from_index(field_, dim_, x); }
  Element element(const FVector& v) const;
  FVector zero() const { return FVector::zero(field_, dim_); }
  FVector basis(std::size_t i) const { return FVector::unit(field_, dim_, i); }

  Element add(Element x, Element y) const;
  Element sub(Element x, Element y) const;
  Element neg(Element x) const { return sub(0, x); }
  Element scale(unsigned alpha, Element x) const;

  /// Multilinear expansion of the bracket through the structure constants.
  FVector bracket(std::span<const FVector> args) const;
  /// Bracket on element indices, through the dense structure tensor.
  Element bracket(std::span<const Element> args) const;

  /// Visits every n-tuple of elements together with its bracket, in
  /// lexicographic order of element indices.
  void for_each_bracket(const std::function<void(std::span<const Element>, Element)>& visit) const;

  bool operator==(const NLieAlgebra& o) const;

 private:
  std::vector<unsigned> contract(const std::vector<unsigned>& tensor, std::size_t stride,
                                 Element x) const;
  void bracket_rec(std::size_t level, const std::vector<unsigned>& tensor, std::vector<Element>& args,
                   const std::function<void(std::span<const Element>, Element)>& visit) const;

  PrimeField field_;
  std::size_t dim_;
  std::size_t arity_;
  std::size_t size_;
  std::map<BasisTuple, FVector> sc_;
  /// tensor_[((i1*d + i2)*d + ... + in)*d + k] = k-th coordinate of [e_i1,...,e_in].
  std::vector<unsigned> tensor_;
};

using AlgebraPtr = std::shared_ptr<const NLieAlgebra>;

/// Sign of the permutation sorting `tuple`, or 0 when an index repeats.
int permutation_sign(std::span<const std::size_t> tuple);

struct FilippovViolation {
  BasisTuple xs;  ///< basis indices x1..xn
  BasisTuple ys;  ///< basis indices y2..yn
  FVector lhs;
  FVector rhs;
};

struct FilippovReport {
  std::vector<FilippovViolation> violations;
  std::size_t checks = 0;
  bool valid() const { return violations.empty(); }
};

/// Filippov identity on all basis tuples (d^(2n-1) checks).
FilippovReport validate_filippov(const NLieAlgebra& algebra);
/// Filippov identity on all element tuples; guarded to p^(d(2n-1)) <= 2^24.
FilippovReport validate_filippov_exhaustive(const NLieAlgebra& algebra);

bool is_crisp_subalgebra(const NLieAlgebra& algebra, const CrispSubspace& s);
bool is_crisp_ideal(const NLieAlgebra& algebra, const CrispSubspace& s);
/// Arbitrary subsets: must be a non-empty subspace first.
bool is_crisp_subalgebra(const NLieAlgebra& algebra, const CrispSubset& s);
bool is_crisp_ideal(const NLieAlgebra& algebra, const CrispSubset& s);

/// L1 (+) L2 with componentwise bracket. Coordinates of L1 come first, so the
/// element index of (x, y) is x + p^d1 * y.
NLieAlgebra direct_product(const NLieAlgebra& l1, const NLieAlgebra& l2);

/// A linear map between two algebras of equal arity, stored by columns.
class LinearMap {
 public:
  LinearMap(AlgebraPtr source, AlgebraPtr target, std::vector<FVector> columns);

  static LinearMap identity(AlgebraPtr algebra);
  static LinearMap zero(AlgebraPtr source, AlgebraPtr target);

  const AlgebraPtr& source() const { return source_; }
  const AlgebraPtr& target() const { return target_; }
  const std::vector<FVector>& columns() const { return columns_; }
  bool is_homomorphism() const { return is_hom_; }

  FVector apply(const FVector& v) const;
  Element apply(Element x) const;

 private:
  AlgebraPtr source_;
  AlgebraPtr target_;
  std::vector<FVector> columns_;
  bool is_hom_ = false;
};

bool is_homomorphism(const LinearMap& phi);

struct CrispQuotient {
  AlgebraPtr algebra;
  LinearMap projection;
  CrispSubspace ideal;
  /// Coordinates of L not pivots of the ideal; quotient basis vector j is e_{complement[j]} + I.
  std::vector<std::size_t> complement;

  /// Canonical representative in L of a quotient element.
  FVector lift(Element q) const;
};

/// L/I; throws std::invalid_argument when I is not an ideal.
CrispQuotient quotient_by_crisp_ideal(const AlgebraPtr& algebra, const CrispSubspace& ideal);

/// The image phi(L1) as an algebra in its own right, with its inclusion into L2.
struct ImageSubalgebra {
  AlgebraPtr algebra;
  CrispSubspace subspace;
  LinearMap inclusion;

  /// Element of `algebra` corresponding to a member of the image.
  Element element_of(const FVector& target_vector) const;
};

ImageSubalgebra image_subalgebra(const LinearMap& phi);

/// Every subspace of GF(p)^d; guarded to p^d <= 4096 and at most 2^20 subspaces.
std::vector<CrispSubspace> enumerate_subspaces(PrimeField field, std::size_t dim);
std::vector<CrispSubspace> enumerate_crisp_subalgebras(const NLieAlgebra& algebra);
std::vector<CrispSubspace> enumerate_crisp_ideals(const NLieAlgebra& algebra);

}  // namespace fuzzylie
