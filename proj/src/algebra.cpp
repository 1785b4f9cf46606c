#include "fuzzylie/algebra.hpp"

#include <algorithm>
#include <numeric>

namespace fuzzylie {

namespace {

constexpr std::uint64_t kMaxElements = std::uint64_t{1} << 22;
constexpr std::uint64_t kMaxTensor = std::uint64_t{1} << 22;

/// Advances an odometer over [0, base)^len; returns false after the last tuple.
bool next_tuple(std::vector<std::size_t>& t, std::size_t base) {
  for (std::size_t i = t.size(); i-- > 0;) {
    if (++t[i] < base) return true;
    t[i] = 0;
  }
  return false;
}

/// Advances a strictly increasing tuple over [0, base); returns false after the last.
bool next_combination(std::vector<std::size_t>& t, std::size_t base) {
  const std::size_t k = t.size();
  for (std::size_t i = k; i-- > 0;) {
    if (t[i] < base - k + i) {
      ++t[i];
      for (std::size_t j = i + 1; j < k; ++j) t[j] = t[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<std::size_t> first_combination(std::size_t k) {
  std::vector<std::size_t> t(k);
  std::iota(t.begin(), t.end(), std::size_t{0});
  return t;
}

FVector embed(const FVector& v, std::size_t offset, std::size_t dim) {
  std::vector<std::uint8_t> c(dim, 0);
  for (std::size_t i = 0; i < v.dim(); ++i) c[offset + i] = static_cast<std::uint8_t>(v[i]);
  return FVector(v.field(), std::move(c));
}

}  // namespace

// ---------------------------------------------------------------------------
// CrispSubset

std::size_t CrispSubset::count() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

std::vector<Element> CrispSubset::members() const {
  std::vector<Element> out;
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i]) out.push_back(static_cast<Element>(i));
  return out;
}

bool CrispSubset::is_subset_of(const CrispSubset& other) const {
  if (universe() != other.universe()) throw std::invalid_argument("subset universe mismatch");
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i] && !other.bits_[i]) return false;
  return true;
}

// ---------------------------------------------------------------------------
// CrispSubspace

CrispSubspace CrispSubspace::span(PrimeField field, std::size_t dim,
                                  std::span<const FVector> generators) {
  CrispSubspace s(field, dim);
  std::vector<std::vector<unsigned>> rows;
  for (const auto& g : generators) {
    if (!(g.field() == field) || g.dim() != dim)
      throw std::invalid_argument("generator does not belong to GF(p)^d");
    rows.emplace_back(g.coords().begin(), g.coords().end());
  }

  // Gauss-Jordan to reduced row-echelon form.
  std::size_t rank = 0;
  for (std::size_t col = 0; col < dim && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const unsigned inv = field.inv(rows[rank][col]);
    for (auto& v : rows[rank]) v = field.mul(v, inv);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const unsigned f = rows[r][col];
      for (std::size_t c = 0; c < dim; ++c)
        rows[r][c] = field.sub(rows[r][c], field.mul(f, rows[rank][c]));
    }
    s.pivots_.push_back(col);
    ++rank;
  }
  for (std::size_t r = 0; r < rank; ++r)
    s.basis_.emplace_back(field, std::vector<std::uint8_t>(rows[r].begin(), rows[r].end()));

  const auto total = checked_power(field.p(), dim, kMaxElements);
  s.members_ = CrispSubset(static_cast<std::size_t>(total));
  std::vector<std::size_t> coeffs(rank, 0);
  do {
    FVector v = FVector::zero(field, dim);
    for (std::size_t r = 0; r < rank; ++r)
      if (coeffs[r]) v = v + Scalar(field, static_cast<unsigned>(coeffs[r])) * s.basis_[r];
    s.members_.insert(v.index());
  } while (next_tuple(coeffs, field.p()));
  return s;
}

CrispSubspace CrispSubspace::zero(PrimeField field, std::size_t dim) {
  return span(field, dim, std::span<const FVector>{});
}

CrispSubspace CrispSubspace::whole(PrimeField field, std::size_t dim) {
  std::vector<FVector> gens;
  for (std::size_t i = 0; i < dim; ++i) gens.push_back(FVector::unit(field, dim, i));
  return span(field, dim, gens);
}

FVector CrispSubspace::reduce(const FVector& v) const {
  FVector out = v;
  for (std::size_t r = 0; r < basis_.size(); ++r) {
    const unsigned c = out[pivots_[r]];
    if (c) out = out - Scalar(field_, c) * basis_[r];
  }
  return out;
}

std::vector<std::uint8_t> CrispSubspace::coordinates(const FVector& v) const {
  if (!contains(v)) throw std::invalid_argument("vector " + to_string(v) + " is not in the subspace");
  std::vector<std::uint8_t> c;
  for (auto piv : pivots_) c.push_back(static_cast<std::uint8_t>(v[piv]));
  return c;
}

std::optional<CrispSubspace> as_subspace(PrimeField field, std::size_t dim, const CrispSubset& set) {
  if (set.empty()) return std::nullopt;
  std::vector<FVector> gens;
  for (auto x : set.members()) gens.push_back(FVector::from_index(field, dim, x));
  auto s = CrispSubspace::span(field, dim, gens);
  if (s.members().count() != set.count()) return std::nullopt;
  return s;
}

// ---------------------------------------------------------------------------
// NLieAlgebra

int permutation_sign(std::span<const std::size_t> tuple) {
  int sign = 1;
  for (std::size_t i = 0; i < tuple.size(); ++i)
    for (std::size_t j = i + 1; j < tuple.size(); ++j) {
      if (tuple[i] == tuple[j]) return 0;
      if (tuple[i] > tuple[j]) sign = -sign;
    }
  return sign;
}

NLieAlgebra::NLieAlgebra(PrimeField field, std::size_t dim, std::size_t arity,
                         std::map<BasisTuple, FVector> structure_constants)
    : field_(field), dim_(dim), arity_(arity) {
  if (arity < 2) throw std::invalid_argument("arity must be at least 2");
  size_ = static_cast<std::size_t>(checked_power(field.p(), dim, kMaxElements));
  for (auto& [key, value] : structure_constants) {
    if (key.size() != arity)
      throw std::invalid_argument("structure constant key has wrong length");
    for (std::size_t i = 0; i < key.size(); ++i) {
      if (key[i] >= dim) throw std::invalid_argument("structure constant index out of range");
      if (i && key[i] <= key[i - 1])
        throw std::invalid_argument("structure constant key must be strictly increasing");
    }
    if (!(value.field() == field) || value.dim() != dim)
      throw std::invalid_argument("structure constant value has wrong field or dimension");
    if (!value.is_zero()) sc_.emplace(key, value);
  }

  if (sc_.empty()) return;
  std::uint64_t cells = dim;
  for (std::size_t i = 0; i < arity; ++i) {
    cells *= dim;
    if (cells > kMaxTensor) throw GuardExceeded("structure tensor too large");
  }
  tensor_.assign(static_cast<std::size_t>(cells), 0);
  std::vector<std::size_t> idx(arity, 0), sorted(arity);
  std::size_t flat = 0;
  do {
    const int sign = permutation_sign(idx);
    if (sign != 0) {
      sorted = idx;
      std::sort(sorted.begin(), sorted.end());
      auto it = sc_.find(sorted);
      if (it != sc_.end())
        for (std::size_t k = 0; k < dim; ++k)
          tensor_[flat * dim + k] = sign > 0 ? it->second[k] : field.neg(it->second[k]);
    }
    ++flat;
  } while (next_tuple(idx, dim));
}

NLieAlgebra NLieAlgebra::abelian(PrimeField field, std::size_t dim, std::size_t arity) {
  return NLieAlgebra(field, dim, arity, {});
}

bool NLieAlgebra::operator==(const NLieAlgebra& o) const {
  return field_ == o.field_ && dim_ == o.dim_ && arity_ == o.arity_ && sc_ == o.sc_;
}

Element NLieAlgebra::element(const FVector& v) const {
  if (!(v.field() == field_) || v.dim() != dim_)
    throw std::invalid_argument("vector " + to_string(v) + " does not belong to the algebra");
  return v.index();
}

Element NLieAlgebra::add(Element x, Element y) const {
  const unsigned p = field_.p();
  Element out = 0, place = 1;
  for (std::size_t i = 0; i < dim_; ++i) {
    out += place * ((x % p + y % p) % p);
    x /= p;
    y /= p;
    place *= p;
  }
  return out;
}

Element NLieAlgebra::sub(Element x, Element y) const {
  const unsigned p = field_.p();
  Element out = 0, place = 1;
  for (std::size_t i = 0; i < dim_; ++i) {
    out += place * ((x % p + p - y % p) % p);
    x /= p;
    y /= p;
    place *= p;
  }
  return out;
}

Element NLieAlgebra::scale(unsigned alpha, Element x) const {
  const unsigned p = field_.p();
  alpha %= p;
  Element out = 0, place = 1;
  for (std::size_t i = 0; i < dim_; ++i) {
    out += place * ((alpha * (x % p)) % p);
    x /= p;
    place *= p;
  }
  return out;
}

FVector NLieAlgebra::bracket(std::span<const FVector> args) const {
  if (args.size() != arity_)
    throw std::invalid_argument("bracket expects " + std::to_string(arity_) + " arguments, got " +
                                std::to_string(args.size()));
  for (const auto& a : args)
    if (!(a.field() == field_) || a.dim() != dim_)
      throw std::invalid_argument("bracket argument " + to_string(a) + " is not in the algebra");

  std::vector<unsigned> acc(dim_, 0);
  if (sc_.empty()) return zero();
  std::vector<std::size_t> idx(arity_), sorted(arity_);
  // Expand each argument over its non-zero coordinates.
  std::function<void(std::size_t, unsigned)> expand = [&](std::size_t pos, unsigned coef) {
    if (pos == arity_) {
      const int sign = permutation_sign(idx);
      if (sign == 0) return;
      sorted = idx;
      std::sort(sorted.begin(), sorted.end());
      auto it = sc_.find(sorted);
      if (it == sc_.end()) return;
      const unsigned c = sign > 0 ? coef : field_.neg(coef);
      for (std::size_t k = 0; k < dim_; ++k) acc[k] = field_.add(acc[k], field_.mul(c, it->second[k]));
      return;
    }
    for (std::size_t i = 0; i < dim_; ++i) {
      const unsigned a = args[pos][i];
      if (a == 0) continue;
      idx[pos] = i;
      expand(pos + 1, field_.mul(coef, a));
    }
  };
  expand(0, 1);
  return FVector(field_, std::vector<std::uint8_t>(acc.begin(), acc.end()));
}

std::vector<unsigned> NLieAlgebra::contract(const std::vector<unsigned>& tensor, std::size_t stride,
                                            Element x) const {
  std::vector<unsigned> out(stride, 0);
  const unsigned p = field_.p();
  for (std::size_t i = 0; i < dim_; ++i) {
    const unsigned c = x % p;
    x /= p;
    if (c == 0) continue;
    const unsigned* row = tensor.data() + i * stride;
    for (std::size_t j = 0; j < stride; ++j) out[j] += c * row[j];
  }
  for (auto& v : out) v %= p;
  return out;
}

Element NLieAlgebra::bracket(std::span<const Element> args) const {
  if (args.size() != arity_) throw std::invalid_argument("bracket arity mismatch");
  if (tensor_.empty()) return 0;
  std::vector<unsigned> t = tensor_;
  std::size_t stride = t.size();
  for (auto x : args) {
    if (x >= size_) throw std::out_of_range("element index out of range");
    stride /= dim_;
    t = contract(t, stride, x);
  }
  Element out = 0;
  for (std::size_t k = dim_; k-- > 0;) out = out * field_.p() + t[k];
  return out;
}

void NLieAlgebra::bracket_rec(std::size_t level, const std::vector<unsigned>& tensor,
                              std::vector<Element>& args,
                              const std::function<void(std::span<const Element>, Element)>& visit) const {
  if (level == arity_) {
    Element out = 0;
    if (!tensor.empty())
      for (std::size_t k = dim_; k-- > 0;) out = out * field_.p() + tensor[k];
    visit(args, out);
    return;
  }
  const std::size_t stride = tensor.empty() ? 0 : tensor.size() / dim_;
  for (Element x = 0; x < size_; ++x) {
    args[level] = x;
    if (tensor.empty())
      bracket_rec(level + 1, tensor, args, visit);
    else
      bracket_rec(level + 1, contract(tensor, stride, x), args, visit);
  }
}

void NLieAlgebra::for_each_bracket(
    const std::function<void(std::span<const Element>, Element)>& visit) const {
  std::vector<Element> args(arity_, 0);
  bracket_rec(0, tensor_, args, visit);
}

// ---------------------------------------------------------------------------
// Filippov identity

FilippovReport validate_filippov(const NLieAlgebra& L) {
  FilippovReport report;
  const std::size_t n = L.arity(), d = L.dim();
  if (d == 0 || L.is_abelian()) return report;
  std::vector<FVector> basis;
  for (std::size_t i = 0; i < d; ++i) basis.push_back(L.basis(i));

  std::vector<std::size_t> xs(n, 0);
  do {
    std::vector<FVector> xargs;
    for (auto i : xs) xargs.push_back(basis[i]);
    const FVector inner = L.bracket(xargs);
    std::vector<std::size_t> ys(n - 1, 0);
    do {
      std::vector<FVector> yargs{inner};
      for (auto j : ys) yargs.push_back(basis[j]);
      const FVector lhs = L.bracket(yargs);

      FVector rhs = L.zero();
      for (std::size_t i = 0; i < n; ++i) {
        std::vector<FVector> inner_args{xargs[i]};
        for (auto j : ys) inner_args.push_back(basis[j]);
        std::vector<FVector> outer = xargs;
        outer[i] = L.bracket(inner_args);
        rhs = rhs + L.bracket(outer);
      }
      ++report.checks;
      if (!(lhs == rhs)) report.violations.push_back({xs, ys, lhs, rhs});
    } while (next_tuple(ys, d));
  } while (next_tuple(xs, d));
  return report;
}

FilippovReport validate_filippov_exhaustive(const NLieAlgebra& L) {
  FilippovReport report;
  const std::size_t n = L.arity();
  checked_power(static_cast<unsigned>(L.size()), 2 * n - 1, std::uint64_t{1} << 24);

  std::vector<std::size_t> xs(n, 0);
  std::vector<Element> xe(n), args(n);
  do {
    for (std::size_t i = 0; i < n; ++i) xe[i] = static_cast<Element>(xs[i]);
    const Element inner = L.bracket(xe);
    std::vector<std::size_t> ys(n - 1, 0);
    do {
      args[0] = inner;
      for (std::size_t j = 1; j < n; ++j) args[j] = static_cast<Element>(ys[j - 1]);
      const Element lhs = L.bracket(args);
      Element rhs = 0;
      for (std::size_t i = 0; i < n; ++i) {
        args[0] = xe[i];
        for (std::size_t j = 1; j < n; ++j) args[j] = static_cast<Element>(ys[j - 1]);
        std::vector<Element> outer = xe;
        outer[i] = L.bracket(args);
        rhs = L.add(rhs, L.bracket(outer));
      }
      ++report.checks;
      if (lhs != rhs)
        report.violations.push_back({xs, ys, L.vector(lhs), L.vector(rhs)});
    } while (next_tuple(ys, L.size()));
  } while (next_tuple(xs, L.size()));
  return report;
}

// ---------------------------------------------------------------------------
// Crisp subalgebras and ideals

bool is_crisp_subalgebra(const NLieAlgebra& L, const CrispSubspace& s) {
  const std::size_t n = L.arity(), k = s.dim();
  if (k < n || L.is_abelian()) return true;
  auto t = first_combination(n);
  std::vector<FVector> args;
  do {
    args.clear();
    for (auto i : t) args.push_back(s.basis()[i]);
    if (!s.contains(L.bracket(args))) return false;
  } while (next_combination(t, k));
  return true;
}

bool is_crisp_ideal(const NLieAlgebra& L, const CrispSubspace& s) {
  const std::size_t n = L.arity(), d = L.dim();
  if (s.dim() == 0 || L.is_abelian() || d < n - 1) return true;
  std::vector<FVector> args;
  for (const auto& b : s.basis()) {
    auto t = first_combination(n - 1);
    do {
      args.assign(1, b);
      for (auto i : t) args.push_back(L.basis(i));
      if (!s.contains(L.bracket(args))) return false;
    } while (next_combination(t, d));
  }
  return true;
}

bool is_crisp_subalgebra(const NLieAlgebra& L, const CrispSubset& s) {
  auto sub = as_subspace(L.field(), L.dim(), s);
  return sub && is_crisp_subalgebra(L, *sub);
}

bool is_crisp_ideal(const NLieAlgebra& L, const CrispSubset& s) {
  auto sub = as_subspace(L.field(), L.dim(), s);
  return sub && is_crisp_ideal(L, *sub);
}

// ---------------------------------------------------------------------------
// Products

NLieAlgebra direct_product(const NLieAlgebra& l1, const NLieAlgebra& l2) {
  if (!(l1.field() == l2.field())) throw std::invalid_argument("direct product: field mismatch");
  if (l1.arity() != l2.arity()) throw std::invalid_argument("direct product: arity mismatch");
  const std::size_t d1 = l1.dim(), d = d1 + l2.dim();
  std::map<BasisTuple, FVector> sc;
  for (const auto& [key, value] : l1.structure_constants()) sc.emplace(key, embed(value, 0, d));
  for (const auto& [key, value] : l2.structure_constants()) {
    BasisTuple shifted = key;
    for (auto& i : shifted) i += d1;
    sc.emplace(shifted, embed(value, d1, d));
  }
  return NLieAlgebra(l1.field(), d, l1.arity(), std::move(sc));
}

// ---------------------------------------------------------------------------
// Linear maps

LinearMap::LinearMap(AlgebraPtr source, AlgebraPtr target, std::vector<FVector> columns)
    : source_(std::move(source)), target_(std::move(target)), columns_(std::move(columns)) {
  if (!source_ || !target_) throw std::invalid_argument("linear map needs source and target");
  if (!(source_->field() == target_->field()))
    throw std::invalid_argument("linear map: field mismatch");
  if (columns_.size() != source_->dim())
    throw std::invalid_argument("linear map: expected " + std::to_string(source_->dim()) +
                                " columns, got " + std::to_string(columns_.size()));
  for (const auto& c : columns_)
    if (!(c.field() == target_->field()) || c.dim() != target_->dim())
      throw std::invalid_argument("linear map: column " + to_string(c) + " has wrong shape");

  if (source_->arity() != target_->arity()) return;
  const std::size_t n = source_->arity(), d = source_->dim();
  is_hom_ = true;
  if (d < n) return;
  auto t = first_combination(n);
  std::vector<FVector> args, images;
  do {
    args.clear();
    images.clear();
    for (auto i : t) {
      args.push_back(source_->basis(i));
      images.push_back(columns_[i]);
    }
    if (!(apply(source_->bracket(args)) == target_->bracket(images))) {
      is_hom_ = false;
      return;
    }
  } while (next_combination(t, d));
}

LinearMap LinearMap::identity(AlgebraPtr algebra) {
  std::vector<FVector> cols;
  for (std::size_t i = 0; i < algebra->dim(); ++i) cols.push_back(algebra->basis(i));
  return LinearMap(algebra, algebra, std::move(cols));
}

LinearMap LinearMap::zero(AlgebraPtr source, AlgebraPtr target) {
  std::vector<FVector> cols(source->dim(), target->zero());
  return LinearMap(source, target, std::move(cols));
}

FVector LinearMap::apply(const FVector& v) const {
  source_->element(v);
  FVector out = target_->zero();
  for (std::size_t i = 0; i < v.dim(); ++i)
    if (v[i]) out = out + v.coord(i) * columns_[i];
  return out;
}

Element LinearMap::apply(Element x) const { return apply(source_->vector(x)).index(); }

bool is_homomorphism(const LinearMap& phi) {
  if (phi.source()->arity() != phi.target()->arity())
    throw std::invalid_argument("homomorphism check: arity mismatch");
  return phi.is_homomorphism();
}

// ---------------------------------------------------------------------------
// Quotients and images

FVector CrispQuotient::lift(Element q) const {
  const FVector coords = algebra->vector(q);
  const auto& L = *projection.source();
  std::vector<std::uint8_t> c(L.dim(), 0);
  for (std::size_t j = 0; j < complement.size(); ++j) c[complement[j]] = static_cast<std::uint8_t>(coords[j]);
  return FVector(L.field(), std::move(c));
}

CrispQuotient quotient_by_crisp_ideal(const AlgebraPtr& algebra, const CrispSubspace& ideal) {
  const auto& L = *algebra;
  if (!(ideal.field() == L.field()) || ideal.ambient_dim() != L.dim())
    throw std::invalid_argument("quotient: subspace does not live in the algebra");
  if (!is_crisp_ideal(L, ideal)) throw std::invalid_argument("quotient: subspace is not an ideal");

  std::vector<std::size_t> complement;
  for (std::size_t i = 0; i < L.dim(); ++i)
    if (std::find(ideal.pivots().begin(), ideal.pivots().end(), i) == ideal.pivots().end())
      complement.push_back(i);
  const std::size_t qd = complement.size();

  auto down = [&](const FVector& v) {
    const FVector r = ideal.reduce(v);
    std::vector<std::uint8_t> c(qd);
    for (std::size_t j = 0; j < qd; ++j) c[j] = static_cast<std::uint8_t>(r[complement[j]]);
    return FVector(L.field(), std::move(c));
  };

  std::map<BasisTuple, FVector> sc;
  if (qd >= L.arity() && !L.is_abelian()) {
    auto t = first_combination(L.arity());
    std::vector<FVector> args;
    do {
      args.clear();
      for (auto j : t) args.push_back(L.basis(complement[j]));
      sc.emplace(t, down(L.bracket(args)));
    } while (next_combination(t, qd));
  }
  auto q = std::make_shared<const NLieAlgebra>(L.field(), qd, L.arity(), std::move(sc));

  std::vector<FVector> cols;
  for (std::size_t i = 0; i < L.dim(); ++i) cols.push_back(down(L.basis(i)));
  return CrispQuotient{q, LinearMap(algebra, q, std::move(cols)), ideal, std::move(complement)};
}

Element ImageSubalgebra::element_of(const FVector& target_vector) const {
  return FVector(target_vector.field(), subspace.coordinates(target_vector)).index();
}

ImageSubalgebra image_subalgebra(const LinearMap& phi) {
  if (!phi.is_homomorphism()) throw std::invalid_argument("image: map is not a homomorphism");
  const auto& T = *phi.target();
  auto sub = CrispSubspace::span(T.field(), T.dim(), phi.columns());
  const std::size_t k = sub.dim();
  std::map<BasisTuple, FVector> sc;
  if (k >= T.arity() && !T.is_abelian()) {
    auto t = first_combination(T.arity());
    std::vector<FVector> args;
    do {
      args.clear();
      for (auto j : t) args.push_back(sub.basis()[j]);
      sc.emplace(t, FVector(T.field(), sub.coordinates(T.bracket(args))));
    } while (next_combination(t, k));
  }
  auto img = std::make_shared<const NLieAlgebra>(T.field(), k, T.arity(), std::move(sc));
  return ImageSubalgebra{img, sub, LinearMap(img, phi.target(), sub.basis())};
}

// ---------------------------------------------------------------------------
// Subspace enumeration

std::vector<CrispSubspace> enumerate_subspaces(PrimeField field, std::size_t dim) {
  checked_power(field.p(), dim, 4096);
  constexpr std::uint64_t kMaxSubspaces = std::uint64_t{1} << 20;

  struct Shape {
    std::vector<std::size_t> pivots;
    std::vector<std::pair<std::size_t, std::size_t>> free;  // (row, col)
  };
  std::vector<Shape> shapes;
  std::uint64_t total = 0;
  for (std::size_t k = 0; k <= dim; ++k) {
    auto piv = first_combination(k);
    do {
      Shape sh{piv, {}};
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = piv[r] + 1; c < dim; ++c)
          if (std::find(piv.begin(), piv.end(), c) == piv.end()) sh.free.emplace_back(r, c);
      total += checked_power(field.p(), sh.free.size(), kMaxSubspaces);
      if (total > kMaxSubspaces) throw GuardExceeded("too many subspaces to enumerate");
      shapes.push_back(std::move(sh));
    } while (k > 0 && next_combination(piv, dim));
  }

  std::vector<CrispSubspace> out;
  out.reserve(static_cast<std::size_t>(total));
  for (const auto& sh : shapes) {
    std::vector<std::size_t> vals(sh.free.size(), 0);
    do {
      std::vector<std::vector<std::uint8_t>> rows(sh.pivots.size(), std::vector<std::uint8_t>(dim, 0));
      for (std::size_t r = 0; r < sh.pivots.size(); ++r) rows[r][sh.pivots[r]] = 1;
      for (std::size_t f = 0; f < sh.free.size(); ++f)
        rows[sh.free[f].first][sh.free[f].second] = static_cast<std::uint8_t>(vals[f]);
      std::vector<FVector> gens;
      for (auto& r : rows) gens.emplace_back(field, std::move(r));
      out.push_back(CrispSubspace::span(field, dim, gens));
    } while (next_tuple(vals, field.p()));
  }
  return out;
}

std::vector<CrispSubspace> enumerate_crisp_subalgebras(const NLieAlgebra& L) {
  std::vector<CrispSubspace> out;
  for (auto& s : enumerate_subspaces(L.field(), L.dim()))
    if (is_crisp_subalgebra(L, s)) out.push_back(std::move(s));
  return out;
}

std::vector<CrispSubspace> enumerate_crisp_ideals(const NLieAlgebra& L) {
  std::vector<CrispSubspace> out;
  for (auto& s : enumerate_subspaces(L.field(), L.dim()))
    if (is_crisp_ideal(L, s)) out.push_back(std::move(s));
  return out;
}

}  // namespace fuzzylie
