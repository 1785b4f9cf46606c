#include "fuzzylie/field.hpp"

#include <sstream>

namespace fuzzylie {

bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

PrimeField::PrimeField(unsigned p) : p_(p) {
  if (p > 251 || !is_prime(p))
    throw std::invalid_argument("field modulus must be a prime <= 251, got " + std::to_string(p));
}

unsigned PrimeField::inv(unsigned a) const {
  a %= p_;
  if (a == 0) throw std::domain_error("zero has no multiplicative inverse");
  unsigned result = 1, base = a, e = p_ - 2;
  while (e) {
    if (e & 1u) result = mul(result, base);
    base = mul(base, base);
    e >>= 1u;
  }
  return result;
}

Scalar::Scalar(PrimeField field, unsigned value) : field_(field), value_(0) {
  if (value >= field.p())
    throw std::invalid_argument("scalar " + std::to_string(value) + " out of range for GF(" +
                                std::to_string(field.p()) + ")");
  value_ = static_cast<std::uint8_t>(value);
}

namespace {

void require_same(const PrimeField& a, const PrimeField& b) {
  if (!(a == b))
    throw std::invalid_argument("field mismatch: GF(" + std::to_string(a.p()) + ") vs GF(" +
                                std::to_string(b.p()) + ")");
}

void require_same(const FVector& u, const FVector& v) {
  require_same(u.field(), v.field());
  if (u.dim() != v.dim())
    throw std::invalid_argument("dimension mismatch: " + std::to_string(u.dim()) + " vs " +
                                std::to_string(v.dim()));
}

}  // namespace

Scalar operator+(const Scalar& a, const Scalar& b) {
  require_same(a.field(), b.field());
  return Scalar(a.field(), a.field().add(a.value(), b.value()));
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  require_same(a.field(), b.field());
  return Scalar(a.field(), a.field().sub(a.value(), b.value()));
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  require_same(a.field(), b.field());
  return Scalar(a.field(), a.field().mul(a.value(), b.value()));
}

Scalar operator-(const Scalar& a) { return Scalar(a.field(), a.field().neg(a.value())); }

Scalar inverse(const Scalar& a) { return Scalar(a.field(), a.field().inv(a.value())); }

FVector::FVector(PrimeField field, std::vector<std::uint8_t> coords)
    : field_(field), coords_(std::move(coords)) {
  for (auto c : coords_)
    if (c >= field_.p()) throw std::invalid_argument("vector coordinate out of range");
}

FVector FVector::zero(PrimeField field, std::size_t dim) {
  return FVector(field, std::vector<std::uint8_t>(dim, 0));
}

FVector FVector::unit(PrimeField field, std::size_t dim, std::size_t i) {
  if (i >= dim) throw std::out_of_range("basis index out of range");
  std::vector<std::uint8_t> c(dim, 0);
  c[i] = 1;
  return FVector(field, std::move(c));
}

FVector FVector::from_index(PrimeField field, std::size_t dim, Element index) {
  std::vector<std::uint8_t> c(dim, 0);
  for (std::size_t i = 0; i < dim; ++i) {
    c[i] = static_cast<std::uint8_t>(index % field.p());
    index /= field.p();
  }
  if (index != 0) throw std::out_of_range("element index out of range");
  return FVector(field, std::move(c));
}

bool FVector::is_zero() const {
  for (auto c : coords_)
    if (c) return false;
  return true;
}

Element FVector::index() const {
  Element idx = 0;
  for (std::size_t i = coords_.size(); i-- > 0;) idx = idx * field_.p() + coords_[i];
  return idx;
}

FVector operator+(const FVector& u, const FVector& v) {
  require_same(u, v);
  std::vector<std::uint8_t> c(u.dim());
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = static_cast<std::uint8_t>(u.field().add(u[i], v[i]));
  return FVector(u.field(), std::move(c));
}

FVector operator-(const FVector& u, const FVector& v) {
  require_same(u, v);
  std::vector<std::uint8_t> c(u.dim());
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = static_cast<std::uint8_t>(u.field().sub(u[i], v[i]));
  return FVector(u.field(), std::move(c));
}

FVector operator-(const FVector& v) { return FVector::zero(v.field(), v.dim()) - v; }

FVector operator*(const Scalar& alpha, const FVector& v) {
  require_same(alpha.field(), v.field());
  std::vector<std::uint8_t> c(v.dim());
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = static_cast<std::uint8_t>(v.field().mul(alpha.value(), v[i]));
  return FVector(v.field(), std::move(c));
}

std::string to_string(const FVector& v) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < v.dim(); ++i) out << (i ? "," : "") << v[i];
  out << ')';
  return out.str();
}

std::uint64_t checked_power(unsigned p, std::size_t d, std::uint64_t limit) {
  std::uint64_t result = 1;
  for (std::size_t i = 0; i < d; ++i) {
    result *= p;
    if (result > limit)
      throw GuardExceeded(std::to_string(p) + "^" + std::to_string(d) + " exceeds limit " +
                          std::to_string(limit));
  }
  return result;
}

}  // namespace fuzzylie
