#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace fuzzylie {

/// Index of an element of a finite vector space GF(p)^d, encoded as
/// sum coords[i] * p^i.
using Element = std::uint32_t;

/// Thrown when an exhaustive computation would exceed its configured size.
class GuardExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// The prime field GF(p), 2 <= p <= 251.
class PrimeField {
 public:
  explicit PrimeField(unsigned p);

  unsigned p() const { return p_; }

  unsigned add(unsigned a, unsigned b) const { return (a + b) % p_; }
  unsigned sub(unsigned a, unsigned b) const { return (a + p_ - b) % p_; }
  unsigned mul(unsigned a, unsigned b) const { return (a * b) % p_; }
  unsigned neg(unsigned a) const { return (p_ - a) % p_; }
  /// Multiplicative inverse by Fermat exponentiation; throws std::domain_error on zero.
  unsigned inv(unsigned a) const;

  bool operator==(const PrimeField&) const = default;

 private:
  unsigned p_;
};

bool is_prime(unsigned p);

class Scalar {
 public:
  Scalar(PrimeField field, unsigned value);

  const PrimeField& field() const { return field_; }
  unsigned value() const { return value_; }
  bool is_zero() const { return value_ == 0; }

  bool operator==(const Scalar&) const = default;

 private:
  PrimeField field_;
  std::uint8_t value_;
};

Scalar operator+(const Scalar& a, const Scalar& b);
Scalar operator-(const Scalar& a, const Scalar& b);
Scalar operator*(const Scalar& a, const Scalar& b);
Scalar operator-(const Scalar& a);
Scalar inverse(const Scalar& a);

/// A vector of GF(p)^d.
class FVector {
 public:
  FVector(PrimeField field, std::vector<std::uint8_t> coords);

  static FVector zero(PrimeField field, std::size_t dim);
  static FVector unit(PrimeField field, std::size_t dim, std::size_t i);
  static FVector from_index(PrimeField field, std::size_t dim, Element index);

  const PrimeField& field() const { return field_; }
  std::size_t dim() const { return coords_.size(); }
  unsigned operator[](std::size_t i) const { return coords_[i]; }
  Scalar coord(std::size_t i) const { return Scalar(field_, coords_[i]); }
  const std::vector<std::uint8_t>& coords() const { return coords_; }
  bool is_zero() const;

  Element index() const;

  bool operator==(const FVector&) const = default;

 private:
  PrimeField field_;
  std::vector<std::uint8_t> coords_;
};

FVector operator+(const FVector& u, const FVector& v);
FVector operator-(const FVector& u, const FVector& v);
FVector operator-(const FVector& v);
FVector operator*(const Scalar& alpha, const FVector& v);

std::string to_string(const FVector& v);

/// p^d, throwing GuardExceeded when it does not fit below `limit`.
std::uint64_t checked_power(unsigned p, std::size_t d, std::uint64_t limit);

}  // namespace fuzzylie
