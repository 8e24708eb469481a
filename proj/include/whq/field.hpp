#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "whq/errors.hpp"

namespace whq {

enum class FieldKind { Rationals, PrimeField };

/// Base field descriptor: the rationals or a prime field F_p.
/// Every scalar in one computation carries the same Field.
class Field {
 public:
  static Field rationals() { return Field(FieldKind::Rationals, 0); }

  /// F_p; p must be a prime in [2, 2^31). Throws InvalidField otherwise.
  static Field prime(std::uint64_t p);

  FieldKind kind() const { return kind_; }
  std::uint64_t characteristic() const { return characteristic_; }

  bool operator==(const Field& o) const = default;

  std::string str() const;

 private:
  Field(FieldKind k, std::uint64_t p) : kind_(k), characteristic_(p) {}
  FieldKind kind_;
  std::uint64_t characteristic_;
};

/// Exact field element: arbitrary-precision rational or residue mod p.
/// All arithmetic is exact; there is no rounding anywhere.
class Scalar {
 public:
  Scalar() : Scalar(Field::rationals()) {}
  explicit Scalar(const Field& f) : field_(f), residue_(0) {}

  static Scalar zero(const Field& f) { return Scalar(f); }
  static Scalar one(const Field& f) { return integer(f, 1); }
  static Scalar integer(const Field& f, long n);
  /// num/den over the rationals (exact, canonicalized).
  static Scalar rational(long num, long den);

  /// Accepts "n", "-n", "a/b" and, over F_p, "r mod p".
  static Scalar parse(const std::string& text, const Field& f);

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Canonical text form: "3/7", "-2", "5 mod 11".
  std::string str() const;

 private:
  void check_same_field(const Scalar& o) const;

  Field field_;
  mpq_class rat_;           // used when field is the rationals
  std::uint64_t residue_;   // used when field is F_p, always in [0, p)
};

}  // namespace whq
