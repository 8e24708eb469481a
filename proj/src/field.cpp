#include "whq/field.hpp"

#include <cctype>
#include <cstdlib>

namespace whq {

namespace {

bool is_prime_u64(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Residue inverse mod p by extended Euclid; p prime, r != 0.
std::uint64_t mod_inverse(std::uint64_t r, std::uint64_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t n = static_cast<std::int64_t>(p), new_n = static_cast<std::int64_t>(r);
  while (new_n != 0) {
    std::int64_t q = n / new_n;
    t -= q * new_t;
    std::swap(t, new_t);
    n -= q * new_n;
    std::swap(n, new_n);
  }
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p < 2 || p >= (1ULL << 31))
    throw InvalidField("prime field characteristic must lie in [2, 2^31): " + std::to_string(p));
  if (!is_prime_u64(p))
    throw InvalidField("characteristic is not prime: " + std::to_string(p));
  return Field(FieldKind::PrimeField, p);
}

std::string Field::str() const {
  return kind_ == FieldKind::Rationals ? "rationals" : "prime " + std::to_string(characteristic_);
}

Scalar Scalar::integer(const Field& f, long n) {
  Scalar s(f);
  if (f.kind() == FieldKind::Rationals) {
    s.rat_ = n;
  } else {
    const auto p = static_cast<std::int64_t>(f.characteristic());
    std::int64_t r = n % p;
    if (r < 0) r += p;
    s.residue_ = static_cast<std::uint64_t>(r);
  }
  return s;
}

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  Scalar s(Field::rationals());
  s.rat_ = mpq_class(num, den);
  s.rat_.canonicalize();
  return s;
}

Scalar Scalar::parse(const std::string& text, const Field& f) {
  // Strip surrounding whitespace.
  auto begin = text.find_first_not_of(" \t");
  auto end = text.find_last_not_of(" \t");
  if (begin == std::string::npos) throw ParseError("empty scalar");
  std::string body = text.substr(begin, end - begin + 1);

  auto mod_pos = body.find(" mod ");
  if (mod_pos != std::string::npos) {
    if (f.kind() != FieldKind::PrimeField)
      throw ParseError("'mod' scalar in a rationals document: " + body);
    std::string res = body.substr(0, mod_pos);
    std::string mod = body.substr(mod_pos + 5);
    if (std::to_string(f.characteristic()) != mod)
      throw ParseError("scalar modulus " + mod + " does not match field " + f.str());
    body = res;
  }

  auto is_int = [](const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };

  // Residues may be given as arbitrary (possibly negative, arbitrarily
  // large) integers.
  auto residue_scalar = [&](const std::string& digits) {
    mpz_class z(digits);
    mpz_class p(static_cast<unsigned long>(f.characteristic()));
    mpz_class r = z % p;
    if (r < 0) r += p;
    Scalar s(f);
    s.residue_ = r.get_ui();
    return s;
  };

  auto slash = body.find('/');
  if (slash != std::string::npos) {
    std::string num = body.substr(0, slash), den = body.substr(slash + 1);
    if (!is_int(num) || !is_int(den)) throw ParseError("malformed rational: " + body);
    if (f.kind() != FieldKind::Rationals) {
      // a/b in F_p means a * b^{-1}.
      return residue_scalar(num) / residue_scalar(den);
    }
    Scalar s(f);
    s.rat_ = mpq_class(body);
    if (s.rat_.get_den() == 0) throw DivisionByZero("zero denominator: " + body);
    s.rat_.canonicalize();
    return s;
  }

  if (!is_int(body)) throw ParseError("malformed scalar: " + body);
  if (f.kind() == FieldKind::Rationals) {
    Scalar s(f);
    s.rat_ = mpq_class(mpz_class(body));
    return s;
  }
  return residue_scalar(body);
}

void Scalar::check_same_field(const Scalar& o) const {
  if (!(field_ == o.field_))
    throw FieldMismatch("scalars over " + field_.str() + " and " + o.field_.str());
}

bool Scalar::is_zero() const {
  return field_.kind() == FieldKind::Rationals ? rat_ == 0 : residue_ == 0;
}

bool Scalar::is_one() const {
  return field_.kind() == FieldKind::Rationals ? rat_ == 1 : residue_ == 1;
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_field(o);
  Scalar s(field_);
  if (field_.kind() == FieldKind::Rationals) {
    s.rat_ = rat_ + o.rat_;
  } else {
    s.residue_ = (residue_ + o.residue_) % field_.characteristic();
  }
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(o);
  Scalar s(field_);
  if (field_.kind() == FieldKind::Rationals) {
    s.rat_ = rat_ * o.rat_;
  } else {
    s.residue_ = (residue_ * o.residue_) % field_.characteristic();
  }
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
  Scalar s(field_);
  if (field_.kind() == FieldKind::Rationals) {
    s.rat_ = -rat_;
  } else {
    s.residue_ = residue_ == 0 ? 0 : field_.characteristic() - residue_;
  }
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  Scalar s(field_);
  if (field_.kind() == FieldKind::Rationals) {
    s.rat_ = 1 / rat_;
  } else {
    s.residue_ = mod_inverse(residue_, field_.characteristic());
  }
  return s;
}

bool Scalar::operator==(const Scalar& o) const {
  check_same_field(o);
  return field_.kind() == FieldKind::Rationals ? rat_ == o.rat_ : residue_ == o.residue_;
}

std::string Scalar::str() const {
  if (field_.kind() == FieldKind::Rationals) return rat_.get_str();
  return std::to_string(residue_) + " mod " + std::to_string(field_.characteristic());
}

}  // namespace whq
