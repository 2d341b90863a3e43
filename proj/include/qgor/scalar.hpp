#pragma once

// Exact coefficient fields: the rationals (GMP) and prime fields Z/p.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

namespace qgor {

/// Coefficient field descriptor: characteristic 0 means Q, otherwise Z/p.
class Field {
 public:
  constexpr Field() = default;

  static Field rationals() { return Field{}; }
  static Field prime(std::uint32_t p) {
    if (!is_prime(p)) {
      throw std::invalid_argument("field modulus " + std::to_string(p) + " is not prime");
    }
    Field f;
    f.characteristic_ = p;
    return f;
  }

  std::uint32_t characteristic() const { return characteristic_; }
  bool is_rational() const { return characteristic_ == 0; }

  std::string name() const {
    if (characteristic_ == 0) return "Q";
    return "F" + std::to_string(characteristic_);
  }

  friend bool operator==(const Field&, const Field&) = default;

  static bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d) {
      if (p % d == 0) return false;
    }
    return true;
  }

 private:
  friend class Scalar;

  // Residues only carry moduli that were validated by prime().
  static Field unchecked(std::uint32_t p) {
    Field f;
    f.characteristic_ = p;
    return f;
  }

  std::uint32_t characteristic_ = 0;
};

/// Residue of Z/p, always reduced into [0, p).
struct Residue {
  std::uint32_t value = 0;
  std::uint32_t modulus = 2;

  friend bool operator==(const Residue&, const Residue&) = default;
};

/// An element of Q or of Z/p. Rationals are kept canonical (lowest terms,
/// positive denominator) by GMP; residues are kept reduced.
class Scalar {
 public:
  Scalar() = default;

  static Scalar zero(const Field& f) { return from_int(f, 0); }
  static Scalar one(const Field& f) { return from_int(f, 1); }

  static Scalar from_int(const Field& f, long v) {
    if (f.is_rational()) return Scalar(mpq_class(v));
    return Scalar(make_residue(v, f.characteristic()));
  }

  /// Maps num/den into the field; throws when den is zero (or zero mod p).
  static Scalar from_rational(const Field& f, const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::domain_error("zero denominator");
    if (f.is_rational()) {
      mpq_class q(num, den);
      q.canonicalize();
      return Scalar(std::move(q));
    }
    const std::uint32_t p = f.characteristic();
    Residue n = reduce(num, p);
    Residue d = reduce(den, p);
    if (d.value == 0) {
      throw std::domain_error("denominator " + den.get_str() + " is not invertible mod " +
                              std::to_string(p));
    }
    return Scalar(n) * Scalar(d).inverse();
  }

  static Scalar from_mpq(const Field& f, const mpq_class& q) {
    return from_rational(f, q.get_num(), q.get_den());
  }

  bool is_rational() const { return std::holds_alternative<mpq_class>(value_); }

  Field field() const {
    if (is_rational()) return Field::rationals();
    return Field::unchecked(std::get<Residue>(value_).modulus);
  }

  bool is_zero() const {
    if (const auto* q = std::get_if<mpq_class>(&value_)) return sgn(*q) == 0;
    return std::get<Residue>(value_).value == 0;
  }

  bool is_one() const {
    if (const auto* q = std::get_if<mpq_class>(&value_)) return *q == 1;
    return std::get<Residue>(value_).value == 1;
  }

  const mpq_class& rational() const { return std::get<mpq_class>(value_); }
  const Residue& residue() const { return std::get<Residue>(value_); }

  Scalar operator-() const {
    if (const auto* q = std::get_if<mpq_class>(&value_)) return Scalar(mpq_class(-*q));
    const Residue& r = std::get<Residue>(value_);
    return Scalar(Residue{r.value == 0 ? 0 : r.modulus - r.value, r.modulus});
  }

  Scalar& operator+=(const Scalar& o) {
    if (auto* q = std::get_if<mpq_class>(&value_)) {
      *q += o.rational();
    } else {
      Residue& r = std::get<Residue>(value_);
      const Residue& s = o.checked_residue(r.modulus);
      std::uint64_t v = std::uint64_t{r.value} + s.value;
      r.value = static_cast<std::uint32_t>(v >= r.modulus ? v - r.modulus : v);
    }
    return *this;
  }

  Scalar& operator-=(const Scalar& o) {
    if (auto* q = std::get_if<mpq_class>(&value_)) {
      *q -= o.rational();
    } else {
      Residue& r = std::get<Residue>(value_);
      const Residue& s = o.checked_residue(r.modulus);
      r.value = r.value >= s.value ? r.value - s.value : r.value + (r.modulus - s.value);
    }
    return *this;
  }

  Scalar& operator*=(const Scalar& o) {
    if (auto* q = std::get_if<mpq_class>(&value_)) {
      *q *= o.rational();
    } else {
      Residue& r = std::get<Residue>(value_);
      const Residue& s = o.checked_residue(r.modulus);
      r.value = static_cast<std::uint32_t>((std::uint64_t{r.value} * s.value) % r.modulus);
    }
    return *this;
  }

  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  Scalar inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    if (const auto* q = std::get_if<mpq_class>(&value_)) return Scalar(mpq_class(1 / *q));
    const Residue& r = std::get<Residue>(value_);
    // Fermat: a^(p-2).
    std::uint64_t base = r.value, acc = 1, e = r.modulus - 2;
    while (e > 0) {
      if (e & 1) acc = acc * base % r.modulus;
      base = base * base % r.modulus;
      e >>= 1;
    }
    return Scalar(Residue{static_cast<std::uint32_t>(acc), r.modulus});
  }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.value_ == b.value_; }

  /// "3", "-5/8"; residues print as their representative in [0, p).
  std::string to_string() const {
    if (const auto* q = std::get_if<mpq_class>(&value_)) return q->get_str();
    return std::to_string(std::get<Residue>(value_).value);
  }

  /// True when the printed form needs a leading minus sign (rationals only).
  bool is_negative() const {
    if (const auto* q = std::get_if<mpq_class>(&value_)) return sgn(*q) < 0;
    return false;
  }

 private:
  explicit Scalar(mpq_class q) : value_(std::move(q)) {}
  explicit Scalar(Residue r) : value_(r) {}

  const Residue& checked_residue(std::uint32_t modulus) const {
    const auto* r = std::get_if<Residue>(&value_);
    if (r == nullptr || r->modulus != modulus) {
      throw std::invalid_argument("scalar field mismatch");
    }
    return *r;
  }

  static Residue make_residue(long v, std::uint32_t p) {
    long m = v % static_cast<long>(p);
    if (m < 0) m += p;
    return Residue{static_cast<std::uint32_t>(m), p};
  }

  static Residue reduce(const mpz_class& v, std::uint32_t p) {
    mpz_class m = v % p;
    if (m < 0) m += p;
    return Residue{static_cast<std::uint32_t>(m.get_ui()), p};
  }

  std::variant<mpq_class, Residue> value_ = mpq_class(0);
};

}  // namespace qgor
