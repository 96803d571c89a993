#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace hc {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when input violates a documented precondition (bad permutation,
// order cap, non-solvable group, ...).  The CLI maps these to exit code 2.
struct PreconditionError : Error {
  using Error::Error;
};

// Raised when a computation contradicts a theorem it relies on.  Signals a
// bug, never bad input.
struct TheoremViolation : Error {
  using Error::Error;
};

/// An exact element of a cyclotomic field Q(zeta_n), stored in the power
/// basis 1, zeta, ..., zeta^(phi(n)-1) at the minimal possible level n
/// (normalized so n is never 2 mod 4).  Equality of canonical forms is
/// equality of values.
class Cyc {
 public:
  Cyc() : level_(1), coeff_(1, Rat(0)) {}
  explicit Cyc(long v) : level_(1), coeff_(1, Rat(v)) {}
  explicit Cyc(const Rat& v) : level_(1), coeff_(1, v) {}

  // zeta_n^k
  static Cyc root_of_unity(long n, long k);
  // Build from a raw coefficient vector over powers zeta_n^0..zeta_n^(m-1)
  // (any length); reduces mod the cyclotomic polynomial and minimizes the
  // level.
  static Cyc from_coeffs(long n, std::vector<Rat> raw);

  long level() const { return level_; }
  const std::vector<Rat>& coeffs() const { return coeff_; }

  bool is_zero() const;
  bool is_rational() const { return level_ == 1; }
  bool is_one() const { return level_ == 1 && coeff_[0] == 1; }
  Rat rational_value() const;  // requires is_rational()

  Cyc operator-() const;
  Cyc inverse() const;  // throws Error on zero
  Cyc conj() const;     // complex conjugation, zeta -> zeta^-1
  // Galois automorphism zeta -> zeta^k; requires gcd(k, level) == 1.
  Cyc galois(long k) const;
  Cyc pow(long e) const;  // e may be negative for nonzero values

  friend Cyc operator+(const Cyc& a, const Cyc& b);
  friend Cyc operator-(const Cyc& a, const Cyc& b);
  friend Cyc operator*(const Cyc& a, const Cyc& b);
  Cyc& operator+=(const Cyc& o) { return *this = *this + o; }
  Cyc& operator*=(const Cyc& o) { return *this = *this * o; }

  bool operator==(const Cyc&) const = default;

 private:
  long level_;
  std::vector<Rat> coeff_;  // size phi(level_)
};

Cyc operator*(const Rat& q, const Cyc& a);

// Renders as a sum of terms "q" (rational part) and "q*z(n)^k"; parse_cyc
// reads the same grammar back.  Canonical and bit-stable across runs.
std::string to_string(const Cyc& a);
Cyc parse_cyc(const std::string& text);

/// Field of values of a finite set of cyclotomic numbers: the minimal n with
/// all values in Q(zeta_n), together with the subgroup of (Z/n)^* fixing
/// every value.  The field is the full cyclotomic field Q(zeta_n) exactly
/// when the stabilizer is trivial.
struct FieldDescriptor {
  long conductor = 1;
  std::vector<long> stabilizer;  // sorted, always contains 1

  bool cyclotomic() const { return stabilizer.size() == 1; }
  auto operator<=>(const FieldDescriptor&) const = default;
};

FieldDescriptor field_of_values(const std::vector<Cyc>& values);

// Q(zeta_n) = Q(zeta_{n/2}) for n = 2 mod 4; this returns the canonical
// conductor of the n-th cyclotomic field.
long canonical_cyclotomic_conductor(long n);

// Euler phi and the sorted unit group of Z/n.
long euler_phi(long n);
std::vector<long> units_mod(long n);

}  // namespace hc
