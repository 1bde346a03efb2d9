#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace barriers {

struct OrdinalTerm;

/// An ordinal below epsilon_0 in Cantor normal form.
///
/// The value is omega^e1 * c1 + ... + omega^ek * ck with e1 > ... > ek and
/// every ci >= 1. The empty term list is 0. Construction always yields the
/// canonical form, so structural equality is ordinal equality.
///
/// Text syntax (used by the CLI and the JSON formats):
///
///     ordinal := term ('+' term)*
///     term    := power ('*' nat)? | nat
///     power   := 'w' ('^' primary)?
///     primary := nat | power | '(' ordinal ')'
///
/// `w` stands for omega, `^` is right associative and whitespace is ignored.
/// Non-canonical sums such as `1 + w` are accepted and normalized (to `w`).
class Ordinal {
 public:
  Ordinal();  // zero
  explicit Ordinal(std::uint64_t n);

  static Ordinal omega();
  /// omega^exponent.
  static Ordinal omega_pow(const Ordinal& exponent);
  /// omega^exponent * coefficient; coefficient 0 gives zero.
  static Ordinal monomial(const Ordinal& exponent, std::uint64_t coefficient);

  /// Throws std::invalid_argument with a position on malformed input.
  static Ordinal parse(std::string_view text);
  std::string to_string() const;

  const std::vector<OrdinalTerm>& terms() const { return terms_; }

  bool is_zero() const;
  bool is_finite() const;
  bool is_successor() const;
  bool is_limit() const;
  /// Value as a natural; throws if infinite.
  std::uint64_t finite_value() const;
  /// Predecessor of a successor ordinal; throws otherwise.
  Ordinal predecessor() const;

  friend std::strong_ordering cmp(const Ordinal& a, const Ordinal& b);
  friend std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) { return cmp(a, b); }
  friend bool operator==(const Ordinal& a, const Ordinal& b);

  friend Ordinal operator+(const Ordinal& a, const Ordinal& b);
  friend Ordinal operator*(const Ordinal& a, const Ordinal& b);

 private:
  explicit Ordinal(std::vector<OrdinalTerm> terms);
  std::vector<OrdinalTerm> terms_;
};

struct OrdinalTerm {
  Ordinal exponent;
  std::uint64_t coefficient;

  friend bool operator==(const OrdinalTerm&, const OrdinalTerm&) = default;
};

inline bool Ordinal::is_zero() const { return terms_.empty(); }

std::strong_ordering cmp(const Ordinal& a, const Ordinal& b);
Ordinal add(const Ordinal& a, const Ordinal& b);
Ordinal mul(const Ordinal& a, const Ordinal& b);
Ordinal omega_pow(const Ordinal& a);

/// Standard (Wainer) fundamental sequence with omega[n] = n:
/// for l = g + omega^(d+1) the n-th member is g + omega^d * n, and for
/// l = g + omega^m with m a limit it is g + omega^(m[n]).
/// Throws std::invalid_argument unless l is a limit.
Ordinal fund_seq(const Ordinal& limit, std::uint64_t n);

}  // namespace barriers
