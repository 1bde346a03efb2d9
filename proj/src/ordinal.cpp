#include "barriers/ordinal.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>

namespace barriers {

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (a > std::numeric_limits<std::uint64_t>::max() - b) {
    throw std::overflow_error("ordinal coefficient overflow");
  }
  return a + b;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    throw std::overflow_error("ordinal coefficient overflow");
  }
  return a * b;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Ordinal parse_all() {
    Ordinal result = parse_sum();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return result;
  }

 private:
  Ordinal parse_sum() {
    Ordinal total = parse_term();
    while (consume('+')) total = total + parse_term();
    return total;
  }

  Ordinal parse_term() {
    skip_ws();
    if (peek_digit()) return Ordinal(parse_nat());
    Ordinal power = parse_power();
    if (consume('*')) {
      skip_ws();
      if (!peek_digit()) fail("expected coefficient after '*'");
      return power * Ordinal(parse_nat());
    }
    return power;
  }

  Ordinal parse_power() {
    skip_ws();
    if (!consume('w')) fail("expected 'w' or a natural number");
    if (!consume('^')) return Ordinal::omega();
    return Ordinal::omega_pow(parse_primary());
  }

  Ordinal parse_primary() {
    skip_ws();
    if (peek_digit()) return Ordinal(parse_nat());
    if (consume('(')) {
      Ordinal inner = parse_sum();
      if (!consume(')')) fail("expected ')'");
      return inner;
    }
    return parse_power();
  }

  std::uint64_t parse_nat() {
    std::uint64_t value = 0;
    while (peek_digit()) {
      value = checked_add(checked_mul(value, 10), static_cast<std::uint64_t>(text_[pos_] - '0'));
      ++pos_;
    }
    return value;
  }

  bool peek_digit() {
    skip_ws();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  bool consume(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const char* what) const {
    throw std::invalid_argument("ordinal parse error at position " + std::to_string(pos_) + " in '" +
                                std::string(text_) + "': " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Ordinal::Ordinal() = default;

Ordinal::Ordinal(std::uint64_t n) {
  if (n > 0) terms_.push_back(OrdinalTerm{Ordinal(), n});
}

Ordinal::Ordinal(std::vector<OrdinalTerm> terms) : terms_(std::move(terms)) {}

Ordinal Ordinal::omega() { return omega_pow(Ordinal(1)); }

Ordinal Ordinal::omega_pow(const Ordinal& exponent) { return monomial(exponent, 1); }

Ordinal Ordinal::monomial(const Ordinal& exponent, std::uint64_t coefficient) {
  if (coefficient == 0) return Ordinal();
  return Ordinal(std::vector<OrdinalTerm>{OrdinalTerm{exponent, coefficient}});
}

Ordinal Ordinal::parse(std::string_view text) { return Parser(text).parse_all(); }

std::string Ordinal::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& term : terms_) {
    if (!out.empty()) out += " + ";
    if (term.exponent.is_zero()) {
      out += std::to_string(term.coefficient);
      continue;
    }
    out += "w";
    if (term.exponent != Ordinal(1)) {
      out += "^";
      const bool bare = term.exponent.is_finite() || term.exponent == Ordinal::omega();
      out += bare ? term.exponent.to_string() : "(" + term.exponent.to_string() + ")";
    }
    if (term.coefficient > 1) out += "*" + std::to_string(term.coefficient);
  }
  return out;
}

bool Ordinal::is_finite() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.is_zero()); }

bool Ordinal::is_successor() const { return !terms_.empty() && terms_.back().exponent.is_zero(); }

bool Ordinal::is_limit() const { return !terms_.empty() && !terms_.back().exponent.is_zero(); }

std::uint64_t Ordinal::finite_value() const {
  if (!is_finite()) throw std::invalid_argument("ordinal " + to_string() + " is infinite");
  return terms_.empty() ? 0 : terms_[0].coefficient;
}

Ordinal Ordinal::predecessor() const {
  if (!is_successor()) throw std::invalid_argument("ordinal " + to_string() + " has no predecessor");
  std::vector<OrdinalTerm> terms = terms_;
  if (--terms.back().coefficient == 0) terms.pop_back();
  return Ordinal(std::move(terms));
}

std::strong_ordering cmp(const Ordinal& a, const Ordinal& b) {
  const auto& x = a.terms_;
  const auto& y = b.terms_;
  for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
    if (auto c = cmp(x[i].exponent, y[i].exponent); c != 0) return c;
    if (auto c = x[i].coefficient <=> y[i].coefficient; c != 0) return c;
  }
  return x.size() <=> y.size();
}

bool operator==(const Ordinal& a, const Ordinal& b) { return a.terms_ == b.terms_; }

Ordinal operator+(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  const Ordinal& lead = b.terms_.front().exponent;
  std::vector<OrdinalTerm> terms;
  for (const auto& term : a.terms_) {
    auto c = cmp(term.exponent, lead);
    if (c > 0) {
      terms.push_back(term);
    } else {
      if (c == 0) {
        terms.push_back(OrdinalTerm{lead, checked_add(term.coefficient, b.terms_.front().coefficient)});
        terms.insert(terms.end(), b.terms_.begin() + 1, b.terms_.end());
        return Ordinal(std::move(terms));
      }
      break;
    }
  }
  terms.insert(terms.end(), b.terms_.begin(), b.terms_.end());
  return Ordinal(std::move(terms));
}

// a * (w^b1*n1 + ... + w^bk*nk) = a*w^b1*n1 + ... ; a*w^b = w^(lead(a)+b) for b > 0,
// and a*n only scales the leading coefficient of a.
Ordinal operator*(const Ordinal& a, const Ordinal& b) {
  if (a.is_zero() || b.is_zero()) return Ordinal();
  const OrdinalTerm& head = a.terms_.front();
  Ordinal result;
  for (const auto& term : b.terms_) {
    if (term.exponent.is_zero()) {
      std::vector<OrdinalTerm> scaled = a.terms_;
      scaled.front().coefficient = checked_mul(head.coefficient, term.coefficient);
      result = result + Ordinal(std::move(scaled));
    } else {
      result = result + Ordinal::monomial(head.exponent + term.exponent, term.coefficient);
    }
  }
  return result;
}

Ordinal add(const Ordinal& a, const Ordinal& b) { return a + b; }
Ordinal mul(const Ordinal& a, const Ordinal& b) { return a * b; }
Ordinal omega_pow(const Ordinal& a) { return Ordinal::omega_pow(a); }

Ordinal fund_seq(const Ordinal& limit, std::uint64_t n) {
  if (!limit.is_limit()) {
    throw std::invalid_argument("fundamental sequence requested for non-limit " + limit.to_string());
  }
  std::vector<OrdinalTerm> rest = limit.terms();
  OrdinalTerm last = rest.back();
  if (--rest.back().coefficient == 0) rest.pop_back();
  Ordinal base = Ordinal();
  for (const auto& term : rest) base = base + Ordinal::monomial(term.exponent, term.coefficient);
  if (last.exponent.is_successor()) {
    return base + Ordinal::monomial(last.exponent.predecessor(), n);
  }
  return base + Ordinal::omega_pow(fund_seq(last.exponent, n));
}

}  // namespace barriers
