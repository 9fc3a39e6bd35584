#pragma once

// Noncommutative polynomials with exact rational coefficients.

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>
#include <vector>

#include "gsb/word.hpp"

namespace gsb {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

struct Term {
  Rational coeff;
  Word word;

  friend bool operator==(const Term&, const Term&) = default;
};

/// A linear combination of distinct words, held strictly descending in
/// deg-lex with nonzero coefficients. The empty term list is the zero
/// polynomial. Instances are only produced through poly_normalize() or
/// operations that preserve the invariant.
class Poly {
 public:
  Poly() = default;

  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_monic() const { return !terms_.empty() && terms_.front().coeff == 1; }

  // Leading term accessors; the polynomial must be nonzero.
  const Term& leading_term() const { return terms_.front(); }
  const Word& leading_word() const { return terms_.front().word; }
  const Rational& leading_coeff() const { return terms_.front().coeff; }
  std::size_t degree() const { return terms_.empty() ? 0 : terms_.front().word.size(); }

  friend bool operator==(const Poly&, const Poly&) = default;

  // Adopts terms that already satisfy the ordering invariant.
  static Poly from_sorted(std::vector<Term> terms) {
    Poly p;
    p.terms_ = std::move(terms);
    return p;
  }

 private:
  std::vector<Term> terms_;
};

/// Merges equal words, drops zero coefficients and sorts descending.
Poly poly_normalize(std::vector<Term> raw_terms, const Alphabet& alphabet);

/// Divides by the leading coefficient. Throws Error on the zero polynomial.
Poly make_monic(const Poly& p);

// p - q and c·p, both keeping the descending invariant.
Poly subtract(const Poly& p, const Poly& q, const std::vector<std::size_t>& rank);
Poly scale(const Poly& p, const Rational& c);
// a·p·b; two-sided multiplication by words preserves the term order.
Poly multiply(std::span<const Symbol> a, const Poly& p, std::span<const Symbol> b);

/// A binomial relation lhs -> rhs with rhs < lhs in deg-lex.
struct Rule {
  Word lhs;
  Word rhs;

  friend bool operator==(const Rule&, const Rule&) = default;
};

/// Reads a monic u - v polynomial as the rule u -> v.
/// Throws NotBinomial for any other shape.
Rule as_rule(const Poly& p);
bool is_binomial(const Poly& p);

// The monic polynomial lhs - rhs; the caller guarantees rhs < lhs.
Poly to_poly(const Rule& r);
// Orients u - v by deg-lex and returns the monic binomial; zero if u == v.
Poly binomial(const Word& u, const Word& v, const Alphabet& alphabet);

// "x2 x1 x2 - x1 x2 x1", coefficient 1 elided, "- 3/2 x1" for others.
std::string format_poly(const Poly& p, const Alphabet& alphabet);
Poly parse_poly(std::string_view text, const Alphabet& alphabet);

}  // namespace gsb
