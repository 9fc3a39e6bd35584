#include "gsb/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "gsb/error.hpp"

namespace gsb {

Poly poly_normalize(std::vector<Term> raw_terms, const Alphabet& alphabet) {
  for (const Term& t : raw_terms) alphabet.check(t.word);
  const auto& rank = alphabet.ranks();
  std::stable_sort(raw_terms.begin(), raw_terms.end(), [&](const Term& a, const Term& b) {
    return deglex(a.word, b.word, rank) > 0;
  });
  std::vector<Term> out;
  out.reserve(raw_terms.size());
  for (Term& t : raw_terms) {
    if (!out.empty() && out.back().word == t.word) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  return Poly::from_sorted(std::move(out));
}

Poly make_monic(const Poly& p) {
  if (p.is_zero()) throw Error("make_monic: zero polynomial");
  if (p.is_monic()) return p;
  const Rational lc = p.leading_coeff();
  std::vector<Term> terms = p.terms();
  for (Term& t : terms) t.coeff /= lc;
  return Poly::from_sorted(std::move(terms));
}

Poly subtract(const Poly& p, const Poly& q, const std::vector<std::size_t>& rank) {
  const auto& a = p.terms();
  const auto& b = q.terms();
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    std::strong_ordering c = std::strong_ordering::greater;
    if (i == a.size()) {
      c = std::strong_ordering::less;
    } else if (j < b.size()) {
      c = deglex(a[i].word, b[j].word, rank);
    }
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(Term{-b[j].coeff, b[j].word});
      ++j;
    } else {
      Rational d = a[i].coeff - b[j].coeff;
      if (d != 0) out.push_back(Term{std::move(d), a[i].word});
      ++i;
      ++j;
    }
  }
  return Poly::from_sorted(std::move(out));
}

Poly scale(const Poly& p, const Rational& c) {
  if (c == 0) return Poly{};
  std::vector<Term> terms = p.terms();
  for (Term& t : terms) t.coeff *= c;
  return Poly::from_sorted(std::move(terms));
}

Poly multiply(std::span<const Symbol> a, const Poly& p, std::span<const Symbol> b) {
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const Term& t : p.terms()) terms.push_back(Term{t.coeff, concat(a, t.word, b)});
  return Poly::from_sorted(std::move(terms));
}

bool is_binomial(const Poly& p) {
  return p.size() == 2 && p.terms()[0].coeff == 1 && p.terms()[1].coeff == -1;
}

Rule as_rule(const Poly& p) {
  if (!is_binomial(p)) {
    throw NotBinomial("polynomial is not of the form u - v with u > v");
  }
  return Rule{p.terms()[0].word, p.terms()[1].word};
}

Poly to_poly(const Rule& r) {
  return Poly::from_sorted({Term{1, r.lhs}, Term{-1, r.rhs}});
}

Poly binomial(const Word& u, const Word& v, const Alphabet& alphabet) {
  const auto c = compare_deglex(u, v, alphabet);
  if (c == 0) return Poly{};
  if (c > 0) return to_poly(Rule{u, v});
  return to_poly(Rule{v, u});
}

std::string format_poly(const Poly& p, const Alphabet& alphabet) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const Term& t : p.terms()) {
    const bool negative = t.coeff < 0;
    if (first) {
      if (negative) out += "- ";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational mag = negative ? Rational(-t.coeff) : t.coeff;
    if (mag == 1) {
      out += format_word(t.word, alphabet);
    } else {
      out += mag.str();
      if (!t.word.empty()) {
        out += ' ';
        out += format_word(t.word, alphabet);
      }
    }
  }
  return out;
}

namespace {

bool is_number(const std::string& tok) {
  if (tok.empty() || !std::isdigit(static_cast<unsigned char>(tok.front()))) return false;
  return std::all_of(tok.begin(), tok.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || c == '/';
  });
}

}  // namespace

Poly parse_poly(std::string_view text, const Alphabet& alphabet) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> tokens;
  for (std::string tok; in >> tok;) {
    // Generator names never start with a sign, so "-x2" is "- x2".
    if (tok.size() > 1 && (tok[0] == '+' || tok[0] == '-')) {
      tokens.push_back(tok.substr(0, 1));
      tok.erase(0, 1);
    }
    tokens.push_back(tok);
  }
  if (tokens.empty()) throw Error("empty polynomial text");
  if (tokens.size() == 1 && tokens[0] == "0") return Poly{};

  std::vector<Term> terms;
  std::size_t i = 0;
  bool first = true;
  while (i < tokens.size()) {
    Rational sign = 1;
    if (tokens[i] == "+" || tokens[i] == "-") {
      if (tokens[i] == "-") sign = -1;
      ++i;
    } else if (!first) {
      throw Error("expected '+' or '-' before term near '" + tokens[i] + "'");
    }
    first = false;
    std::vector<std::string> body;
    while (i < tokens.size() && tokens[i] != "+" && tokens[i] != "-") body.push_back(tokens[i++]);
    if (body.empty()) throw Error("missing term after sign");
    Rational coeff = 1;
    std::size_t k = 0;
    if (is_number(body[0]) && !(body.size() == 1 && body[0] == "1")) {
      try {
        coeff = Rational(body[0]);
      } catch (const std::exception&) {
        throw Error("bad coefficient '" + body[0] + "'");
      }
      k = 1;
    }
    Word w;
    for (; k < body.size(); ++k) {
      if (body[k] == "1") continue;
      w.push_back(alphabet.id_of(body[k]));
    }
    terms.push_back(Term{sign * coeff, std::move(w)});
  }
  return poly_normalize(std::move(terms), alphabet);
}

}  // namespace gsb
