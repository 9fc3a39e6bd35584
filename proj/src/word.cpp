#include "gsb/word.hpp"

#include <algorithm>
#include <sstream>

#include "gsb/error.hpp"

namespace gsb {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > kMaxGenerators) throw Error("alphabet too large");
  rank_.resize(names_.size());
  for (std::size_t i = 0; i < names_.size(); ++i) {
    rank_[i] = i;
    if (names_[i].empty()) throw Error("empty generator name");
    const char c = names_[i].front();
    if ((c >= '0' && c <= '9') || c == '+' || c == '-' || c == '=') {
      throw Error("generator name '" + names_[i] + "' must not start with a digit or sign");
    }
    if (!by_name_.emplace(names_[i], static_cast<Symbol>(i)).second) {
      throw Error("duplicate generator name '" + names_[i] + "'");
    }
  }
}

Alphabet::Alphabet(std::vector<std::string> names, std::vector<Symbol> order)
    : Alphabet(std::move(names)) {
  if (order.size() != names_.size()) throw Error("precedence is not a permutation");
  std::vector<bool> seen(names_.size(), false);
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (order[k] >= names_.size() || seen[order[k]]) {
      throw Error("precedence is not a permutation");
    }
    seen[order[k]] = true;
    rank_[order[k]] = k;
    if (order[k] != k) identity_ = false;
  }
}

const std::string& Alphabet::name(Symbol id) const {
  if (id >= names_.size()) {
    throw AlphabetMismatch("generator id " + std::to_string(id) + " not in alphabet");
  }
  return names_[id];
}

Symbol Alphabet::id_of(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) {
    throw AlphabetMismatch("unknown generator '" + std::string(name) + "'");
  }
  return it->second;
}

bool Alphabet::contains(std::string_view name) const {
  return by_name_.count(std::string(name)) != 0;
}

std::vector<Generator> Alphabet::generators() const {
  std::vector<Generator> out(names_.size());
  for (std::size_t i = 0; i < names_.size(); ++i) {
    out[rank_[i]] = Generator{static_cast<Symbol>(i), names_[i]};
  }
  return out;
}

void Alphabet::check(std::span<const Symbol> w) const {
  for (Symbol s : w) {
    if (s >= names_.size()) {
      throw AlphabetMismatch("generator id " + std::to_string(s) + " not in alphabet");
    }
  }
}

std::strong_ordering compare_deglex(std::span<const Symbol> u, std::span<const Symbol> v,
                                    const Alphabet& alphabet) {
  alphabet.check(u);
  alphabet.check(v);
  return deglex(u, v, alphabet.ranks());
}

Word concat(std::span<const Symbol> a, std::span<const Symbol> b) {
  Word w;
  w.reserve(a.size() + b.size());
  w.insert(w.end(), a.begin(), a.end());
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

Word concat(std::span<const Symbol> a, std::span<const Symbol> b, std::span<const Symbol> c) {
  Word w;
  w.reserve(a.size() + b.size() + c.size());
  w.insert(w.end(), a.begin(), a.end());
  w.insert(w.end(), b.begin(), b.end());
  w.insert(w.end(), c.begin(), c.end());
  return w;
}

Word reversed(std::span<const Symbol> w) { return Word(w.rbegin(), w.rend()); }

std::vector<std::size_t> occurrences(std::span<const Symbol> w, std::span<const Symbol> factor) {
  std::vector<std::size_t> out;
  if (factor.size() > w.size()) return out;
  for (std::size_t i = 0; i + factor.size() <= w.size(); ++i) {
    if (std::equal(factor.begin(), factor.end(), w.begin() + static_cast<std::ptrdiff_t>(i))) {
      out.push_back(i);
    }
  }
  return out;
}

bool has_factor(std::span<const Symbol> w, std::span<const Symbol> factor) {
  return std::search(w.begin(), w.end(), factor.begin(), factor.end()) != w.end() ||
         factor.empty();
}

std::string format_word(std::span<const Symbol> w, const Alphabet& alphabet) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += alphabet.name(w[i]);
  }
  return out;
}

Word parse_word(std::string_view text, const Alphabet& alphabet) {
  std::istringstream in{std::string(text)};
  std::string token;
  Word w;
  std::size_t count = 0;
  bool saw_one = false;
  while (in >> token) {
    ++count;
    if (token == "1") {
      saw_one = true;
      continue;
    }
    w.push_back(alphabet.id_of(token));
  }
  if (count == 0) throw Error("empty word text; write the identity as \"1\"");
  if (saw_one && !w.empty()) throw Error("\"1\" may only stand alone in a word");
  return w;
}

}  // namespace gsb
