#pragma once

// Words over a finite alphabet and the deg-lex monomial order.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace gsb {

using Symbol = std::uint8_t;

// A word is a sequence of dense generator ids. The empty word is the monoid
// identity and is written "1" in text form.
using Word = std::vector<Symbol>;

inline constexpr std::size_t kMaxGenerators = 255;

struct Generator {
  Symbol id;
  std::string display_name;
};

/// A finite ordered alphabet.
///
/// Generator ids are dense and 0-based. The precedence is a permutation: the
/// generator with rank 0 is the smallest letter. Presets and presentation
/// files list generators in ascending precedence, so their rank equals their
/// id, but an explicit order may be supplied.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);
  // order[k] is the id of the k-th smallest generator.
  Alphabet(std::vector<std::string> names, std::vector<Symbol> order);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(Symbol id) const;
  Symbol id_of(std::string_view name) const;
  bool contains(std::string_view name) const;
  std::size_t rank(Symbol id) const { return rank_[id]; }
  const std::vector<std::size_t>& ranks() const noexcept { return rank_; }
  // Generators in ascending precedence.
  std::vector<Generator> generators() const;
  bool identity_precedence() const noexcept { return identity_; }

  // Throws AlphabetMismatch if any symbol is not an id of this alphabet.
  void check(std::span<const Symbol> w) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.names_ == b.names_ && a.rank_ == b.rank_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<std::size_t> rank_;
  std::unordered_map<std::string, Symbol> by_name_;
  bool identity_ = true;
};

// Unchecked deg-lex comparison against a rank table; the hot-path form.
inline std::strong_ordering deglex(std::span<const Symbol> u, std::span<const Symbol> v,
                                   const std::vector<std::size_t>& rank) {
  if (u.size() != v.size()) return u.size() <=> v.size();
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] != v[i]) return rank[u[i]] <=> rank[v[i]];
  }
  return std::strong_ordering::equal;
}

/// Degree first, then left-to-right lexicographic by precedence.
/// Throws AlphabetMismatch on symbols outside the alphabet.
std::strong_ordering compare_deglex(std::span<const Symbol> u, std::span<const Symbol> v,
                                    const Alphabet& alphabet);

struct DegLexLess {
  const std::vector<std::size_t>* rank;
  bool operator()(const Word& u, const Word& v) const { return deglex(u, v, *rank) < 0; }
};

Word concat(std::span<const Symbol> a, std::span<const Symbol> b);
Word concat(std::span<const Symbol> a, std::span<const Symbol> b, std::span<const Symbol> c);
Word reversed(std::span<const Symbol> w);

// Occurrence test; returns the start offsets of every occurrence of `factor`.
std::vector<std::size_t> occurrences(std::span<const Symbol> w, std::span<const Symbol> factor);
bool has_factor(std::span<const Symbol> w, std::span<const Symbol> factor);

// Whitespace-separated display names; "1" is the empty word.
std::string format_word(std::span<const Symbol> w, const Alphabet& alphabet);
Word parse_word(std::string_view text, const Alphabet& alphabet);

}  // namespace gsb
