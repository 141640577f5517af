#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gfg/errors.hpp"

namespace gfg::wordcore {

// A letter is a signed generator index: +i stands for x_i, -i for x_i^{-1},
// with 1 <= i <= rank.
using Letter = int;

inline Letter inverse(Letter l) { return -l; }

// Total order on letters used everywhere a fixed order is needed:
// 1 < -1 < 2 < -2 < ...  Stable under extending the rank.
inline int letter_key(Letter l) {
  int idx = l > 0 ? l : -l;
  return 2 * (idx - 1) + (l < 0 ? 1 : 0);
}

class Word;
Word reduce(std::vector<Letter> letters, int rank);

// A freely reduced word in the free group of the given rank.
class Word {
 public:
  Word() : rank_(1) {}
  explicit Word(int rank) : rank_(check_rank(rank)) {}

  // Letters must already be freely reduced; use gfg::wordcore::reduce to
  // build a Word from an arbitrary letter sequence.
  static Word from_reduced(std::vector<Letter> letters, int rank);

  int rank() const { return rank_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool trivial() const { return letters_.empty(); }

  Word inverse() const;
  // Concatenation followed by free reduction.
  Word operator*(const Word& rhs) const;
  Word pow(long long e) const;
  // g.conjugated_by(c) = c g c^-1.
  Word conjugated_by(const Word& c) const;

  bool operator==(const Word& rhs) const {
    return rank_ == rhs.rank_ && letters_ == rhs.letters_;
  }
  bool operator!=(const Word& rhs) const { return !(*this == rhs); }

  // Shortlex with respect to letter_key; rank is a tiebreaker so that words
  // of mixed rank sort deterministically in containers.
  std::strong_ordering operator<=>(const Word& rhs) const;

 private:
  friend Word reduce(std::vector<Letter>, int);
  static int check_rank(int rank) {
    if (rank < 1) throw input_error("word rank must be positive");
    return rank;
  }

  int rank_;
  std::vector<Letter> letters_;
};

// Free reduction: cancels adjacent inverse pairs until none remain.
// Throws input_error if a letter is 0 or out of range.
Word reduce(std::vector<Letter> letters, int rank);

// Convenience: single generator x_i (or its inverse for negative i).
Word generator(int i, int rank);

// A word up to cyclic rotation.  The stored representative is cyclically
// reduced and is the lexicographically least rotation under letter_key.
class CyclicWord {
 public:
  CyclicWord() = default;

  // w must be cyclically reduced; canonicalizes the rotation.
  static CyclicWord canonical(const Word& w);

  int rank() const { return word_.rank(); }
  const Word& word() const { return word_; }
  const std::vector<Letter>& letters() const { return word_.letters(); }
  std::size_t length() const { return word_.length(); }
  bool trivial() const { return word_.trivial(); }

  CyclicWord inverse() const { return canonical(word_.inverse()); }

  bool operator==(const CyclicWord& rhs) const { return word_ == rhs.word_; }
  bool operator!=(const CyclicWord& rhs) const { return !(*this == rhs); }
  std::strong_ordering operator<=>(const CyclicWord& rhs) const {
    return word_ <=> rhs.word_;
  }

 private:
  Word word_;
};

bool is_cyclically_reduced(const Word& w);

// All distinct rotations of a cyclically reduced word.
std::vector<Word> rotations(const Word& w);

// w = conjugator * core * conjugator^-1 with core cyclically reduced; the
// conjugator absorbs the rotation to the canonical representative.
// Throws on the empty word.
std::pair<Word, CyclicWord> cyclic_reduce(const Word& w);

// Literal variant: the core keeps the rotation produced by peeling, so that
// conjugator * core * conjugator^-1 reduces letter-for-letter to w.
std::pair<Word, Word> cyclic_core(const Word& w);

// True iff w1 and w2 are conjugate in the free group.
bool conjugate_equal(const Word& w1, const Word& w2);

// w = root^exponent with the root not a proper power and the exponent
// maximal.  Computed on the cyclic core by period detection.
std::pair<Word, int> root(const Word& w);

// ---- malnormality of a family of cyclic subgroups ----

enum class Violation { ProperPower, ConjugatePair, InverseConjugatePair };

struct MalnormalityViolation {
  int first;   // index into the family
  int second;  // equals first for ProperPower
  Violation reason;
};

struct MalnormalityReport {
  bool is_malnormal = true;
  std::vector<MalnormalityViolation> violations;
};

// In a free group {<a_i>} is a malnormal family iff no a_i is a proper power
// and no two distinct a_i, a_j have conjugate roots up to inversion.
MalnormalityReport is_malnormal_family(const std::vector<Word>& family);

// ---- text I/O ----
// 'a'..'z' are generators 1..26, uppercase letters their inverses.

Word parse_word(const std::string& text, int rank);
// Rank inferred as the largest index used (at least 1).
Word parse_word(const std::string& text);
std::string word_text(const Word& w);

const char* violation_name(Violation v);

}  // namespace gfg::wordcore
