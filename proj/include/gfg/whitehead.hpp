#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gfg/word.hpp"

namespace gfg::wordcore {

// An automorphism of the free group, stored extensionally as generator
// images together with the images of a verified inverse.
class FreeAutomorphism {
 public:
  // Checks that the two image lists compose to the identity both ways.
  static FreeAutomorphism from_images(std::vector<Word> images,
                                      std::vector<Word> inverse_images);

  static FreeAutomorphism identity(int rank);
  // x_i -> g x_i g^-1.
  static FreeAutomorphism inner(const Word& g);
  // x_{i+1} -> x_{|targets[i]|}^{sign targets[i]}; targets is a signed
  // permutation of 1..rank.
  static FreeAutomorphism signed_permutation(std::vector<int> targets,
                                             int rank);

  int rank() const { return rank_; }
  const std::vector<Word>& images() const { return images_; }
  const std::vector<Word>& inverse_images() const { return inverse_images_; }

  Word apply(const Word& w) const;
  Word apply_inverse(const Word& w) const;

  // (*this) o rhs: first rhs, then this.
  FreeAutomorphism compose(const FreeAutomorphism& rhs) const;
  FreeAutomorphism inverse() const;

  // Extensional equality: equal images on all generators.
  bool operator==(const FreeAutomorphism& rhs) const {
    return rank_ == rhs.rank_ && images_ == rhs.images_;
  }

 private:
  FreeAutomorphism(int rank, std::vector<Word> images,
                   std::vector<Word> inverse_images)
      : rank_(rank),
        images_(std::move(images)),
        inverse_images_(std::move(inverse_images)) {}

  int rank_;
  std::vector<Word> images_;
  std::vector<Word> inverse_images_;
};

Word apply_automorphism(const FreeAutomorphism& phi, const Word& w);

// A Whitehead automorphism of the second type, determined by a multiplier
// letter a and a letter set A with a in A, a^-1 not in A.  Acts by
//   x -> x a        if x in A, x^-1 not in A
//   x -> a^-1 x     if x not in A, x^-1 in A
//   x -> a^-1 x a   if both x and x^-1 in A
// and fixes a.
struct WhiteheadMove {
  Letter multiplier;
  // Indexed by letter_key; true for members of A.
  std::vector<bool> set;

  FreeAutomorphism to_automorphism(int rank) const;
};

// All non-degenerate type II moves for the given rank, in a fixed order.
std::vector<WhiteheadMove> whitehead_moves(int rank);

// Minimal-length representative of the Aut(F)-orbit of w, found by greedily
// applying length-reducing type II moves to the cyclic word.  Returns the
// (cyclically reduced, canonical) minimum and a witness with
// witness(w) == minimum.
std::pair<Word, FreeAutomorphism> whitehead_minimize(const Word& w);

// A witness phi with phi(w1) == w2 if the words lie in the same
// Aut(F)-orbit, std::nullopt otherwise.  Decided by minimizing both words
// and searching the minimal level through length-preserving Whitehead
// automorphisms; visiting more than max_visited words raises budget_error.
std::optional<FreeAutomorphism> aut_orbit_equal(
    const Word& w1, const Word& w2, std::size_t max_visited = 1'000'000);

// Least canonical cyclic word in the closed minimal level set of the
// Aut(F)-orbit of w.  Two words get the same form iff they lie in the same
// orbit, which makes it usable as an orbit key.
Word orbit_canonical_form(const Word& w, std::size_t max_visited = 1'000'000);

// True iff w belongs to a basis of the free group; a Whitehead-minimal word
// is primitive iff it is a single letter.
bool is_primitive(const Word& w);

struct AlgebraicClosure {
  // Free basis of the smallest free factor containing w.
  std::vector<Word> factor_basis;
  // Maps the coordinate factor <x_1..x_r> onto that factor:
  // witness(x_j) == factor_basis[j-1].
  FreeAutomorphism witness;
};

AlgebraicClosure algebraic_closure(const Word& w);

}  // namespace gfg::wordcore
