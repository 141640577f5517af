#include "gfg/whitehead.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <queue>
#include <set>

namespace gfg::wordcore {

namespace {

Word substitute(const std::vector<Word>& images, const Word& w, int rank) {
  std::vector<Letter> out;
  for (Letter l : w.letters()) {
    const Word& img = images[std::abs(l) - 1];
    if (l > 0)
      out.insert(out.end(), img.letters().begin(), img.letters().end());
    else {
      const auto& il = img.letters();
      for (auto it = il.rbegin(); it != il.rend(); ++it) out.push_back(-*it);
    }
  }
  return reduce(std::move(out), rank);
}

std::vector<Word> generator_words(int rank) {
  std::vector<Word> gens;
  gens.reserve(rank);
  for (int i = 1; i <= rank; ++i) gens.push_back(generator(i, rank));
  return gens;
}

}  // namespace

FreeAutomorphism FreeAutomorphism::from_images(
    std::vector<Word> images, std::vector<Word> inverse_images) {
  if (images.empty() || images.size() != inverse_images.size())
    throw input_error("automorphism image lists have mismatched sizes");
  int rank = static_cast<int>(images.size());
  for (const Word& w : images)
    if (w.rank() != rank) throw input_error("automorphism image rank mismatch");
  for (const Word& w : inverse_images)
    if (w.rank() != rank) throw input_error("automorphism image rank mismatch");
  for (int i = 1; i <= rank; ++i) {
    Word x = generator(i, rank);
    if (substitute(images, inverse_images[i - 1], rank) != x ||
        substitute(inverse_images, images[i - 1], rank) != x)
      throw input_error("claimed inverse does not invert the automorphism");
  }
  return FreeAutomorphism(rank, std::move(images), std::move(inverse_images));
}

FreeAutomorphism FreeAutomorphism::identity(int rank) {
  auto gens = generator_words(rank);
  return FreeAutomorphism(rank, gens, gens);
}

FreeAutomorphism FreeAutomorphism::inner(const Word& g) {
  int rank = g.rank();
  std::vector<Word> fwd, bwd;
  Word gi = g.inverse();
  for (int i = 1; i <= rank; ++i) {
    Word x = generator(i, rank);
    fwd.push_back(x.conjugated_by(g));
    bwd.push_back(x.conjugated_by(gi));
  }
  return FreeAutomorphism(rank, std::move(fwd), std::move(bwd));
}

FreeAutomorphism FreeAutomorphism::signed_permutation(std::vector<int> targets,
                                                      int rank) {
  if (static_cast<int>(targets.size()) != rank)
    throw input_error("signed permutation has wrong size");
  std::vector<Word> fwd(rank), bwd(rank);
  std::vector<bool> seen(rank, false);
  for (int i = 0; i < rank; ++i) {
    int t = targets[i];
    int idx = std::abs(t);
    if (idx < 1 || idx > rank || seen[idx - 1])
      throw input_error("targets are not a signed permutation");
    seen[idx - 1] = true;
    fwd[i] = reduce({t}, rank);
    bwd[idx - 1] = reduce({t > 0 ? i + 1 : -(i + 1)}, rank);
  }
  return FreeAutomorphism(rank, std::move(fwd), std::move(bwd));
}

Word FreeAutomorphism::apply(const Word& w) const {
  if (w.rank() != rank_)
    throw input_error("rank mismatch applying automorphism");
  return substitute(images_, w, rank_);
}

Word FreeAutomorphism::apply_inverse(const Word& w) const {
  if (w.rank() != rank_)
    throw input_error("rank mismatch applying automorphism");
  return substitute(inverse_images_, w, rank_);
}

FreeAutomorphism FreeAutomorphism::compose(const FreeAutomorphism& rhs) const {
  if (rank_ != rhs.rank_) throw input_error("composing automorphisms of different rank");
  std::vector<Word> fwd, bwd;
  for (int i = 0; i < rank_; ++i) {
    fwd.push_back(substitute(images_, rhs.images_[i], rank_));
    bwd.push_back(substitute(rhs.inverse_images_, inverse_images_[i], rank_));
  }
  return FreeAutomorphism(rank_, std::move(fwd), std::move(bwd));
}

FreeAutomorphism FreeAutomorphism::inverse() const {
  return FreeAutomorphism(rank_, inverse_images_, images_);
}

Word apply_automorphism(const FreeAutomorphism& phi, const Word& w) {
  return phi.apply(w);
}

FreeAutomorphism WhiteheadMove::to_automorphism(int rank) const {
  Letter a = multiplier;
  std::vector<Word> fwd, bwd;
  auto in_set = [&](Letter l) { return set[letter_key(l)]; };
  for (int g = 1; g <= rank; ++g) {
    if (g == std::abs(a)) {
      fwd.push_back(generator(g, rank));
      bwd.push_back(generator(g, rank));
      continue;
    }
    bool pos = in_set(g), neg = in_set(-g);
    std::vector<Letter> f, b;
    if (pos && !neg) {
      f = {g, a};
      b = {g, -a};
    } else if (!pos && neg) {
      f = {-a, g};
      b = {a, g};
    } else if (pos && neg) {
      f = {-a, g, a};
      b = {a, g, -a};
    } else {
      f = {g};
      b = {g};
    }
    fwd.push_back(reduce(std::move(f), rank));
    bwd.push_back(reduce(std::move(b), rank));
  }
  return FreeAutomorphism::from_images(std::move(fwd), std::move(bwd));
}

std::vector<WhiteheadMove> whitehead_moves(int rank) {
  std::vector<WhiteheadMove> moves;
  int n_letters = 2 * rank;
  // Letters in letter_key order excluding a and a^-1.
  for (int ak = 0; ak < n_letters; ++ak) {
    Letter a = (ak % 2 == 0) ? ak / 2 + 1 : -(ak / 2 + 1);
    std::vector<int> others;
    for (int k = 0; k < n_letters; ++k)
      if (k != letter_key(a) && k != letter_key(-a)) others.push_back(k);
    std::uint64_t limit = 1ull << others.size();
    for (std::uint64_t mask = 1; mask < limit; ++mask) {
      // mask == limit-1 is conjugation by a^-1; a no-op on cyclic words.
      if (mask + 1 == limit) continue;
      WhiteheadMove mv;
      mv.multiplier = a;
      mv.set.assign(n_letters, false);
      mv.set[letter_key(a)] = true;
      for (std::size_t b = 0; b < others.size(); ++b)
        if (mask & (1ull << b)) mv.set[others[b]] = true;
      moves.push_back(std::move(mv));
    }
  }
  return moves;
}

namespace {

std::size_t cyclic_length(const Word& w) {
  if (w.trivial()) return 0;
  return cyclic_core(w).second.length();
}

struct MoveTable {
  std::vector<FreeAutomorphism> autos;  // type I generators then type II
};

MoveTable level_moves(int rank) {
  MoveTable t;
  // Type I generators: single inversions and adjacent-value transpositions
  // generate the signed permutation group.
  for (int i = 1; i <= rank; ++i) {
    std::vector<int> targets;
    for (int j = 1; j <= rank; ++j) targets.push_back(j == i ? -j : j);
    t.autos.push_back(FreeAutomorphism::signed_permutation(targets, rank));
  }
  for (int i = 1; i <= rank; ++i)
    for (int j = i + 1; j <= rank; ++j) {
      std::vector<int> targets;
      for (int k = 1; k <= rank; ++k)
        targets.push_back(k == i ? j : (k == j ? i : k));
      t.autos.push_back(FreeAutomorphism::signed_permutation(targets, rank));
    }
  for (const auto& mv : whitehead_moves(rank))
    t.autos.push_back(mv.to_automorphism(rank));
  return t;
}

}  // namespace

std::pair<Word, FreeAutomorphism> whitehead_minimize(const Word& w) {
  if (w.trivial()) throw input_error("whitehead_minimize of the trivial word");
  int rank = w.rank();
  auto moves = whitehead_moves(rank);
  std::vector<FreeAutomorphism> autos;
  autos.reserve(moves.size());
  for (const auto& mv : moves) autos.push_back(mv.to_automorphism(rank));

  FreeAutomorphism phi = FreeAutomorphism::identity(rank);
  Word cur = w;
  for (;;) {
    auto [conj, canon] = cyclic_reduce(cur);
    if (canon.word() != cur)
      phi = FreeAutomorphism::inner(conj.inverse()).compose(phi);
    cur = canon.word();
    bool improved = false;
    for (const auto& sigma : autos) {
      Word cand = sigma.apply(cur);
      if (cyclic_length(cand) < cur.length()) {
        phi = sigma.compose(phi);
        cur = cand;
        improved = true;
        break;
      }
    }
    if (!improved) return {cur, phi};
  }
}

std::optional<FreeAutomorphism> aut_orbit_equal(const Word& w1, const Word& w2,
                                                std::size_t max_visited) {
  if (w1.rank() != w2.rank())
    throw input_error("rank mismatch in orbit test");
  int rank = w1.rank();
  if (w1.trivial() || w2.trivial()) {
    if (w1.trivial() && w2.trivial())
      return FreeAutomorphism::identity(rank);
    return std::nullopt;
  }
  auto [m1, alpha] = whitehead_minimize(w1);
  auto [m2, beta] = whitehead_minimize(w2);
  if (m1.length() != m2.length()) return std::nullopt;

  MoveTable table = level_moves(rank);
  std::size_t level = m1.length();

  Word start = m1;
  Word target = m2;
  // parent word and index of the move that produced the key
  std::map<Word, std::pair<Word, int>> parent;
  std::queue<Word> queue;
  parent.emplace(start, std::make_pair(start, -1));
  queue.push(start);
  bool found = (start == target);
  while (!queue.empty() && !found) {
    Word state = queue.front();
    queue.pop();
    for (int mi = 0; mi < static_cast<int>(table.autos.size()) && !found; ++mi) {
      Word im = table.autos[mi].apply(state);
      if (cyclic_length(im) != level) continue;
      Word next = cyclic_reduce(im).second.word();
      if (parent.contains(next)) continue;
      if (parent.size() >= max_visited)
        throw budget_error("orbit search exceeded visited-word budget");
      parent.emplace(next, std::make_pair(state, mi));
      if (next == target) found = true;
      queue.push(next);
    }
  }
  if (!found) return std::nullopt;

  std::vector<int> chain;
  for (Word at = target; ; ) {
    auto& [prev, mi] = parent.at(at);
    if (mi < 0) break;
    chain.push_back(mi);
    at = prev;
  }
  std::reverse(chain.begin(), chain.end());

  FreeAutomorphism psi = FreeAutomorphism::identity(rank);
  Word e = start;
  for (int mi : chain) {
    psi = table.autos[mi].compose(psi);
    e = table.autos[mi].apply(e);
  }
  // e is conjugate to the target at the same cyclic length
  auto [s, canon] = cyclic_reduce(e);
  if (canon.word() != target)
    throw std::logic_error("orbit witness reconstruction failed");
  FreeAutomorphism witness = beta.inverse()
                                 .compose(FreeAutomorphism::inner(s.inverse()))
                                 .compose(psi)
                                 .compose(alpha);
  if (witness.apply(w1) != w2)
    throw std::logic_error("orbit witness does not map w1 to w2");
  return witness;
}

Word orbit_canonical_form(const Word& w, std::size_t max_visited) {
  if (w.trivial()) return Word(w.rank());
  int rank = w.rank();
  Word m = whitehead_minimize(w).first;
  std::size_t level = m.length();
  MoveTable table = level_moves(rank);
  std::set<Word> visited{m};
  std::queue<Word> queue;
  queue.push(m);
  Word least = m;
  while (!queue.empty()) {
    Word state = queue.front();
    queue.pop();
    for (const auto& sigma : table.autos) {
      Word im = sigma.apply(state);
      if (cyclic_length(im) != level) continue;
      Word next = cyclic_reduce(im).second.word();
      if (visited.contains(next)) continue;
      if (visited.size() >= max_visited)
        throw budget_error("orbit closure exceeded visited-word budget");
      visited.insert(next);
      if (next < least) least = next;
      queue.push(next);
    }
  }
  return least;
}

bool is_primitive(const Word& w) {
  if (w.trivial()) throw input_error("primitivity of the trivial word");
  return whitehead_minimize(w).first.length() == 1;
}

AlgebraicClosure algebraic_closure(const Word& w) {
  if (w.trivial()) throw input_error("algebraic closure of the trivial word");
  int rank = w.rank();
  auto [m, phi] = whitehead_minimize(w);
  std::vector<bool> used(rank, false);
  for (Letter l : m.letters()) used[std::abs(l) - 1] = true;
  std::vector<int> support;
  for (int i = 1; i <= rank; ++i)
    if (used[i - 1]) support.push_back(i);

  // Permutation sending x_1..x_r to the support, the rest to the complement.
  std::vector<int> targets;
  targets.reserve(rank);
  for (int i : support) targets.push_back(i);
  for (int i = 1; i <= rank; ++i)
    if (!used[i - 1]) targets.push_back(i);
  FreeAutomorphism perm = FreeAutomorphism::signed_permutation(targets, rank);
  FreeAutomorphism witness = phi.inverse().compose(perm);

  AlgebraicClosure out{std::vector<Word>{}, witness};
  for (std::size_t j = 0; j < support.size(); ++j)
    out.factor_basis.push_back(
        witness.apply(generator(static_cast<int>(j) + 1, rank)));
  return out;
}

}  // namespace gfg::wordcore
