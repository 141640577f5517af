#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gfg/word.hpp"

namespace gfg::smallcancel {

using wordcore::Word;

// Exact positive rational, used for the metric condition bound.
struct Rational {
  long long num = 1;
  long long den = 1;

  static Rational parse(const std::string& text);  // "1/6" or "1"
  std::string str() const;
};

// Relators closed under cyclic permutation and inversion, freely and
// cyclically reduced, deduplicated and sorted.
struct SymmetrizedPresentation {
  int rank = 1;
  std::vector<Word> relators;
};

SymmetrizedPresentation symmetrize(const std::vector<Word>& relators);

// A maximal common initial segment of two distinct relators.
struct Piece {
  Word word;
  Word witness_a, witness_b;
};

std::vector<Piece> enumerate_pieces(const SymmetrizedPresentation& r);

struct MetricOffender {
  Word piece;
  Word relator;
  Rational ratio;  // |piece| / |relator|, exact
};

struct MetricReport {
  bool passes = true;
  std::optional<MetricOffender> worst;
};

// C'(lambda): every piece occurring inside a relator r is shorter than
// lambda |r|.  Because the relator set is rotation-closed, prefix
// occurrences capture all subword occurrences.
MetricReport check_metric(const SymmetrizedPresentation& r,
                          const Rational& lambda);

// Smallest uniform exponent n <= budget such that {a^n : a in A} satisfies
// C'(lambda); std::nullopt when the budget is exhausted.  Requires A to be a
// malnormal family without proper powers.
std::optional<int> find_exponents(const std::vector<Word>& family,
                                  const Rational& lambda, int budget = 512);

}  // namespace gfg::smallcancel
