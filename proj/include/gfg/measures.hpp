#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "gfg/finquot.hpp"
#include "gfg/word.hpp"

namespace gfg::finquot {

using BigInt = boost::multiprecision::cpp_int;
using wordcore::Word;

inline constexpr long long kDefaultTupleBudget = 100'000'000;

// The pushforward of the uniform measure on G^arity under the substitution
// map of a word: counts[g] = #{tuples : w(tuple) = g}, denominator
// |G|^arity.  Exact; always a class function.
class WordMeasure {
 public:
  WordMeasure(GroupPtr group, int arity, std::vector<BigInt> counts);

  const GroupPtr& group() const { return group_; }
  int arity() const { return arity_; }
  const BigInt& denominator() const { return denominator_; }
  const std::vector<BigInt>& counts() const { return counts_; }

  bool operator==(const WordMeasure& rhs) const {
    return arity_ == rhs.arity_ && counts_ == rhs.counts_;
  }

 private:
  GroupPtr group_;
  int arity_;
  BigInt denominator_;
  std::vector<BigInt> counts_;
};

// arity 0 means "use the rank of w".  Throws budget_error when |G|^arity
// exceeds the tuple budget.
WordMeasure word_measure(const Word& w, GroupPtr group, int arity = 0,
                         long long tuple_budget = kDefaultTupleBudget);

// Exact equality of count vectors at the common arity max(rank w1, rank w2).
bool measures_equal(const Word& w1, const Word& w2, GroupPtr group,
                    long long tuple_budget = kDefaultTupleBudget);

struct EquivResult {
  bool distinguished = false;
  std::string distinguishing_group;  // set when distinguished
  std::vector<std::string> budget_failures;
  bool partial() const { return !distinguished && !budget_failures.empty(); }
};

// First family group with unequal measures certifies distinct
// Aut-orbits in the profinite sense; indistinguishability over a finite
// family is only evidence.
EquivResult profinite_equiv_test(const Word& w1, const Word& w2,
                                 const std::vector<GroupPtr>& family,
                                 long long tuple_budget = kDefaultTupleBudget);

// ---- homomorphism counting ----

struct Presentation {
  int generators = 1;
  std::vector<Word> relators;  // words of rank = generators

  static Presentation make(int generators, std::vector<Word> relators);
};

BigInt count_homs(const Presentation& p, const FiniteGroup& m,
                  long long tuple_budget = kDefaultTupleBudget);

// Epi(P, M) via Hom(P, N) = sum over subgroups of the epimorphism counts,
// solved recursively down the subgroup lattice.
BigInt count_epis(const Presentation& p, const FiniteGroup& m,
                  long long tuple_budget = kDefaultTupleBudget,
                  int lattice_cap = 48);

// #{phi: F_d -> M : phi(a) = g}.
BigInt count_extensions(int d, const Word& a, const FiniteGroup& m, int g,
                        long long tuple_budget = kDefaultTupleBudget);

struct BprimeDeviation {
  std::string group;
  int element;
  BigInt count;
  BigInt expected;
};

struct BprimeReport {
  // Elements with order coprime to every prime in P whose extension count
  // differs from |M|^{d-1}.
  std::vector<BprimeDeviation> deviations;
  long long elements_tested = 0;
};

BprimeReport bprime_test(int d, const Word& a,
                         const std::vector<long long>& primes,
                         const std::vector<GroupPtr>& family,
                         long long tuple_budget = kDefaultTupleBudget);

// ---- the rigidity experiment ----

struct RigidityReport {
  // Orbit representatives (canonical forms), with the words of each orbit.
  std::vector<Word> orbit_reps;
  std::vector<std::vector<Word>> orbit_words;
  // Words in one orbit whose measures differ on some family group; the
  // finite shadow says this must stay empty.
  std::vector<std::tuple<Word, Word, std::string>> same_orbit_failures;
  // (orbit index i, orbit index j, first separating group).
  std::vector<std::tuple<int, int, std::string>> separated;
  // Orbit pairs no family group separates.
  std::vector<std::pair<int, int>> unseparated;
};

// Enumerates all words of length <= max_len in rank generators, partitions
// them into Aut(F)-orbits, and tests which orbits the family separates.
RigidityReport rigidity_experiment(int rank, int max_len,
                                   const std::vector<GroupPtr>& family,
                                   long long tuple_budget = kDefaultTupleBudget,
                                   std::size_t orbit_budget = 1'000'000);

}  // namespace gfg::finquot
