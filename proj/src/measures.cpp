#include "gfg/measures.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "gfg/errors.hpp"
#include "gfg/whitehead.hpp"

namespace gfg::finquot {

namespace {

BigInt int_pow(long long base, int e) {
  BigInt out = 1;
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

void check_tuple_budget(const FiniteGroup& g, int arity, long long budget) {
  if (int_pow(g.order(), arity) > budget)
    throw budget_error("tuple enumeration budget exceeded: |" + g.name() +
                       "|^" + std::to_string(arity) + " > " +
                       std::to_string(budget));
}

// Calls fn for every tuple in G^arity.
template <typename Fn>
void for_each_tuple(const FiniteGroup& g, int arity, Fn&& fn) {
  std::vector<int> tuple(arity, 0);
  for (;;) {
    fn(tuple);
    int pos = arity - 1;
    while (pos >= 0 && ++tuple[pos] == g.order()) {
      tuple[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
}

}  // namespace

WordMeasure::WordMeasure(GroupPtr group, int arity, std::vector<BigInt> counts)
    : group_(std::move(group)), arity_(arity), counts_(std::move(counts)) {
  if (static_cast<int>(counts_.size()) != group_->order())
    throw input_error("measure count vector has wrong length");
  denominator_ = int_pow(group_->order(), arity_);
  BigInt total = 0;
  for (const BigInt& c : counts_) total += c;
  if (total != denominator_)
    throw std::logic_error("measure counts do not sum to |G|^d");
  for (const auto& cls : group_->classes())
    for (int member : cls)
      if (counts_[member] != counts_[cls.front()])
        throw std::logic_error("measure is not a class function");
}

WordMeasure word_measure(const Word& w, GroupPtr group, int arity,
                         long long tuple_budget) {
  if (arity == 0) arity = w.rank();
  if (arity < w.rank())
    throw input_error("measure arity is smaller than the word rank");
  check_tuple_budget(*group, arity, tuple_budget);
  std::vector<BigInt> counts(group->order(), 0);
  for_each_tuple(*group, arity, [&](const std::vector<int>& tuple) {
    counts[eval_word(*group, w, tuple)] += 1;
  });
  return WordMeasure(std::move(group), arity, std::move(counts));
}

bool measures_equal(const Word& w1, const Word& w2, GroupPtr group,
                    long long tuple_budget) {
  int arity = std::max(w1.rank(), w2.rank());
  return word_measure(w1, group, arity, tuple_budget) ==
         word_measure(w2, group, arity, tuple_budget);
}

EquivResult profinite_equiv_test(const Word& w1, const Word& w2,
                                 const std::vector<GroupPtr>& family,
                                 long long tuple_budget) {
  EquivResult out;
  for (const GroupPtr& g : family) {
    try {
      if (!measures_equal(w1, w2, g, tuple_budget)) {
        out.distinguished = true;
        out.distinguishing_group = g->name();
        return out;
      }
    } catch (const budget_error&) {
      out.budget_failures.push_back(g->name());
    }
  }
  return out;
}

Presentation Presentation::make(int generators, std::vector<Word> relators) {
  if (generators < 1) throw input_error("presentation needs >= 1 generator");
  for (const Word& r : relators)
    if (r.rank() != generators)
      throw input_error("relator rank does not match the generator count");
  return Presentation{generators, std::move(relators)};
}

namespace {

bool satisfies_relators(const FiniteGroup& m, const Presentation& p,
                        const std::vector<int>& images) {
  for (const Word& r : p.relators)
    if (eval_word(m, r, images) != m.id()) return false;
  return true;
}

// Homomorphism count with all generator images restricted to the given
// element subset.
BigInt count_homs_into(const Presentation& p, const FiniteGroup& m,
                       const std::vector<int>& subset, long long budget) {
  BigInt combos = 1;
  for (int i = 0; i < p.generators; ++i) combos *= subset.size();
  if (combos > budget) throw budget_error("hom enumeration budget exceeded");
  BigInt count = 0;
  std::vector<int> pick(p.generators, 0), images(p.generators);
  for (;;) {
    for (int i = 0; i < p.generators; ++i) images[i] = subset[pick[i]];
    if (satisfies_relators(m, p, images)) ++count;
    int pos = p.generators - 1;
    while (pos >= 0 && ++pick[pos] == static_cast<int>(subset.size())) {
      pick[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return count;
}

}  // namespace

BigInt count_homs(const Presentation& p, const FiniteGroup& m,
                  long long tuple_budget) {
  std::vector<int> all(m.order());
  std::iota(all.begin(), all.end(), 0);
  return count_homs_into(p, m, all, tuple_budget);
}

BigInt count_epis(const Presentation& p, const FiniteGroup& m,
                  long long tuple_budget, int lattice_cap) {
  auto lattice = subgroup_lattice(m, lattice_cap);  // sorted by size
  std::vector<BigInt> epi(lattice.size(), 0);
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    BigInt homs = count_homs_into(p, m, lattice[i], tuple_budget);
    for (std::size_t j = 0; j < i; ++j) {
      if (std::includes(lattice[i].begin(), lattice[i].end(),
                        lattice[j].begin(), lattice[j].end()))
        homs -= epi[j];
    }
    epi[i] = homs;
  }
  return epi.back();  // the full group sorts last
}

BigInt count_extensions(int d, const Word& a, const FiniteGroup& m, int g,
                        long long tuple_budget) {
  if (a.rank() > d)
    throw input_error("word rank exceeds the generator count");
  if (g < 0 || g >= m.order()) throw input_error("element index out of range");
  check_tuple_budget(m, d, tuple_budget);
  BigInt count = 0;
  for_each_tuple(m, d, [&](const std::vector<int>& tuple) {
    if (eval_word(m, a, tuple) == g) ++count;
  });
  return count;
}

BprimeReport bprime_test(int d, const Word& a,
                         const std::vector<long long>& primes,
                         const std::vector<GroupPtr>& family,
                         long long tuple_budget) {
  BprimeReport report;
  for (const GroupPtr& m : family) {
    BigInt expected = int_pow(m->order(), d - 1);
    for (int g = 0; g < m->order(); ++g) {
      int order = m->element_order(g);
      bool coprime = true;
      for (long long p : primes)
        if (order % p == 0) coprime = false;
      if (!coprime) continue;
      ++report.elements_tested;
      BigInt count = count_extensions(d, a, *m, g, tuple_budget);
      if (count != expected)
        report.deviations.push_back({m->name(), g, count, expected});
    }
  }
  return report;
}

namespace {

void enumerate_reduced(int rank, int max_len, std::vector<Word>& out) {
  std::vector<int> letters;
  out.push_back(wordcore::reduce({}, rank));
  std::function<void()> rec = [&]() {
    if (static_cast<int>(letters.size()) == max_len) return;
    for (int l = -rank; l <= rank; ++l) {
      if (l == 0) continue;
      if (!letters.empty() && letters.back() == -l) continue;
      letters.push_back(l);
      out.push_back(wordcore::Word::from_reduced(letters, rank));
      rec();
      letters.pop_back();
    }
  };
  rec();
}

}  // namespace

RigidityReport rigidity_experiment(int rank, int max_len,
                                   const std::vector<GroupPtr>& family,
                                   long long tuple_budget,
                                   std::size_t orbit_budget) {
  std::vector<Word> words;
  enumerate_reduced(rank, max_len, words);

  RigidityReport report;
  std::map<Word, int> orbit_index;  // canonical form -> orbit id
  std::vector<int> orbit_of(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) {
    Word key = wordcore::orbit_canonical_form(words[i], orbit_budget);
    auto it = orbit_index.find(key);
    if (it == orbit_index.end()) {
      it = orbit_index.emplace(key, static_cast<int>(report.orbit_reps.size()))
               .first;
      report.orbit_reps.push_back(key);
      report.orbit_words.emplace_back();
    }
    orbit_of[i] = it->second;
    report.orbit_words[it->second].push_back(words[i]);
  }

  // measures of every word on every family group, at the ambient rank
  std::vector<std::vector<WordMeasure>> measures;
  measures.reserve(words.size());
  for (const Word& w : words) {
    std::vector<WordMeasure> row;
    row.reserve(family.size());
    for (const GroupPtr& g : family)
      row.push_back(word_measure(w, g, rank, tuple_budget));
    measures.push_back(std::move(row));
  }

  // (i) sanity: words in one orbit are measure-equal on every family group
  std::size_t n_orbits = report.orbit_reps.size();
  std::vector<int> first_of(n_orbits, -1);
  for (std::size_t i = 0; i < words.size(); ++i) {
    int o = orbit_of[i];
    if (first_of[o] < 0) {
      first_of[o] = static_cast<int>(i);
      continue;
    }
    for (std::size_t gi = 0; gi < family.size(); ++gi)
      if (!(measures[i][gi] == measures[first_of[o]][gi]))
        report.same_orbit_failures.emplace_back(
            words[first_of[o]], words[i], family[gi]->name());
  }

  // (ii) which distinct orbits the family separates
  for (std::size_t a = 0; a < n_orbits; ++a)
    for (std::size_t b = a + 1; b < n_orbits; ++b) {
      bool separated = false;
      for (std::size_t gi = 0; gi < family.size() && !separated; ++gi) {
        if (!(measures[first_of[a]][gi] == measures[first_of[b]][gi])) {
          report.separated.emplace_back(static_cast<int>(a),
                                        static_cast<int>(b),
                                        family[gi]->name());
          separated = true;
        }
      }
      if (!separated)
        report.unseparated.emplace_back(static_cast<int>(a),
                                        static_cast<int>(b));
    }
  return report;
}

}  // namespace gfg::finquot
