#include "gfg/word.hpp"

#include <algorithm>
#include <cstdlib>

namespace gfg::wordcore {

namespace {

void check_letter(Letter l, int rank) {
  int idx = std::abs(l);
  if (idx < 1 || idx > rank)
    throw input_error("letter index " + std::to_string(l) +
                      " out of range for rank " + std::to_string(rank));
}

}  // namespace

Word reduce(std::vector<Letter> letters, int rank) {
  Word w(rank);
  std::vector<Letter> out;
  out.reserve(letters.size());
  for (Letter l : letters) {
    check_letter(l, rank);
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  w.letters_ = std::move(out);
  return w;
}

Word Word::from_reduced(std::vector<Letter> letters, int rank) {
  Word w = reduce(letters, rank);
  if (w.letters() != letters)
    throw input_error("letter sequence is not freely reduced");
  return w;
}

Word generator(int i, int rank) { return reduce({i}, rank); }

Word Word::inverse() const {
  Word w(rank_);
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    w.letters_.push_back(-*it);
  return w;
}

Word Word::operator*(const Word& rhs) const {
  if (rank_ != rhs.rank_) throw input_error("rank mismatch in word product");
  std::vector<Letter> cat = letters_;
  cat.insert(cat.end(), rhs.letters_.begin(), rhs.letters_.end());
  return reduce(std::move(cat), rank_);
}

Word Word::pow(long long e) const {
  Word base = e < 0 ? inverse() : *this;
  long long n = e < 0 ? -e : e;
  Word acc(rank_);
  for (long long i = 0; i < n; ++i) acc = acc * base;
  return acc;
}

Word Word::conjugated_by(const Word& c) const { return c * *this * c.inverse(); }

std::strong_ordering Word::operator<=>(const Word& rhs) const {
  if (auto c = letters_.size() <=> rhs.letters_.size(); c != 0) return c;
  for (std::size_t i = 0; i < letters_.size(); ++i)
    if (auto c = letter_key(letters_[i]) <=> letter_key(rhs.letters_[i]); c != 0)
      return c;
  return rank_ <=> rhs.rank_;
}

bool is_cyclically_reduced(const Word& w) {
  const auto& l = w.letters();
  return l.size() < 2 || l.front() != -l.back();
}

std::vector<Word> rotations(const Word& w) {
  std::vector<Word> out;
  const auto& l = w.letters();
  std::size_t n = l.size();
  for (std::size_t k = 0; k < std::max<std::size_t>(n, 1); ++k) {
    std::vector<Letter> rot;
    rot.reserve(n);
    for (std::size_t i = 0; i < n; ++i) rot.push_back(l[(k + i) % n]);
    Word r = Word::from_reduced(rot, w.rank());
    if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
    if (n == 0) break;
  }
  return out;
}

namespace {

// Index of the lexicographically least rotation under letter_key.
std::size_t least_rotation_index(const std::vector<Letter>& l) {
  std::size_t n = l.size();
  std::size_t best = 0;
  for (std::size_t k = 1; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      int a = letter_key(l[(k + i) % n]);
      int b = letter_key(l[(best + i) % n]);
      if (a != b) {
        if (a < b) best = k;
        break;
      }
    }
  }
  return best;
}

}  // namespace

CyclicWord CyclicWord::canonical(const Word& w) {
  if (!is_cyclically_reduced(w))
    throw input_error("word is not cyclically reduced");
  CyclicWord c;
  const auto& l = w.letters();
  if (l.empty()) {
    c.word_ = w;
    return c;
  }
  std::size_t k = least_rotation_index(l);
  std::vector<Letter> rot;
  rot.reserve(l.size());
  for (std::size_t i = 0; i < l.size(); ++i) rot.push_back(l[(k + i) % l.size()]);
  c.word_ = Word::from_reduced(std::move(rot), w.rank());
  return c;
}

std::pair<Word, Word> cyclic_core(const Word& w) {
  if (w.trivial()) throw input_error("cyclic reduction of the empty word");
  const auto& l = w.letters();
  std::size_t lo = 0, hi = l.size();
  while (hi - lo >= 2 && l[lo] == -l[hi - 1]) {
    ++lo;
    --hi;
  }
  std::vector<Letter> conj(l.begin(), l.begin() + lo);
  std::vector<Letter> core(l.begin() + lo, l.begin() + hi);
  return {Word::from_reduced(std::move(conj), w.rank()),
          Word::from_reduced(std::move(core), w.rank())};
}

std::pair<Word, CyclicWord> cyclic_reduce(const Word& w) {
  auto [conj, core] = cyclic_core(w);
  CyclicWord canon = CyclicWord::canonical(core);
  // core = p * canon * p^-1 where p is the prefix before the least rotation.
  std::size_t k = least_rotation_index(core.letters());
  std::vector<Letter> prefix(core.letters().begin(),
                             core.letters().begin() + k);
  Word p = Word::from_reduced(std::move(prefix), w.rank());
  return {conj * p, canon};
}

bool conjugate_equal(const Word& w1, const Word& w2) {
  if (w1.rank() != w2.rank())
    throw input_error("rank mismatch in conjugacy test");
  if (w1.trivial() || w2.trivial()) return w1.trivial() && w2.trivial();
  return cyclic_reduce(w1).second == cyclic_reduce(w2).second;
}

std::pair<Word, int> root(const Word& w) {
  if (w.trivial()) throw input_error("root of the empty word");
  auto [conj, core] = cyclic_core(w);
  const auto& l = core.letters();
  std::size_t n = l.size();
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = 0; i + d < n && periodic; ++i)
      periodic = (l[i] == l[i + d]);
    if (periodic) {
      std::vector<Letter> block(l.begin(), l.begin() + d);
      Word r = Word::from_reduced(std::move(block), w.rank());
      return {r.conjugated_by(conj), static_cast<int>(n / d)};
    }
  }
  return {w, 1};  // unreachable: d = n always matches
}

MalnormalityReport is_malnormal_family(const std::vector<Word>& family) {
  MalnormalityReport report;
  std::vector<CyclicWord> roots, inv_roots;
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (family[i].trivial())
      throw input_error("trivial word in malnormal family");
    auto [r, e] = root(family[i]);
    if (e > 1) {
      report.violations.push_back(
          {static_cast<int>(i), static_cast<int>(i), Violation::ProperPower});
    }
    CyclicWord c = cyclic_reduce(r).second;
    roots.push_back(c);
    inv_roots.push_back(c.inverse());
  }
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      if (family[i] == family[j]) continue;  // the same element listed twice
      if (roots[i] == roots[j]) {
        report.violations.push_back({static_cast<int>(i), static_cast<int>(j),
                                     Violation::ConjugatePair});
      } else if (roots[i] == inv_roots[j]) {
        report.violations.push_back({static_cast<int>(i), static_cast<int>(j),
                                     Violation::InverseConjugatePair});
      }
    }
  }
  report.is_malnormal = report.violations.empty();
  return report;
}

Word parse_word(const std::string& text, int rank) {
  std::vector<Letter> letters;
  for (char ch : text) {
    if (ch == ' ' || ch == '\t') continue;
    if (ch >= 'a' && ch <= 'z')
      letters.push_back(ch - 'a' + 1);
    else if (ch >= 'A' && ch <= 'Z')
      letters.push_back(-(ch - 'A' + 1));
    else
      throw input_error(std::string("bad character '") + ch + "' in word");
  }
  return reduce(std::move(letters), rank);
}

Word parse_word(const std::string& text) {
  int rank = 1;
  for (char ch : text) {
    if (ch >= 'a' && ch <= 'z') rank = std::max(rank, ch - 'a' + 1);
    if (ch >= 'A' && ch <= 'Z') rank = std::max(rank, ch - 'A' + 1);
  }
  return parse_word(text, rank);
}

std::string word_text(const Word& w) {
  std::string out;
  for (Letter l : w.letters()) {
    int idx = std::abs(l);
    if (idx > 26)
      throw input_error("word has generator index beyond 'z'; use JSON form");
    out += static_cast<char>((l > 0 ? 'a' : 'A') + idx - 1);
  }
  return out;
}

const char* violation_name(Violation v) {
  switch (v) {
    case Violation::ProperPower: return "proper-power";
    case Violation::ConjugatePair: return "conjugate-pair";
    case Violation::InverseConjugatePair: return "inverse-conjugate-pair";
  }
  return "?";
}

}  // namespace gfg::wordcore
