#include "gfg/smallcancel.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "gfg/errors.hpp"

namespace gfg::smallcancel {

Rational Rational::parse(const std::string& text) {
  Rational r;
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      r.num = std::stoll(text);
      r.den = 1;
    } else {
      r.num = std::stoll(text.substr(0, slash));
      r.den = std::stoll(text.substr(slash + 1));
    }
  } catch (...) {
    throw input_error("bad rational '" + text + "'");
  }
  if (r.den <= 0 || r.num <= 0)
    throw input_error("rational must be positive: '" + text + "'");
  return r;
}

std::string Rational::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

SymmetrizedPresentation symmetrize(const std::vector<Word>& relators) {
  if (relators.empty()) throw input_error("no relators given");
  int rank = relators.front().rank();
  std::set<Word> closed;
  for (const Word& w : relators) {
    if (w.rank() != rank) throw input_error("relator rank mismatch");
    if (w.trivial()) throw input_error("trivial relator");
    Word core = wordcore::cyclic_core(w).second;
    for (const Word& rot : wordcore::rotations(core)) closed.insert(rot);
    for (const Word& rot : wordcore::rotations(core.inverse()))
      closed.insert(rot);
  }
  SymmetrizedPresentation out;
  out.rank = rank;
  out.relators.assign(closed.begin(), closed.end());
  return out;
}

namespace {

Word common_prefix(const Word& a, const Word& b) {
  std::size_t n = std::min(a.length(), b.length());
  std::size_t i = 0;
  while (i < n && a.letters()[i] == b.letters()[i]) ++i;
  return wordcore::Word::from_reduced(
      std::vector<int>(a.letters().begin(), a.letters().begin() + i),
      a.rank());
}

bool is_prefix(const Word& p, const Word& w) {
  if (p.length() > w.length()) return false;
  return std::equal(p.letters().begin(), p.letters().end(),
                    w.letters().begin());
}

}  // namespace

std::vector<Piece> enumerate_pieces(const SymmetrizedPresentation& r) {
  std::map<Word, Piece> by_word;
  for (std::size_t i = 0; i < r.relators.size(); ++i)
    for (std::size_t j = i + 1; j < r.relators.size(); ++j) {
      Word p = common_prefix(r.relators[i], r.relators[j]);
      if (p.trivial()) continue;
      if (!by_word.contains(p))
        by_word.emplace(p, Piece{p, r.relators[i], r.relators[j]});
    }
  std::vector<Piece> out;
  for (auto& [w, piece] : by_word) out.push_back(piece);
  return out;
}

MetricReport check_metric(const SymmetrizedPresentation& r,
                          const Rational& lambda) {
  if (lambda.num >= lambda.den)
    throw input_error("lambda must satisfy 0 < lambda < 1");
  MetricReport report;
  auto pieces = enumerate_pieces(r);
  for (const Piece& piece : pieces) {
    for (const Word& rel : r.relators) {
      if (!is_prefix(piece.word, rel)) continue;
      long long pl = static_cast<long long>(piece.word.length());
      long long rl = static_cast<long long>(rel.length());
      // worst offender = largest |piece|/|relator|
      bool better = !report.worst;
      if (report.worst) {
        long long cl = static_cast<long long>(report.worst->piece.length());
        long long crl = static_cast<long long>(report.worst->relator.length());
        better = pl * crl > cl * rl;
      }
      if (better)
        report.worst = MetricOffender{piece.word, rel, Rational{pl, rl}};
      if (pl * lambda.den >= lambda.num * rl) report.passes = false;
    }
  }
  return report;
}

std::optional<int> find_exponents(const std::vector<Word>& family,
                                  const Rational& lambda, int budget) {
  auto mal = wordcore::is_malnormal_family(family);
  if (!mal.is_malnormal) {
    std::string msg = "family is not malnormal:";
    for (const auto& v : mal.violations)
      msg += " (" + std::to_string(v.first) + "," + std::to_string(v.second) +
             ":" + wordcore::violation_name(v.reason) + ")";
    throw input_error(msg);
  }
  for (int n = 1; n <= budget; ++n) {
    std::vector<Word> relators;
    relators.reserve(family.size());
    for (const Word& a : family) relators.push_back(a.pow(n));
    if (check_metric(symmetrize(relators), lambda).passes) return n;
  }
  return std::nullopt;
}

}  // namespace gfg::smallcancel
