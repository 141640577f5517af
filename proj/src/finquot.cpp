#include "gfg/finquot.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "gfg/errors.hpp"

namespace gfg::finquot {

using wordcore::Word;

void FiniteGroup::finalize() {
  order_ = static_cast<int>(table_.size());
  if (order_ == 0) throw input_error("empty multiplication table");
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != order_)
      throw input_error("multiplication table is not square");
    for (int v : row)
      if (v < 0 || v >= order_)
        throw input_error("multiplication table entry out of range");
  }
  identity_ = -1;
  for (int e = 0; e < order_; ++e) {
    bool ok = true;
    for (int g = 0; g < order_ && ok; ++g)
      ok = table_[e][g] == g && table_[g][e] == g;
    if (ok) {
      identity_ = e;
      break;
    }
  }
  if (identity_ < 0) throw input_error("table has no identity element");
  inverse_.assign(order_, -1);
  for (int a = 0; a < order_; ++a) {
    for (int b = 0; b < order_; ++b)
      if (table_[a][b] == identity_ && table_[b][a] == identity_) {
        inverse_[a] = b;
        break;
      }
    if (inverse_[a] < 0) throw input_error("table element has no inverse");
  }
  for (int a = 0; a < order_; ++a)
    for (int b = 0; b < order_; ++b)
      for (int c = 0; c < order_; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
          throw input_error("multiplication table is not associative");

  class_of_.assign(order_, -1);
  for (int a = 0; a < order_; ++a) {
    if (class_of_[a] >= 0) continue;
    int cls = static_cast<int>(classes_.size());
    std::vector<int> members;
    for (int g = 0; g < order_; ++g) {
      int c = conjugate(g, a);
      if (class_of_[c] < 0) {
        class_of_[c] = cls;
        members.push_back(c);
      }
    }
    std::sort(members.begin(), members.end());
    classes_.push_back(std::move(members));
  }
}

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n < 1) throw input_error("cyclic group order must be positive");
  FiniteGroup g;
  g.name_ = "C" + std::to_string(n);
  g.table_.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g.table_[a][b] = (a + b) % n;
  g.finalize();
  return g;
}

FiniteGroup FiniteGroup::dihedral(int n) {
  if (n < 1) throw input_error("dihedral parameter must be positive");
  // element i + n*j is r^i s^j with s r s = r^-1
  int order = 2 * n;
  FiniteGroup g;
  g.name_ = "D" + std::to_string(n);
  g.table_.assign(order, std::vector<int>(order));
  auto idx = [n](int i, int j) { return ((i % n) + n) % n + n * (j % 2); };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < 2; ++l) {
          int r = (j == 0) ? i + k : i - k;
          g.table_[idx(i, j)][idx(k, l)] = idx(r, j + l);
        }
  g.finalize();
  return g;
}

namespace {

std::vector<std::vector<int>> permutations_lex(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

bool perm_even(const std::vector<int>& p) {
  int inv = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inv;
  return inv % 2 == 0;
}

FiniteGroup perm_group(std::vector<std::vector<int>> perms, std::string name) {
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> table(perms.size(),
                                      std::vector<int>(perms.size()));
  int n = static_cast<int>(perms[0].size());
  for (std::size_t a = 0; a < perms.size(); ++a)
    for (std::size_t b = 0; b < perms.size(); ++b) {
      std::vector<int> c(n);
      for (int x = 0; x < n; ++x) c[x] = perms[a][perms[b][x]];  // a after b
      table[a][b] = index.at(c);
    }
  return FiniteGroup::from_table(std::move(table), std::move(name));
}

}  // namespace

FiniteGroup FiniteGroup::symmetric(int n) {
  if (n < 1 || n > 6) throw input_error("symmetric group parameter must be 1..6");
  return perm_group(permutations_lex(n), "S" + std::to_string(n));
}

FiniteGroup FiniteGroup::alternating(int n) {
  if (n < 1 || n > 6) throw input_error("alternating group parameter must be 1..6");
  std::vector<std::vector<int>> perms;
  for (auto& p : permutations_lex(n))
    if (perm_even(p)) perms.push_back(p);
  return perm_group(std::move(perms), "A" + std::to_string(n));
}

FiniteGroup FiniteGroup::product(const FiniteGroup& a, const FiniteGroup& b) {
  FiniteGroup g;
  g.name_ = a.name_ + "x" + b.name_;
  int na = a.order(), nb = b.order();
  g.table_.assign(na * nb, std::vector<int>(na * nb));
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j)
      for (int k = 0; k < na; ++k)
        for (int l = 0; l < nb; ++l)
          g.table_[i * nb + j][k * nb + l] = a.mul(i, k) * nb + b.mul(j, l);
  g.finalize();
  return g;
}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> table,
                                    std::string name) {
  FiniteGroup g;
  g.name_ = std::move(name);
  g.table_ = std::move(table);
  g.finalize();
  return g;
}

FiniteGroup FiniteGroup::from_spec(const std::string& spec) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : spec) {
    if (c == 'x') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  auto parse_one = [](const std::string& s) -> FiniteGroup {
    if (s.size() < 2) throw input_error("bad group spec '" + s + "'");
    int n = 0;
    try {
      n = std::stoi(s.substr(1));
    } catch (...) {
      throw input_error("bad group spec '" + s + "'");
    }
    switch (s[0]) {
      case 'C': return cyclic(n);
      case 'D': return dihedral(n);
      case 'S': return symmetric(n);
      case 'A': return alternating(n);
      default: throw input_error("unknown group family in spec '" + s + "'");
    }
  };
  FiniteGroup g = parse_one(parts[0]);
  for (std::size_t i = 1; i < parts.size(); ++i)
    g = product(g, parse_one(parts[i]));
  return g;
}

int FiniteGroup::element_order(int a) const {
  int x = a, k = 1;
  while (x != identity_) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

int FiniteGroup::power(int a, long long e) const {
  int base = e < 0 ? inv(a) : a;
  long long n = e < 0 ? -e : e;
  int acc = identity_;
  for (long long i = 0; i < n; ++i) acc = mul(acc, base);
  return acc;
}

int eval_word(const FiniteGroup& g, const Word& w,
              const std::vector<int>& images) {
  int acc = g.id();
  for (int l : w.letters()) {
    int idx = std::abs(l) - 1;
    if (idx >= static_cast<int>(images.size()))
      throw input_error("word uses a generator with no image");
    acc = g.mul(acc, l > 0 ? images[idx] : g.inv(images[idx]));
  }
  return acc;
}

namespace {

std::uint64_t close_mask(const FiniteGroup& g, std::uint64_t mask) {
  std::vector<int> members;
  for (int i = 0; i < g.order(); ++i)
    if (mask & (1ull << i)) members.push_back(i);
  bool grew = true;
  while (grew) {
    grew = false;
    std::size_t n = members.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        int p = g.mul(members[i], members[j]);
        if (!(mask & (1ull << p))) {
          mask |= 1ull << p;
          members.push_back(p);
          grew = true;
        }
      }
  }
  return mask;
}

}  // namespace

std::vector<int> generated_subgroup(const FiniteGroup& g,
                                    const std::vector<int>& gens) {
  if (g.order() > 64)
    throw budget_error("generated_subgroup supports order <= 64");
  std::uint64_t mask = 1ull << g.id();
  for (int x : gens) mask |= 1ull << x;
  mask = close_mask(g, mask);
  std::vector<int> out;
  for (int i = 0; i < g.order(); ++i)
    if (mask & (1ull << i)) out.push_back(i);
  return out;
}

std::vector<std::vector<int>> subgroup_lattice(const FiniteGroup& g,
                                               int order_cap) {
  if (g.order() > order_cap)
    throw budget_error("subgroup lattice cap exceeded: order " +
                       std::to_string(g.order()) + " > " +
                       std::to_string(order_cap));
  std::set<std::uint64_t> known;
  std::vector<std::uint64_t> queue;
  std::uint64_t trivial = 1ull << g.id();
  known.insert(trivial);
  queue.push_back(trivial);
  while (!queue.empty()) {
    std::uint64_t s = queue.back();
    queue.pop_back();
    for (int x = 0; x < g.order(); ++x) {
      if (s & (1ull << x)) continue;
      std::uint64_t t = close_mask(g, s | (1ull << x));
      if (known.insert(t).second) queue.push_back(t);
    }
  }
  std::vector<std::vector<int>> out;
  for (std::uint64_t mask : known) {
    std::vector<int> members;
    for (int i = 0; i < g.order(); ++i)
      if (mask & (1ull << i)) members.push_back(i);
    out.push_back(std::move(members));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

}  // namespace gfg::finquot
