#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "gfg/word.hpp"

namespace gfg::finquot {

// A finite group given by its full multiplication table, with element
// indices 0..order-1.  Group axioms are verified over the whole table at
// construction, also for the built-in families.
class FiniteGroup {
 public:
  static FiniteGroup cyclic(int n);
  static FiniteGroup dihedral(int n);     // order 2n
  static FiniteGroup symmetric(int n);    // n <= 6
  static FiniteGroup alternating(int n);  // n <= 6
  static FiniteGroup product(const FiniteGroup& a, const FiniteGroup& b);
  static FiniteGroup from_table(std::vector<std::vector<int>> table,
                                std::string name);
  // "C6", "D4", "S3", "A5", and direct products like "C2xC2".
  static FiniteGroup from_spec(const std::string& spec);

  int order() const { return order_; }
  const std::string& name() const { return name_; }
  int mul(int a, int b) const { return table_[a][b]; }
  int inv(int a) const { return inverse_[a]; }
  int id() const { return identity_; }
  int conjugate(int g, int x) const { return mul(mul(g, x), inv(g)); }
  int element_order(int a) const;
  int power(int a, long long e) const;

  const std::vector<std::vector<int>>& table() const { return table_; }
  const std::vector<std::vector<int>>& classes() const { return classes_; }
  int class_of(int a) const { return class_of_[a]; }

  bool operator==(const FiniteGroup& rhs) const {
    return table_ == rhs.table_;
  }

 private:
  FiniteGroup() = default;
  void finalize();  // identity, inverses, axiom check, conjugacy classes

  std::string name_;
  int order_ = 0;
  int identity_ = 0;
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
  std::vector<std::vector<int>> classes_;
  std::vector<int> class_of_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

inline GroupPtr make_group(const std::string& spec) {
  return std::make_shared<const FiniteGroup>(FiniteGroup::from_spec(spec));
}

// Evaluates a free-group word at the given generator images.
int eval_word(const FiniteGroup& g, const wordcore::Word& w,
              const std::vector<int>& images);

// All subgroups, as sorted element-index sets, ordered by (size, elements).
// Throws budget_error when the order exceeds the cap.
std::vector<std::vector<int>> subgroup_lattice(const FiniteGroup& g,
                                               int order_cap = 48);

// Smallest subgroup containing the given elements, as a sorted index set.
std::vector<int> generated_subgroup(const FiniteGroup& g,
                                    const std::vector<int>& gens);

}  // namespace gfg::finquot
