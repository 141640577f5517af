#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <vector>

#include "gfg/finquot.hpp"
#include "gfg/word.hpp"

namespace gfg::foxcalc {

using BigInt = boost::multiprecision::cpp_int;
using wordcore::Word;

// An element of the integer group ring Z[F]: a finite formal sum of freely
// reduced words with nonzero integer coefficients.
class GroupRingElement {
 public:
  explicit GroupRingElement(int rank) : rank_(rank) {}

  static GroupRingElement zero(int rank) { return GroupRingElement(rank); }
  static GroupRingElement one(int rank);
  static GroupRingElement of(const Word& w, BigInt coeff = 1);

  int rank() const { return rank_; }
  const std::map<Word, BigInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  GroupRingElement operator+(const GroupRingElement& rhs) const;
  GroupRingElement operator-(const GroupRingElement& rhs) const;
  GroupRingElement operator-() const;
  GroupRingElement operator*(const GroupRingElement& rhs) const;
  GroupRingElement scaled(const BigInt& c) const;

  bool operator==(const GroupRingElement& rhs) const {
    return rank_ == rhs.rank_ && terms_ == rhs.terms_;
  }

  void add_term(const Word& w, const BigInt& coeff);

 private:
  int rank_;
  std::map<Word, BigInt> terms_;
};

// The unique element of Z[F] with
//   a - 1 = sum_i (da/dx_i) (x_i - 1),
// computed by the product rule d(uv) = du + u dv from dx_i/dx_i = 1 and
// dx_i^-1/dx_i = -x_i^-1.
GroupRingElement fox_derivative(const Word& a, int i);

// Evaluates sum_i (da/dx_i)(x_i - 1) - (a - 1) and reports whether it
// vanishes identically.
bool verify_fundamental_identity(const Word& a);

// For the inner derivation d(x) = (x-1) a_elt, checks
//   d(g h g^-1) = (g h g^-1 - 1) (g a_elt - d(g))
// exactly in Z[F].
bool inner_derivation_conjugation_check(const GroupRingElement& a_elt,
                                        const Word& g, const Word& h);

// (a^{n-1} + ... + a + 1) * (da/dx_1, ..., da/dx_d).
std::vector<GroupRingElement> tau_row(const Word& a, int n);

// ---- finite shadows: F_p[M] for a finite group M ----

class FiniteAlgebraElement {
 public:
  FiniteAlgebraElement(finquot::GroupPtr group, int p);

  static FiniteAlgebraElement delta(finquot::GroupPtr group, int p,
                                    int element);

  const finquot::GroupPtr& group() const { return group_; }
  int prime() const { return p_; }
  const std::vector<int>& coeffs() const { return coeffs_; }
  bool is_zero() const;

  FiniteAlgebraElement operator+(const FiniteAlgebraElement& rhs) const;
  FiniteAlgebraElement operator-(const FiniteAlgebraElement& rhs) const;
  FiniteAlgebraElement operator*(const FiniteAlgebraElement& rhs) const;
  FiniteAlgebraElement scaled(long long c) const;

  bool operator==(const FiniteAlgebraElement& rhs) const;

  // Sum of coefficients; the image under the augmentation map.
  int augmentation() const;

  void add_at(int element, long long c);

 private:
  void check_compatible(const FiniteAlgebraElement& rhs) const;

  finquot::GroupPtr group_;
  int p_;
  std::vector<int> coeffs_;  // length = group order, entries in [0, p)
};

// Ring homomorphism Z[F] -> F_p[M] induced by x_i -> images[i].
FiniteAlgebraElement evaluate(const GroupRingElement& e,
                              const std::vector<int>& images,
                              finquot::GroupPtr group, int p);

// n^-1 (1 + a + ... + a^{n-1}) in F_p[Z/n]; requires gcd(n, p) = 1.
// Fixed by multiplication by a; augmentation 1.
FiniteAlgebraElement trace_element(int n, int p);

// Pushes an algebra element along a group homomorphism given elementwise.
FiniteAlgebraElement pushforward(const FiniteAlgebraElement& e,
                                 finquot::GroupPtr target,
                                 const std::vector<int>& element_map);

// Evaluates tau_row(a, n) in F_p[M], pairs it with (phi(x_i) - 1), and
// checks the sum equals the image of a^n - 1 (hence zero).  Requires the
// order of phi(a) to divide n.
bool verify_resolution_shadow(const Word& a, int n,
                              const std::vector<int>& images,
                              finquot::GroupPtr group, int p);

}  // namespace gfg::foxcalc
