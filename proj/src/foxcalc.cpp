#include "gfg/foxcalc.hpp"

#include <cstdlib>
#include <numeric>

#include "gfg/errors.hpp"

namespace gfg::foxcalc {

GroupRingElement GroupRingElement::one(int rank) {
  return of(Word(rank), 1);
}

GroupRingElement GroupRingElement::of(const Word& w, BigInt coeff) {
  GroupRingElement e(w.rank());
  e.add_term(w, coeff);
  return e;
}

void GroupRingElement::add_term(const Word& w, const BigInt& coeff) {
  if (w.rank() != rank_) throw input_error("group ring rank mismatch");
  if (coeff == 0) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

GroupRingElement GroupRingElement::operator+(const GroupRingElement& rhs) const {
  GroupRingElement out = *this;
  for (const auto& [w, c] : rhs.terms_) out.add_term(w, c);
  return out;
}

GroupRingElement GroupRingElement::operator-(const GroupRingElement& rhs) const {
  GroupRingElement out = *this;
  for (const auto& [w, c] : rhs.terms_) out.add_term(w, -c);
  return out;
}

GroupRingElement GroupRingElement::operator-() const {
  GroupRingElement out(rank_);
  for (const auto& [w, c] : terms_) out.add_term(w, -c);
  return out;
}

GroupRingElement GroupRingElement::operator*(const GroupRingElement& rhs) const {
  if (rank_ != rhs.rank_) throw input_error("group ring rank mismatch");
  GroupRingElement out(rank_);
  for (const auto& [w1, c1] : terms_)
    for (const auto& [w2, c2] : rhs.terms_) out.add_term(w1 * w2, c1 * c2);
  return out;
}

GroupRingElement GroupRingElement::scaled(const BigInt& c) const {
  GroupRingElement out(rank_);
  for (const auto& [w, coeff] : terms_) out.add_term(w, coeff * c);
  return out;
}

GroupRingElement fox_derivative(const Word& a, int i) {
  int rank = a.rank();
  if (i < 1 || i > rank)
    throw input_error("fox derivative index out of range");
  GroupRingElement out(rank);
  std::vector<wordcore::Letter> prefix;
  for (wordcore::Letter l : a.letters()) {
    if (l == i) {
      out.add_term(wordcore::Word::from_reduced(prefix, rank), 1);
    } else if (l == -i) {
      auto with = prefix;
      with.push_back(l);
      out.add_term(wordcore::Word::from_reduced(with, rank), -1);
    }
    prefix.push_back(l);
  }
  return out;
}

bool verify_fundamental_identity(const Word& a) {
  int rank = a.rank();
  GroupRingElement acc(rank);
  for (int i = 1; i <= rank; ++i) {
    GroupRingElement xi_minus_1 =
        GroupRingElement::of(wordcore::generator(i, rank)) -
        GroupRingElement::one(rank);
    acc = acc + fox_derivative(a, i) * xi_minus_1;
  }
  GroupRingElement target =
      GroupRingElement::of(a) - GroupRingElement::one(rank);
  return acc == target;
}

bool inner_derivation_conjugation_check(const GroupRingElement& a_elt,
                                        const Word& g, const Word& h) {
  int rank = a_elt.rank();
  if (g.rank() != rank || h.rank() != rank)
    throw input_error("rank mismatch in derivation check");
  auto d = [&](const Word& x) {
    return (GroupRingElement::of(x) - GroupRingElement::one(rank)) * a_elt;
  };
  Word conj = h.conjugated_by(g);
  GroupRingElement lhs = d(conj);
  GroupRingElement bracket = GroupRingElement::of(g) * a_elt - d(g);
  GroupRingElement rhs =
      (GroupRingElement::of(conj) - GroupRingElement::one(rank)) * bracket;
  return lhs == rhs;
}

std::vector<GroupRingElement> tau_row(const Word& a, int n) {
  if (a.trivial()) throw input_error("tau row of the trivial word");
  if (n < 1) throw input_error("tau row exponent must be positive");
  int rank = a.rank();
  GroupRingElement powers(rank);
  Word ak(rank);
  for (int k = 0; k < n; ++k) {
    powers.add_term(ak, 1);
    ak = ak * a;
  }
  std::vector<GroupRingElement> row;
  row.reserve(rank);
  for (int i = 1; i <= rank; ++i) row.push_back(powers * fox_derivative(a, i));
  return row;
}

// ---- F_p[M] ----

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

int check_prime(int p) {
  if (!is_prime(p)) throw input_error(std::to_string(p) + " is not prime");
  return p;
}

}  // namespace

FiniteAlgebraElement::FiniteAlgebraElement(finquot::GroupPtr group, int p)
    : group_(std::move(group)), p_(check_prime(p)) {
  coeffs_.assign(group_->order(), 0);
}

FiniteAlgebraElement FiniteAlgebraElement::delta(finquot::GroupPtr group,
                                                 int p, int element) {
  FiniteAlgebraElement e(std::move(group), p);
  e.add_at(element, 1);
  return e;
}

bool FiniteAlgebraElement::is_zero() const {
  for (int c : coeffs_)
    if (c != 0) return false;
  return true;
}

void FiniteAlgebraElement::check_compatible(
    const FiniteAlgebraElement& rhs) const {
  if (p_ != rhs.p_) throw input_error("algebra elements over different primes");
  if (group_ != rhs.group_ && !(*group_ == *rhs.group_))
    throw input_error("algebra elements over different groups");
}

FiniteAlgebraElement FiniteAlgebraElement::operator+(
    const FiniteAlgebraElement& rhs) const {
  check_compatible(rhs);
  FiniteAlgebraElement out = *this;
  for (int i = 0; i < group_->order(); ++i)
    out.coeffs_[i] = (out.coeffs_[i] + rhs.coeffs_[i]) % p_;
  return out;
}

FiniteAlgebraElement FiniteAlgebraElement::operator-(
    const FiniteAlgebraElement& rhs) const {
  check_compatible(rhs);
  FiniteAlgebraElement out = *this;
  for (int i = 0; i < group_->order(); ++i)
    out.coeffs_[i] = ((out.coeffs_[i] - rhs.coeffs_[i]) % p_ + p_) % p_;
  return out;
}

FiniteAlgebraElement FiniteAlgebraElement::operator*(
    const FiniteAlgebraElement& rhs) const {
  check_compatible(rhs);
  FiniteAlgebraElement out(group_, p_);
  for (int a = 0; a < group_->order(); ++a) {
    if (coeffs_[a] == 0) continue;
    for (int b = 0; b < group_->order(); ++b) {
      if (rhs.coeffs_[b] == 0) continue;
      int g = group_->mul(a, b);
      out.coeffs_[g] = static_cast<int>(
          (out.coeffs_[g] + static_cast<long long>(coeffs_[a]) * rhs.coeffs_[b]) % p_);
    }
  }
  return out;
}

FiniteAlgebraElement FiniteAlgebraElement::scaled(long long c) const {
  FiniteAlgebraElement out = *this;
  long long cc = ((c % p_) + p_) % p_;
  for (int& v : out.coeffs_) v = static_cast<int>((v * cc) % p_);
  return out;
}

bool FiniteAlgebraElement::operator==(const FiniteAlgebraElement& rhs) const {
  check_compatible(rhs);
  return coeffs_ == rhs.coeffs_;
}

int FiniteAlgebraElement::augmentation() const {
  long long s = 0;
  for (int c : coeffs_) s += c;
  return static_cast<int>(s % p_);
}

void FiniteAlgebraElement::add_at(int element, long long c) {
  if (element < 0 || element >= group_->order())
    throw input_error("element index out of range");
  coeffs_[element] =
      static_cast<int>(((coeffs_[element] + c) % p_ + p_) % p_);
}

FiniteAlgebraElement evaluate(const GroupRingElement& e,
                              const std::vector<int>& images,
                              finquot::GroupPtr group, int p) {
  if (static_cast<int>(images.size()) != e.rank())
    throw input_error("generator image count mismatch");
  for (int img : images)
    if (img < 0 || img >= group->order())
      throw input_error("generator image out of range");
  FiniteAlgebraElement out(group, p);
  for (const auto& [w, c] : e.terms()) {
    int g = finquot::eval_word(*group, w, images);
    long long cm = static_cast<long long>(c % p);
    out.add_at(g, cm);
  }
  return out;
}

FiniteAlgebraElement trace_element(int n, int p) {
  if (n < 1) throw input_error("trace order must be positive");
  check_prime(p);
  if (n % p == 0)
    throw input_error("trace element needs gcd(n, p) = 1");
  auto cyclic = finquot::make_group("C" + std::to_string(n));
  // n^-1 mod p by Fermat
  long long inv = 1, base = n % p, e = p - 2;
  while (e > 0) {
    if (e & 1) inv = inv * base % p;
    base = base * base % p;
    e >>= 1;
  }
  FiniteAlgebraElement out(cyclic, p);
  for (int k = 0; k < n; ++k) out.add_at(k, inv);
  return out;
}

FiniteAlgebraElement pushforward(const FiniteAlgebraElement& e,
                                 finquot::GroupPtr target,
                                 const std::vector<int>& element_map) {
  if (static_cast<int>(element_map.size()) != e.group()->order())
    throw input_error("element map has wrong size");
  FiniteAlgebraElement out(target, e.prime());
  for (int i = 0; i < e.group()->order(); ++i)
    out.add_at(element_map[i], e.coeffs()[i]);
  return out;
}

bool verify_resolution_shadow(const Word& a, int n,
                              const std::vector<int>& images,
                              finquot::GroupPtr group, int p) {
  if (a.trivial()) throw input_error("resolution shadow of the trivial word");
  int phi_a = finquot::eval_word(*group, a, images);
  if (n % group->element_order(phi_a) != 0)
    throw input_error("order of the image of a does not divide n");
  auto row = tau_row(a, n);
  FiniteAlgebraElement lhs(group, p);
  for (int i = 1; i <= a.rank(); ++i) {
    FiniteAlgebraElement gi =
        FiniteAlgebraElement::delta(group, p, images[i - 1]) -
        FiniteAlgebraElement::delta(group, p, group->id());
    lhs = lhs + evaluate(row[i - 1], images, group, p) * gi;
  }
  FiniteAlgebraElement rhs =
      FiniteAlgebraElement::delta(group, p, group->power(phi_a, n)) -
      FiniteAlgebraElement::delta(group, p, group->id());
  return lhs == rhs && rhs.is_zero();
}

}  // namespace gfg::foxcalc
