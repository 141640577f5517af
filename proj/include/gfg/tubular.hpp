#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <vector>

#include "gfg/word.hpp"

namespace gfg::tubular {

using BigInt = boost::multiprecision::cpp_int;
using wordcore::CyclicWord;
using wordcore::Word;

// A finite connected graph of finitely generated free groups with cyclic
// edge groups, given combinatorially.  Attaching words live in the free
// group of the incident vertex; an edge with two empty attaching words has
// trivial edge group.
struct GraphOfGroups {
  struct Vertex {
    std::string name;
    int rank = 0;
  };
  struct Edge {
    std::string name;
    std::string from, to;
    Word attach_from, attach_to;
    long long m = 1, n = 1;  // extra exponents on the attaching words
  };
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
};

// Single-vertex tubular data over a free base group: relations
// q_j u_j^{m_j} q_j^{-1} = v_j^{n_j} with cyclically reduced roots u_j, v_j.
// Construction normalizes attaching words (conjugators and rotations are
// absorbed into the stable letters, powers into the exponents, and a root
// conjugate to the inverse of an earlier one is replaced by that root with
// negated exponent) and then certifies that the root family is malnormal.
class HnnPresentation {
 public:
  struct RawRelation {
    std::string stable_name;  // empty = assign a default
    Word u;
    long long m = 1;
    Word v;
    long long n = 1;
  };
  struct Relation {
    std::string stable_name;
    int u_vertex;
    long long m;
    int v_vertex;
    long long n;
  };

  static HnnPresentation make(int base_rank, int extra_free_rank,
                              const std::vector<RawRelation>& raw);

  int base_rank() const { return base_rank_; }
  int extra_free_rank() const { return extra_free_rank_; }
  const std::vector<Relation>& relations() const { return relations_; }
  const std::vector<CyclicWord>& vertices() const { return vertices_; }
  const CyclicWord& u_of(const Relation& r) const { return vertices_[r.u_vertex]; }
  const CyclicWord& v_of(const Relation& r) const { return vertices_[r.v_vertex]; }

 private:
  HnnPresentation() = default;
  int base_rank_ = 1;
  int extra_free_rank_ = 0;
  std::vector<Relation> relations_;
  std::vector<CyclicWord> vertices_;  // deduplicated attaching roots
};

// The paper's single-vertex reduction: merge the vertex groups blockwise
// into one free base group; every edge with nontrivial edge group becomes a
// stable-letter relation, every trivial edge a free letter.  The presented
// group is (the original group) * F_{|V|-1}, the free factor being carried
// by the stable letters of a spanning tree.
HnnPresentation collapse_to_single_vertex(const GraphOfGroups& g);

// The labeled multigraph on the attaching roots: one edge per relation with
// end labels (m at the u root, n at the v root).
struct GammaGraph {
  struct Edge {
    int relation;
    int u_vertex;
    long long m;
    int v_vertex;
    long long n;
  };
  std::vector<CyclicWord> vertices;
  std::vector<Edge> edges;
};

GammaGraph build_gamma(const HnnPresentation& h);

// One traversal step: forward runs from the u end to the v end.
struct Step {
  int edge;
  bool forward;
};
using Walk = std::vector<Step>;

int step_source(const GammaGraph& g, const Step& s);
int step_target(const GammaGraph& g, const Step& s);

// Product of the labels at the ends through which each traversal departs.
BigInt loop_product(const GammaGraph& g, const Walk& walk);
Walk reversed(const Walk& walk);

struct ComponentReport {
  std::vector<int> vertices;
  std::vector<int> edges;
  int euler_characteristic = 0;
  bool is_clean = true;
  // Present when the component has Euler characteristic 0.
  std::optional<Walk> embedded_cycle;
  std::optional<BigInt> lp_forward, lp_backward;
  // The loop product different from +-1, when the unique embedded cycle is
  // unbalanced with the other direction equal to +-1.
  std::optional<BigInt> lp_value;
  std::vector<long long> prime_set;  // P(C), sorted
};

std::vector<ComponentReport> analyze_components(const GammaGraph& g);
// Spanning trees are grown from the given vertex ordering; reports are
// identical up to the stated normalizations for any ordering.
std::vector<ComponentReport> analyze_components_ordered(
    const GammaGraph& g, const std::vector<int>& vertex_order);

// ---- mixed words over base generators and stable letters ----

// Letters 1..base_rank are base generators; base_rank+j is the j-th stable
// letter; negatives are inverses.
struct MixedWord {
  int base_rank = 1;
  int stable_count = 0;
  std::vector<int> letters;

  bool empty() const { return letters.empty(); }
};

MixedWord make_mixed(const HnnPresentation& h, std::vector<int> letters);
MixedWord parse_mixed(const HnnPresentation& h, const std::string& text);
std::string mixed_text(const HnnPresentation& h, const MixedWord& w);

// Repeatedly replaces pinches q_j s q_j^-1 with s in <u_j^{m_j}> by the
// corresponding power of v_j^{n_j} (and symmetrically), freely reducing in
// between, until no pinch applies.  Returns the empty word exactly when
// pinching certifies triviality.
MixedWord britton_reduce(const HnnPresentation& h, const MixedWord& w);

// ---- verdicts ----

enum class Rf { RF, NotRF, RFCandidate };
const char* rf_name(Rf v);

struct UnbalancedWitness {
  Word g;        // base word
  MixedWord h;   // product of stable letters along the cycle
  BigInt n, m;   // h g^n h^-1 = g^m with |n| != |m|
};

struct CycleWitness {
  Walk walk;
  BigInt lp_forward, lp_backward;  // both of absolute value >= 2, unequal
};

struct Verdict {
  Rf rf = Rf::RF;
  bool lerf = true;
  std::optional<CycleWitness> not_rf_cycle;
  std::optional<UnbalancedWitness> unbalanced;
  std::vector<ComponentReport> components;
};

Verdict decide(const HnnPresentation& h);

struct EdgeClosure {
  std::string stable_name;
  std::vector<long long> primes;  // P(e)
  std::string description;        // e.g. "all primes except 2"
};

// Symbolic closure descriptors of the edge groups in the profinite
// completion.  Errors on presentations decided NotRF.
std::vector<EdgeClosure> edge_closure_descriptor(const HnnPresentation& h);

struct CohomologyReport {
  int h1_abstract = 0;
  int h2_abstract = 0;
  int a_p_size = 0;
  int e_p_size = 0;
  bool consistent = true;
};

// First and second cohomology dimensions with F_p coefficients from the
// abelianized relation matrix, plus the Gamma-side vertex/edge counts for p.
CohomologyReport cohomology_report(const HnnPresentation& h, int p);

}  // namespace gfg::tubular
