#include "gfg/json_io.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

#include "gfg/errors.hpp"

namespace gfg::jsonio {

using wordcore::Word;

json word_json(const Word& w) {
  for (int l : w.letters())
    if (std::abs(l) > 26) return json(w.letters());  // beyond 'z': array form
  return wordcore::word_text(w);
}

Word word_from_json(const json& j, int rank) {
  if (j.is_string()) return wordcore::parse_word(j.get<std::string>(), rank);
  if (j.is_array()) {
    std::vector<int> letters;
    for (const auto& x : j) letters.push_back(x.get<int>());
    return wordcore::reduce(std::move(letters), rank);
  }
  throw input_error("a word must be a string or an array of integers");
}

Word word_from_json(const json& j) {
  if (j.is_string()) return wordcore::parse_word(j.get<std::string>());
  if (j.is_array()) {
    int rank = 1;
    for (const auto& x : j) rank = std::max(rank, std::abs(x.get<int>()));
    return word_from_json(j, rank);
  }
  throw input_error("a word must be a string or an array of integers");
}

json automorphism_json(const wordcore::FreeAutomorphism& phi) {
  json out = json::array();
  for (const Word& w : phi.images()) out.push_back(word_json(w));
  return out;
}

json malnormality_json(const std::vector<Word>& family,
                       const wordcore::MalnormalityReport& report) {
  json out;
  out["is_malnormal"] = report.is_malnormal;
  json fam = json::array();
  for (const Word& w : family) fam.push_back(word_json(w));
  out["family"] = fam;
  json violations = json::array();
  for (const auto& v : report.violations) {
    json item;
    item["first"] = v.first;
    item["second"] = v.second;
    item["reason"] = wordcore::violation_name(v.reason);
    violations.push_back(item);
  }
  out["violations"] = violations;
  return out;
}

tubular::GraphOfGroups graph_of_groups_from_json(const json& j) {
  tubular::GraphOfGroups g;
  if (!j.contains("vertices") || !j.contains("edges"))
    throw input_error("graph of groups needs 'vertices' and 'edges'");
  std::map<std::string, int> rank_of;
  for (const auto& vj : j.at("vertices")) {
    tubular::GraphOfGroups::Vertex v;
    v.name = vj.at("name").get<std::string>();
    v.rank = vj.at("rank").get<int>();
    rank_of[v.name] = v.rank;
    g.vertices.push_back(std::move(v));
  }
  for (const auto& ej : j.at("edges")) {
    tubular::GraphOfGroups::Edge e;
    e.name = ej.at("name").get<std::string>();
    e.from = ej.at("from").get<std::string>();
    e.to = ej.at("to").get<std::string>();
    auto rank_at = [&](const std::string& vertex) {
      auto it = rank_of.find(vertex);
      if (it == rank_of.end())
        throw input_error("edge references unknown vertex '" + vertex + "'");
      return std::max(it->second, 1);
    };
    e.attach_from = ej.contains("u") ? word_from_json(ej.at("u"), rank_at(e.from))
                                     : Word(rank_at(e.from));
    e.attach_to = ej.contains("v") ? word_from_json(ej.at("v"), rank_at(e.to))
                                   : Word(rank_at(e.to));
    e.m = ej.value("m", 1);
    e.n = ej.value("n", 1);
    g.edges.push_back(std::move(e));
  }
  return g;
}

tubular::HnnPresentation hnn_from_json(const json& j) {
  int rank = j.contains("base_rank") ? j.at("base_rank").get<int>()
                                     : j.at("rank").get<int>();
  int extra = j.value("extra_free_rank", 0);
  std::vector<tubular::HnnPresentation::RawRelation> raw;
  for (const auto& rj : j.value("relations", json::array())) {
    tubular::HnnPresentation::RawRelation rr;
    rr.stable_name = rj.value("q", std::string{});
    rr.u = word_from_json(rj.at("u"), rank);
    rr.m = rj.value("m", 1);
    rr.v = word_from_json(rj.at("v"), rank);
    rr.n = rj.value("n", 1);
    raw.push_back(std::move(rr));
  }
  return tubular::HnnPresentation::make(rank, extra, raw);
}

tubular::HnnPresentation presentation_from_json(const json& j) {
  if (j.contains("relations") || j.contains("base_rank") || j.contains("rank"))
    return hnn_from_json(j);
  return tubular::collapse_to_single_vertex(graph_of_groups_from_json(j));
}

json hnn_json(const tubular::HnnPresentation& h) {
  json out;
  out["base_rank"] = h.base_rank();
  out["extra_free_rank"] = h.extra_free_rank();
  json rels = json::array();
  for (const auto& r : h.relations()) {
    json rj;
    rj["q"] = r.stable_name;
    rj["u"] = word_json(h.u_of(r).word());
    rj["m"] = r.m;
    rj["v"] = word_json(h.v_of(r).word());
    rj["n"] = r.n;
    rels.push_back(rj);
  }
  out["relations"] = rels;
  json verts = json::array();
  for (const auto& v : h.vertices()) verts.push_back(word_json(v.word()));
  out["vertices"] = verts;
  return out;
}

namespace {

json walk_json(const tubular::Walk& walk) {
  json out = json::array();
  for (const auto& s : walk) {
    json sj;
    sj["edge"] = s.edge;
    sj["forward"] = s.forward;
    out.push_back(sj);
  }
  return out;
}

json mixed_word_json(const tubular::HnnPresentation& h,
                     const tubular::MixedWord& w) {
  try {
    return tubular::mixed_text(h, w);
  } catch (const input_error&) {
    return json(w.letters);  // stable letters without a single-letter name
  }
}

json big_str(const tubular::BigInt& v) { return v.str(); }

}  // namespace

json gamma_json(const tubular::HnnPresentation& h) {
  tubular::GammaGraph g = tubular::build_gamma(h);
  json out;
  json verts = json::array();
  for (const auto& v : g.vertices) verts.push_back(word_json(v.word()));
  out["vertices"] = verts;
  json edges = json::array();
  for (const auto& e : g.edges) {
    json ej;
    ej["relation"] = e.relation;
    ej["q"] = h.relations()[e.relation].stable_name;
    ej["u_vertex"] = e.u_vertex;
    ej["m"] = e.m;
    ej["v_vertex"] = e.v_vertex;
    ej["n"] = e.n;
    edges.push_back(ej);
  }
  out["edges"] = edges;
  out["components"] = components_json(tubular::analyze_components(g));
  return out;
}

json components_json(const std::vector<tubular::ComponentReport>& reports) {
  json out = json::array();
  for (const auto& r : reports) {
    json rj;
    rj["vertices"] = r.vertices;
    rj["edges"] = r.edges;
    rj["euler_characteristic"] = r.euler_characteristic;
    rj["clean"] = r.is_clean;
    rj["embedded_cycle"] =
        r.embedded_cycle ? walk_json(*r.embedded_cycle) : json(nullptr);
    rj["lp_forward"] = r.lp_forward ? big_str(*r.lp_forward) : json(nullptr);
    rj["lp_backward"] = r.lp_backward ? big_str(*r.lp_backward) : json(nullptr);
    rj["lp"] = r.lp_value ? big_str(*r.lp_value) : json(nullptr);
    rj["primes"] = r.prime_set;
    out.push_back(rj);
  }
  return out;
}

json verdict_json(const tubular::HnnPresentation& h, const tubular::Verdict& v) {
  json out;
  out["rf"] = tubular::rf_name(v.rf);
  out["lerf"] = v.lerf;
  // the analyzed group is the single-vertex presentation, a free product of
  // the ingested group with a free group; both properties transfer
  out["applies"] =
      "RF and LERF pass to free factors and are preserved by free products "
      "with free groups";
  json witnesses;
  if (v.not_rf_cycle) {
    json c;
    c["walk"] = walk_json(v.not_rf_cycle->walk);
    c["lp_forward"] = big_str(v.not_rf_cycle->lp_forward);
    c["lp_backward"] = big_str(v.not_rf_cycle->lp_backward);
    witnesses["not_rf_cycle"] = c;
  } else {
    witnesses["not_rf_cycle"] = nullptr;
  }
  if (v.unbalanced) {
    json u;
    u["g"] = word_json(v.unbalanced->g);
    u["h"] = mixed_word_json(h, v.unbalanced->h);
    u["n"] = big_str(v.unbalanced->n);
    u["m"] = big_str(v.unbalanced->m);
    witnesses["unbalanced"] = u;
  } else {
    witnesses["unbalanced"] = nullptr;
  }
  out["witnesses"] = witnesses;
  out["components"] = components_json(v.components);
  return out;
}

json edge_closures_json(const std::vector<tubular::EdgeClosure>& closures) {
  json out = json::array();
  for (const auto& c : closures) {
    json cj;
    cj["q"] = c.stable_name;
    cj["primes"] = c.primes;
    cj["closure"] = c.description;
    out.push_back(cj);
  }
  return out;
}

json cohomology_json(const tubular::CohomologyReport& r, int p) {
  json out;
  out["p"] = p;
  out["h1"] = r.h1_abstract;
  out["h2"] = r.h2_abstract;
  out["A_p"] = r.a_p_size;
  out["E_p"] = r.e_p_size;
  out["consistent"] = r.consistent;
  return out;
}

json pieces_json(const std::vector<smallcancel::Piece>& pieces) {
  json out = json::array();
  for (const auto& p : pieces) {
    json pj;
    pj["word"] = word_json(p.word);
    pj["witnesses"] = json::array({word_json(p.witness_a), word_json(p.witness_b)});
    out.push_back(pj);
  }
  return out;
}

json metric_report_json(const smallcancel::SymmetrizedPresentation& sym,
                        const smallcancel::MetricReport& report,
                        const smallcancel::Rational& lambda) {
  json out;
  out["lambda"] = lambda.str();
  out["relator_count"] = sym.relators.size();
  out["passes"] = report.passes;
  if (report.worst) {
    json w;
    w["piece"] = word_json(report.worst->piece);
    w["relator"] = word_json(report.worst->relator);
    w["ratio"] = report.worst->ratio.str();
    out["worst"] = w;
  } else {
    out["worst"] = nullptr;
  }
  return out;
}

json group_ring_json(const foxcalc::GroupRingElement& e) {
  json out = json::object();
  for (const auto& [w, c] : e.terms())
    out[wordcore::word_text(w)] = c.str();
  return out;
}

json algebra_json(const foxcalc::FiniteAlgebraElement& e) {
  json out;
  out["group"] = e.group()->name();
  out["p"] = e.prime();
  json coeffs = json::array();
  for (int c : e.coeffs()) coeffs.push_back(c);
  out["coeffs"] = coeffs;
  return out;
}

json group_json(const finquot::FiniteGroup& g) {
  json out;
  out["name"] = g.name();
  out["order"] = g.order();
  out["identity"] = g.id();
  json classes = json::array();
  for (const auto& cls : g.classes()) classes.push_back(cls);
  out["classes"] = classes;
  return out;
}

finquot::FiniteGroup group_from_table_json(const json& j,
                                           const std::string& name) {
  if (!j.contains("order") || !j.contains("table"))
    throw input_error("Cayley table file needs 'order' and 'table'");
  int order = j.at("order").get<int>();
  auto table = j.at("table").get<std::vector<std::vector<int>>>();
  if (static_cast<int>(table.size()) != order)
    throw input_error("Cayley table size does not match the declared order");
  return finquot::FiniteGroup::from_table(std::move(table), name);
}

json measure_json(const Word& w, const finquot::WordMeasure& m) {
  json out;
  out["word"] = word_json(w);
  out["group"] = m.group()->name();
  out["arity"] = m.arity();
  out["denominator"] = m.denominator().str();
  json counts = json::object();
  for (int i = 0; i < m.group()->order(); ++i)
    counts[std::to_string(i)] = m.counts()[i].str();
  out["counts"] = counts;
  json by_class = json::object();
  const auto& classes = m.group()->classes();
  for (std::size_t c = 0; c < classes.size(); ++c) {
    json cj;
    cj["size"] = classes[c].size();
    cj["count_per_element"] = m.counts()[classes[c].front()].str();
    finquot::BigInt total = m.counts()[classes[c].front()];
    total *= static_cast<long long>(classes[c].size());
    cj["total"] = total.str();
    by_class[std::to_string(c)] = cj;
  }
  out["by_class"] = by_class;
  return out;
}

json equiv_json(const finquot::EquivResult& r) {
  json out;
  out["verdict"] =
      r.distinguished ? "distinguished" : "indistinguishable-over-family";
  out["group"] = r.distinguished ? json(r.distinguishing_group) : json(nullptr);
  out["budget_failures"] = r.budget_failures;
  out["partial"] = r.partial();
  return out;
}

json bprime_json(const finquot::BprimeReport& r) {
  json out;
  out["elements_tested"] = r.elements_tested;
  json devs = json::array();
  for (const auto& d : r.deviations) {
    json dj;
    dj["group"] = d.group;
    dj["element"] = d.element;
    dj["count"] = d.count.str();
    dj["expected"] = d.expected.str();
    devs.push_back(dj);
  }
  out["deviations"] = devs;
  return out;
}

json rigidity_json(const finquot::RigidityReport& r) {
  json out;
  json orbits = json::array();
  for (std::size_t i = 0; i < r.orbit_reps.size(); ++i) {
    json oj;
    oj["rep"] = word_json(r.orbit_reps[i]);
    json words = json::array();
    for (const Word& w : r.orbit_words[i]) words.push_back(word_json(w));
    oj["words"] = words;
    orbits.push_back(oj);
  }
  out["orbits"] = orbits;
  json fails = json::array();
  for (const auto& [w1, w2, g] : r.same_orbit_failures)
    fails.push_back(json::array({word_json(w1), word_json(w2), g}));
  out["same_orbit_failures"] = fails;
  json sep = json::array();
  for (const auto& [a, b, g] : r.separated)
    sep.push_back(json::array({a, b, g}));
  out["separated"] = sep;
  json unsep = json::array();
  for (const auto& [a, b] : r.unseparated) unsep.push_back(json::array({a, b}));
  out["unseparated"] = unsep;
  return out;
}

}  // namespace gfg::jsonio
