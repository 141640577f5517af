#pragma once

#include <json.hpp>
#include <string>

#include "gfg/foxcalc.hpp"
#include "gfg/measures.hpp"
#include "gfg/smallcancel.hpp"
#include "gfg/tubular.hpp"
#include "gfg/whitehead.hpp"
#include "gfg/word.hpp"

namespace gfg::jsonio {

using json = nlohmann::json;

// Words serialize as text ("abA"); on input both text and arrays of signed
// integers are accepted.
json word_json(const wordcore::Word& w);
wordcore::Word word_from_json(const json& j, int rank);
wordcore::Word word_from_json(const json& j);  // rank inferred

json automorphism_json(const wordcore::FreeAutomorphism& phi);
json malnormality_json(const std::vector<wordcore::Word>& family,
                       const wordcore::MalnormalityReport& report);

tubular::GraphOfGroups graph_of_groups_from_json(const json& j);
tubular::HnnPresentation hnn_from_json(const json& j);
// Accepts either a graph-of-groups or an HNN presentation object and
// returns the single-vertex presentation.
tubular::HnnPresentation presentation_from_json(const json& j);
json hnn_json(const tubular::HnnPresentation& h);
json gamma_json(const tubular::HnnPresentation& h);
json components_json(const std::vector<tubular::ComponentReport>& reports);
json verdict_json(const tubular::HnnPresentation& h, const tubular::Verdict& v);
json edge_closures_json(const std::vector<tubular::EdgeClosure>& closures);
json cohomology_json(const tubular::CohomologyReport& r, int p);

json metric_report_json(const smallcancel::SymmetrizedPresentation& sym,
                        const smallcancel::MetricReport& report,
                        const smallcancel::Rational& lambda);
json pieces_json(const std::vector<smallcancel::Piece>& pieces);

json group_ring_json(const foxcalc::GroupRingElement& e);
json algebra_json(const foxcalc::FiniteAlgebraElement& e);

json group_json(const finquot::FiniteGroup& g);
finquot::FiniteGroup group_from_table_json(const json& j,
                                           const std::string& name);
json measure_json(const wordcore::Word& w, const finquot::WordMeasure& m);
json equiv_json(const finquot::EquivResult& r);
json bprime_json(const finquot::BprimeReport& r);
json rigidity_json(const finquot::RigidityReport& r);

}  // namespace gfg::jsonio
