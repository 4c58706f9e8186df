#pragma once

#include <json.hpp>

#include "wgideal/biideal.hpp"
#include "wgideal/classify.hpp"
#include "wgideal/ideal.hpp"
#include "wgideal/parabolic.hpp"
#include "wgideal/wgraph.hpp"

namespace wgideal {

// JSON views of the results. Keys are sorted and every array follows
// (length, ShortLex) or position order, so dumps are byte-stable.

nlohmann::json poly_json(const LaurentPoly& p);
nlohmann::json words_json(const CoxeterSystem& sys, const std::vector<ElemId>& set);
nlohmann::json gens_json(const CoxeterSystem& sys, GenSet s);

nlohmann::json ideal_report_json(const IdealContext& ctx, const IdealReport& rep);
nlohmann::json choices_json(const IdealContext& ctx, const std::vector<ChoiceDisagreement>& d);
nlohmann::json cells_json(const WGraph& g, const CellPartition& cells);
nlohmann::json restriction_json(const IdealContext& ctx, const RestrictionReport& rep);
nlohmann::json biideal_report_json(const BiidealContext& b);
nlohmann::json kl_json(const CoxeterSystem& sys, const KlSpecialCases& kl);
nlohmann::json classify_json(const Rank2Table& table);

}  // namespace wgideal
