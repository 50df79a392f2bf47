#pragma once

#include "json.hpp"
#include "wvo/mckay.hpp"

namespace wvo {

using json = nlohmann::ordered_json;

// Power-sum monomial rendering: "a[-2](g1)^1 a[-1](g0)^3", the vacuum is "1".
// Factors are ordered by part size descending, then label ascending.
std::string monomial_string(const PartFn& rho);
PartFn parse_monomial(const std::string& s, int labels);

json sym_json(const SymVec& v);
json fock_json(const FockVec& v);
// {type-string: cyclo-string}
json wreath_fn_json(const WreathClassFn& f);

json group_json(const Group& g);
json xi_json(const XiForm& xf);

json char_table_json(const WreathCharTable& t, const std::string& route);
std::string char_table_csv(const WreathCharTable& t);
std::string char_table_pretty(const WreathCharTable& t);

json mckay_report_json(const AffineData& ad, long root_count,
                       const RelationReport* relations = nullptr);

LatticeVec parse_lattice(const std::string& s);  // "e[1,-2,0]"
Half parse_half(const std::string& s);           // "3", "-5/2"

}  // namespace wvo
