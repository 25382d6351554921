#ifndef ORDSEMI_IO_HPP
#define ORDSEMI_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "ordsemi/cayley.hpp"
#include "ordsemi/chain.hpp"
#include "ordsemi/decision.hpp"
#include "ordsemi/induced.hpp"
#include "ordsemi/structures.hpp"
#include "ordsemi/transformation.hpp"

namespace ordsemi {

using nlohmann::json;

json to_json(const ChainPair& pair);
json to_json(const Transformation& alpha);
json to_json(const CayleyTable& table);
json to_json(const SemigroupIso& iso);
json to_json(const Decision& decision);
json to_json(const KClassPartition& partition);
json to_json(const MultTableReport& report);
json to_json(const CrossValidateReport& report);

ChainPair chain_pair_from_json(const json& j);
Transformation transformation_from_json(const json& j);

// Instance input accepted everywhere in the CLI: inline "n=9 range=0,2,4,6,8",
// a JSON object literal, or the path of a JSON file holding the object form.
ChainPair parse_instance(const std::string& text);

// Comma-separated integer list ("0,2,4").
std::vector<int> parse_int_list(const std::string& text);

// Two-row matrix form, mirroring the usual display of a transformation.
std::string render_two_row(const Transformation& alpha);

// Bracketed adjusted-chain form, e.g. "[{0}] 1 [{2,3}] 4 [{5}]".
std::string render_adjusted(const AdjustedChain& chain);

// DOT export of a partial graph: upper and lower ranks pinned, vertices
// ordered left to right; ordering edges carry style=invis, semantic edges
// do not.
std::string to_dot(const PartialGraph& graph);

}  // namespace ordsemi

#endif  // ORDSEMI_IO_HPP
