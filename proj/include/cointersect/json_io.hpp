#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "cointersect/anneal.hpp"
#include "cointersect/boolean_f.hpp"
#include "cointersect/bounds.hpp"
#include "cointersect/constructions.hpp"
#include "cointersect/exact.hpp"
#include "cointersect/oracle.hpp"
#include "cointersect/representation.hpp"

namespace coint::json_io {

using Json = nlohmann::json;

/// {"alpha":a,"beta":b,"vertices":[{"A":[...],"B":[...]},...]}
Json to_json(const Cir& r);
Cir cir_from_json(const Json& j);

/// {"sizes":[...],"vertices":[[[...],...],...]}: r subsets per vertex.
Json to_json(const GeneralAssignment& asg);
GeneralAssignment general_from_json(const Json& j);

/// {"k":k,"classes":[[[points],...],...]}
Json to_json(const ResolvablePacking& p);
ResolvablePacking packing_from_json(const Json& j);

/// {"n":n,"edges":[[u,v],...]}
Json to_json(const Graph& g);
Graph graph_from_json(const Json& j);

Json to_json(const Score& s);
Json to_json(const Communities& c);
Json to_json(const BoundsReport& b);
Json to_json(const ExactResult& r);
Json to_json(const AnnealResult& r);
Json to_json(const OracleResult& r);
Json to_json(const IpBound& b);
Json edges_to_json(const std::vector<Edge>& edges);

/// Parses text; malformed input becomes DomainError.
Json parse(std::string_view text);
/// Two-space indentation and a trailing newline; keys come out sorted.
std::string dump(const Json& j);

}  // namespace coint::json_io
