#pragma once

// Serialization. JSON output uses insertion-ordered objects so identical
// invocations are byte-identical; integers beyond 2^53 are emitted as decimal
// strings to keep downstream consumers exact.

#include <json.hpp>

#include "brieskorn/obstruction.hpp"
#include "brieskorn/sweep.hpp"
#include "brieskorn/table.hpp"

namespace brieskorn {

using Json = nlohmann::ordered_json;

Json json_int(const Zint& z);
Json json_int(i64 v);

Json to_json(const SeifertData& sd);
Json to_json(const QuotientSeifert& q);
Json to_json(const TauProfile& tp);
Json to_json(const GradedRoot& gr);
Json to_json(const UModule& m);
Json to_json(const InvariantReport& rep);
Json to_json(const TorusKnotReport& rep);
Json to_json(const ObstructionVerdict& v);
Json to_json(const TableDiff& diff);
Json to_json(const CheckResult& res);

// Graded root as a merge tree: one node per extremum labelled by its height,
// edges from child to parent (toward increasing chi).
std::string to_dot(const GradedRoot& gr);

} // namespace brieskorn
