#pragma once

#include <string>

#include "json.hpp"

#include "gca/certificate.hpp"
#include "gca/graph.hpp"
#include "gca/stability.hpp"
#include "gca/trace.hpp"
#include "gca/vertex_set.hpp"

// JSON formats (nlohmann::json with std::map keys, so object keys serialize
// sorted and output is canonical):
//
//   graph       {"vertices": ["u",...], "edges": [{"src","dst","mult"}...],
//                "heads": ["u",...]}           mult: integer >= 1 or "omega"
//   vertex      "u" (base) or ["u", 3] (third chain vertex of u's head)
//   vertex set  {"base": ["v",...], "heads": {"u": "all" | k}}
//   trace       {"values": {"v": "p/q", ...}}
//
// Shape problems throw ParseError; well-formed JSON describing an invalid
// graph throws Error with every violation listed.

namespace gca {

nlohmann::json graph_to_json(const PresentedGraph& g);
PresentedGraph graph_from_json(const nlohmann::json& j);

nlohmann::json vertex_to_json(const Vertex& v);
Vertex vertex_from_json(const nlohmann::json& j);
// Flag syntax for the command line: "u" or "u#3".
Vertex parse_vertex_flag(const std::string& text);

nlohmann::json vertex_set_to_json(const VertexSet& s);
VertexSet vertex_set_from_json(const nlohmann::json& j);

nlohmann::json trace_to_json(const GraphTrace& t);
GraphTrace trace_from_json(const nlohmann::json& j);

nlohmann::json trace_norm_to_json(const TraceNorm& n);  // "p/q" or "infinite"
nlohmann::json trace_verdict_to_json(const TraceVerdict& v);

nlohmann::json stability_report_to_json(const StabilityReport& r);
nlohmann::json condition_k_to_json(const ConditionKReport& r);
nlohmann::json left_infinite_criterion_to_json(const LeftInfiniteCriterion& c);

nlohmann::json certificate_to_json(const ComparisonCertificate& c);
ComparisonCertificate certificate_from_json(const nlohmann::json& j);
nlohmann::json verify_result_to_json(const VerifyResult& r);

// dump(2) plus a trailing newline; the byte-stable wire format.
std::string canonical_dump(const nlohmann::json& j);

}  // namespace gca
