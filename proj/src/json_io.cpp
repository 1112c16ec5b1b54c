#include "gca/json_io.hpp"

#include "gca/error.hpp"

namespace gca {

using nlohmann::json;

namespace {

const json& field(const json& j, const char* name) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  auto it = j.find(name);
  if (it == j.end())
    throw ParseError(std::string("missing field \"") + name + "\"");
  return *it;
}

std::vector<std::string> string_array(const json& j, const char* what) {
  if (!j.is_array())
    throw ParseError(std::string(what) + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string())
      throw ParseError(std::string(what) + " must be an array of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

Multiplicity mult_from_json(const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "omega") return Multiplicity::omega();
    throw ParseError("edge multiplicity must be a positive integer or "
                     "\"omega\"");
  }
  if (j.is_number_integer() && !j.is_number_float()) {
    const auto n = j.get<std::int64_t>();
    if (n < 1) throw Error("edge multiplicity must be at least 1");
    return Multiplicity::finite(static_cast<std::uint64_t>(n));
  }
  throw ParseError("edge multiplicity must be a positive integer or "
                   "\"omega\"");
}

json mult_to_json(const Multiplicity& m) {
  if (m.is_omega()) return json("omega");
  return json(m.count());
}

Rational rational_from_json(const json& j, const char* what) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer() && !j.is_number_float())
    return Rational(j.get<std::int64_t>());
  throw ParseError(std::string(what) +
                   " must be a rational \"p/q\" string or an integer");
}

}  // namespace

json graph_to_json(const PresentedGraph& g) {
  json edges = json::array();
  for (const auto& e : g.edge_specs()) {
    edges.push_back(
        json{{"src", e.src}, {"dst", e.dst}, {"mult", mult_to_json(e.mult)}});
  }
  return json{{"vertices", g.vertex_ids()},
              {"edges", std::move(edges)},
              {"heads", std::vector<std::string>(g.heads().begin(),
                                                 g.heads().end())}};
}

PresentedGraph graph_from_json(const json& j) {
  const auto vertices = string_array(field(j, "vertices"), "\"vertices\"");
  std::vector<EdgeSpec> edges;
  if (j.contains("edges")) {
    const json& je = j.at("edges");
    if (!je.is_array()) throw ParseError("\"edges\" must be an array");
    for (const auto& e : je) {
      if (!e.is_object()) throw ParseError("each edge must be an object");
      EdgeSpec spec;
      const json& src = field(e, "src");
      const json& dst = field(e, "dst");
      if (!src.is_string() || !dst.is_string())
        throw ParseError("edge endpoints must be strings");
      spec.src = src.get<std::string>();
      spec.dst = dst.get<std::string>();
      spec.mult = e.contains("mult") ? mult_from_json(e.at("mult"))
                                     : Multiplicity::finite(1);
      edges.push_back(std::move(spec));
    }
  }
  std::vector<std::string> heads;
  if (j.contains("heads")) heads = string_array(j.at("heads"), "\"heads\"");
  return PresentedGraph::make(vertices, edges, heads);
}

json vertex_to_json(const Vertex& v) {
  if (!v.is_head()) return json(v.base);
  return json::array({v.base, v.index});
}

Vertex vertex_from_json(const json& j) {
  if (j.is_string()) return Vertex{j.get<std::string>()};
  if (j.is_array() && j.size() == 2 && j[0].is_string() &&
      j[1].is_number_integer() && !j[1].is_number_float()) {
    const auto idx = j[1].get<std::int64_t>();
    if (idx >= 1)
      return Vertex{j[0].get<std::string>(), static_cast<std::uint64_t>(idx)};
  }
  throw ParseError(
      "a vertex is \"u\" or [\"u\", k] with chain index k >= 1, got " +
      j.dump());
}

Vertex parse_vertex_flag(const std::string& text) {
  if (text.empty())
    throw ParseError("bad vertex \"\"; expected u or u#k");
  const auto hash = text.find('#');
  if (hash == std::string::npos) return Vertex{text};
  const std::string base = text.substr(0, hash);
  const std::string idx = text.substr(hash + 1);
  if (base.empty() || idx.empty() || idx.find('#') != std::string::npos)
    throw ParseError("bad vertex \"" + text + "\"; expected u or u#k");
  std::uint64_t index = 0;
  for (char c : idx) {
    if (c < '0' || c > '9')
      throw ParseError("bad vertex \"" + text + "\"; expected u or u#k");
    index = index * 10 + static_cast<std::uint64_t>(c - '0');
    if (index > (std::uint64_t{1} << 62))
      throw ParseError("chain index out of range in \"" + text + "\"");
  }
  if (index == 0)
    throw ParseError("chain index must be at least 1 in \"" + text + "\"");
  return Vertex{base, index};
}

json vertex_set_to_json(const VertexSet& s) {
  json heads = json::object();
  for (const auto& [u, p] : s.portions()) {
    heads[u] = p.is_all() ? json("all") : json(p.prefix_length());
  }
  return json{{"base", std::vector<std::string>(s.base().begin(),
                                                s.base().end())},
              {"heads", std::move(heads)}};
}

VertexSet vertex_set_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("a vertex set must be a JSON object");
  std::set<std::string> base;
  if (j.contains("base")) {
    for (auto& v : string_array(j.at("base"), "\"base\"")) {
      base.insert(std::move(v));
    }
  }
  std::map<std::string, HeadPortion> portions;
  if (j.contains("heads")) {
    const json& jh = j.at("heads");
    if (!jh.is_object())
      throw ParseError("\"heads\" must map vertex ids to \"all\" or k >= 1");
    for (const auto& [u, p] : jh.items()) {
      if (p.is_string() && p.get<std::string>() == "all") {
        portions.emplace(u, HeadPortion::all());
      } else if (p.is_number_integer() && !p.is_number_float() &&
                 p.get<std::int64_t>() >= 1) {
        portions.emplace(
            u, HeadPortion::prefix(static_cast<std::uint64_t>(
                   p.get<std::int64_t>())));
      } else {
        throw ParseError("head portion for \"" + u +
                         "\" must be \"all\" or an integer k >= 1");
      }
    }
  }
  return VertexSet(std::move(base), std::move(portions));
}

json trace_to_json(const GraphTrace& t) {
  json values = json::object();
  for (const auto& [v, x] : t.values) values[v] = format_rational(x);
  return json{{"values", std::move(values)}};
}

GraphTrace trace_from_json(const json& j) {
  const json& jv = field(j, "values");
  if (!jv.is_object())
    throw ParseError("\"values\" must map vertex ids to rationals");
  GraphTrace t;
  for (const auto& [v, x] : jv.items())
    t.values[v] = rational_from_json(x, "trace value");
  return t;
}

json trace_norm_to_json(const TraceNorm& n) {
  if (n.infinite) return json("infinite");
  return json(format_rational(n.value));
}

json trace_verdict_to_json(const TraceVerdict& v) {
  if (v.nonzero)
    return json{{"verdict", "NONZERO"}, {"witness", trace_to_json(v.witness)}};
  json steps = json::array();
  for (const auto& s : v.certificate) {
    steps.push_back(json{{"vertex", s.vertex},
                         {"rule", s.rule},
                         {"reason", s.reason}});
  }
  return json{{"verdict", "ONLY_ZERO"}, {"certificate", std::move(steps)}};
}

json stability_report_to_json(const StabilityReport& r) {
  json loop = json{{"pass", r.loop_check.pass}};
  if (r.loop_check.witness) loop["witness"] = *r.loop_check.witness;
  json trace = json{{"pass", r.trace_check.pass}};
  if (r.trace_check.witness)
    trace["witness"] = trace_to_json(*r.trace_check.witness);
  return json{{"verdict", r.stable ? "STABLE" : "NOT_STABLE"},
              {"loop_check", std::move(loop)},
              {"trace_check", std::move(trace)},
              {"fast_path_used", r.fast_path_used}};
}

json condition_k_to_json(const ConditionKReport& r) {
  // counts are capped: 2 means "at least 2"
  return json{{"holds", r.holds}, {"loop_counts", r.loop_counts}};
}

json left_infinite_criterion_to_json(const LeftInfiniteCriterion& c) {
  return json{{"applies", c.applies},
              {"all_left_infinite", c.all_left_infinite}};
}

namespace {

json cert_node_to_json(const CertNode& n) {
  if (n.kind == CertNode::Kind::REACH) {
    json path = json::array();
    for (const auto& v : n.path) path.push_back(vertex_to_json(v));
    return json{{"kind", "REACH"},
                {"vertex", vertex_to_json(n.vertex)},
                {"source", vertex_to_json(n.source)},
                {"path", std::move(path)}};
  }
  json children = json::array();
  for (const auto& c : n.children) children.push_back(cert_node_to_json(c));
  return json{{"kind", "SPLIT"},
              {"vertex", vertex_to_json(n.vertex)},
              {"children", std::move(children)}};
}

CertNode cert_node_from_json(const json& j) {
  CertNode n;
  const json& kind = field(j, "kind");
  n.vertex = vertex_from_json(field(j, "vertex"));
  if (kind == "REACH") {
    n.kind = CertNode::Kind::REACH;
    n.source = vertex_from_json(field(j, "source"));
    const json& path = field(j, "path");
    if (!path.is_array()) throw ParseError("\"path\" must be an array");
    for (const auto& v : path) n.path.push_back(vertex_from_json(v));
  } else if (kind == "SPLIT") {
    n.kind = CertNode::Kind::SPLIT;
    const json& children = field(j, "children");
    if (!children.is_array())
      throw ParseError("\"children\" must be an array");
    for (const auto& c : children)
      n.children.push_back(cert_node_from_json(c));
  } else {
    throw ParseError("node kind must be \"REACH\" or \"SPLIT\"");
  }
  return n;
}

}  // namespace

json certificate_to_json(const ComparisonCertificate& c) {
  json dominated = json::array(), dominating = json::array(),
       avoid = json::array(), trees = json::array();
  for (const auto& v : c.dominated) dominated.push_back(vertex_to_json(v));
  for (const auto& v : c.dominating) dominating.push_back(vertex_to_json(v));
  for (const auto& v : c.avoid) avoid.push_back(vertex_to_json(v));
  for (const auto& t : c.trees) trees.push_back(cert_node_to_json(t));
  return json{{"dominated", std::move(dominated)},
              {"dominating", std::move(dominating)},
              {"avoid", std::move(avoid)},
              {"trees", std::move(trees)}};
}

ComparisonCertificate certificate_from_json(const json& j) {
  ComparisonCertificate c;
  const json& dominated = field(j, "dominated");
  const json& dominating = field(j, "dominating");
  const json& avoid = field(j, "avoid");
  const json& trees = field(j, "trees");
  if (!dominated.is_array() || !dominating.is_array() || !avoid.is_array() ||
      !trees.is_array())
    throw ParseError("certificate fields must be arrays");
  for (const auto& v : dominated) c.dominated.push_back(vertex_from_json(v));
  for (const auto& v : dominating) c.dominating.push_back(vertex_from_json(v));
  for (const auto& v : avoid) c.avoid.insert(vertex_from_json(v));
  for (const auto& t : trees) c.trees.push_back(cert_node_from_json(t));
  return c;
}

json verify_result_to_json(const VerifyResult& r) {
  return json{{"ok", r.ok}, {"reasons", r.reasons}};
}

std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace gca
