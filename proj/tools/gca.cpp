// Command-line front end for the graph-algebra stability library.
//
// Exit codes: 0 success/affirmative verdict, 1 negative verdict, 2 domain
// error (invalid graph or violated precondition), 3 I/O or parse error,
// 4 witness construction unsupported at the requested vertex.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "gca/certificate.hpp"
#include "gca/error.hpp"
#include "gca/graph.hpp"
#include "gca/hereditary.hpp"
#include "gca/json_io.hpp"
#include "gca/stability.hpp"
#include "gca/stabilize.hpp"
#include "gca/trace.hpp"

namespace {

using gca::Error;
using gca::ParseError;
using gca::PresentedGraph;
using gca::Vertex;
using gca::VertexSet;
using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw ParseError("cannot read \"" + path + "\"");
  return buf.str();
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

PresentedGraph load_graph(const std::string& path) {
  return gca::graph_from_json(parse_json(read_file(path)));
}

VertexSet parse_set_flag(const std::string& text) {
  if (!text.empty() && text.front() == '{')
    return gca::vertex_set_from_json(parse_json(text));
  std::set<std::string> base;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    if (!item.empty()) base.insert(item);
  }
  return VertexSet(std::move(base), {});
}

std::vector<Vertex> parse_vertex_list(const std::string& text) {
  std::vector<Vertex> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(gca::parse_vertex_flag(item));
  }
  return out;
}

void write_output(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write \"" + path + "\"");
  out << content;
  if (!out) throw ParseError("cannot write \"" + path + "\"");
}

std::string render_graph_text(const PresentedGraph& g) {
  std::ostringstream out;
  out << "vertices:";
  for (const auto& v : g.vertex_ids()) out << " " << v;
  out << "\n";
  for (const auto& e : g.edge_specs()) {
    out << "edge: " << e.src << " -> " << e.dst << "  x"
        << (e.mult.is_omega() ? std::string("omega")
                              : std::to_string(e.mult.count()))
        << "\n";
  }
  out << "heads:";
  for (const auto& h : g.heads()) out << " " << h;
  out << "\n";
  return out.str();
}

std::string render_set_text(const VertexSet& s) {
  std::ostringstream out;
  out << "base:";
  for (const auto& v : s.base()) out << " " << v;
  out << "\n";
  for (const auto& [u, p] : s.portions()) {
    out << "chain at " << u << ": "
        << (p.is_all() ? std::string("all")
                       : "first " + std::to_string(p.prefix_length()))
        << "\n";
  }
  return out.str();
}

std::string render_trace_text(const gca::GraphTrace& t, int indent = 2) {
  std::ostringstream out;
  for (const auto& [v, x] : t.values) {
    out << std::string(indent, ' ') << "t(" << v
        << ") = " << gca::format_rational(x) << "\n";
  }
  return out.str();
}

std::string render_stability_text(const gca::StabilityReport& r) {
  std::ostringstream out;
  out << "verdict: " << (r.stable ? "STABLE" : "NOT_STABLE") << "\n";
  out << "loop check: ";
  if (r.loop_check.pass) {
    out << "pass (every loop vertex is left infinite)\n";
  } else {
    out << "FAIL: \"" << *r.loop_check.witness
        << "\" lies on a loop but is left finite\n";
  }
  out << "trace check: ";
  if (r.trace_check.pass) {
    out << "pass (no nonzero bounded trace)\n";
  } else {
    out << "FAIL: nonzero bounded trace of norm 1 exists\n"
        << render_trace_text(*r.trace_check.witness);
  }
  if (r.fast_path_used)
    out << "note: graph has no sources, so the verdict equals the "
           "all-vertices-left-infinite criterion\n";
  return out.str();
}

// Action to run once flags are parsed; returns the process exit code.
struct Command {
  std::string file;
  std::string format = "text";
  bool json() const { return format == "json"; }
};

int emit(const Command& cmd, const json& j, const std::string& text) {
  if (cmd.json())
    std::cout << gca::canonical_dump(j);
  else
    std::cout << text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stability of graph algebras from graph data"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub, Command& cmd) {
    sub->add_option("file", cmd.file, "graph JSON file")->required();
    sub->add_option("--format", cmd.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
  };

  int exit_code = 0;

  // validate
  static Command c_validate;
  auto* validate = app.add_subcommand("validate", "check a graph file");
  add_common(validate, c_validate);
  validate->callback([&] {
    const PresentedGraph g = load_graph(c_validate.file);
    json j{{"valid", true},
           {"vertices", g.base_size()},
           {"edges", g.edge_specs().size()},
           {"heads", g.heads().size()}};
    std::ostringstream text;
    text << "valid: " << g.base_size() << " vertices, "
         << g.edge_specs().size() << " edges, " << g.heads().size()
         << " heads\n";
    exit_code = emit(c_validate, j, text.str());
  });

  // stability
  static Command c_stab;
  static bool via_traces = false;
  auto* stability = app.add_subcommand("stability", "decide stability");
  add_common(stability, c_stab);
  stability->add_flag("--via-traces", via_traces,
                      "decide through the norm-one trace space (same verdict)");
  stability->callback([&] {
    const PresentedGraph g = load_graph(c_stab.file);
    const gca::StabilityReport r =
        via_traces ? gca::is_stable_via_T(g) : gca::is_stable(g);
    emit(c_stab, gca::stability_report_to_json(r), render_stability_text(r));
    exit_code = r.stable ? 0 : 1;
  });

  // traces
  static Command c_traces;
  auto* traces =
      app.add_subcommand("traces", "nonzero bounded trace or zero certificate");
  add_common(traces, c_traces);
  traces->callback([&] {
    const PresentedGraph g = load_graph(c_traces.file);
    const gca::TraceVerdict v = gca::nonzero_bounded_trace(g);
    std::ostringstream text;
    if (v.nonzero) {
      text << "verdict: NONZERO (norm-one witness below)\n"
           << render_trace_text(v.witness);
    } else {
      text << "verdict: ONLY_ZERO\n";
      for (const auto& s : v.certificate)
        text << "  " << s.vertex << " = 0 [" << s.rule << "]: " << s.reason
             << "\n";
    }
    text << "trace space dimension: " << gca::trace_space_dimension(g) << "\n";
    emit(c_traces, gca::trace_verdict_to_json(v), text.str());
    exit_code = v.nonzero ? 0 : 1;
  });

  // saturate / closure / breaking
  static Command c_sat;
  static std::string sat_set;
  auto* saturate = app.add_subcommand("saturate", "saturate a hereditary set");
  add_common(saturate, c_sat);
  saturate->add_option("--set", sat_set, "vertex set (ids or JSON)")
      ->required();
  saturate->callback([&] {
    const PresentedGraph g = load_graph(c_sat.file);
    const VertexSet s = gca::saturate(g, parse_set_flag(sat_set));
    exit_code = emit(c_sat, gca::vertex_set_to_json(s), render_set_text(s));
  });

  static Command c_clo;
  static std::string clo_set;
  auto* closure = app.add_subcommand("closure", "hereditary closure of a set");
  add_common(closure, c_clo);
  closure->add_option("--set", clo_set, "vertex set (ids or JSON)")
      ->required();
  closure->callback([&] {
    const PresentedGraph g = load_graph(c_clo.file);
    const VertexSet s = gca::hereditary_closure(g, parse_set_flag(clo_set));
    exit_code = emit(c_clo, gca::vertex_set_to_json(s), render_set_text(s));
  });

  static Command c_brk;
  static std::string brk_set;
  auto* breaking =
      app.add_subcommand("breaking", "breaking vertices of a saturated set");
  add_common(breaking, c_brk);
  breaking->add_option("--set", brk_set, "vertex set (ids or JSON)")
      ->required();
  breaking->callback([&] {
    const PresentedGraph g = load_graph(c_brk.file);
    const auto b = gca::breaking_vertices(g, parse_set_flag(brk_set));
    std::ostringstream text;
    text << "breaking:";
    for (const auto& v : b) text << " " << v;
    text << "\n";
    exit_code = emit(c_brk, json(b), text.str());
  });

  // quotient
  static Command c_quo;
  static std::string quo_set, quo_s, quo_out;
  auto* quotient = app.add_subcommand("quotient", "quotient by (H, S)");
  add_common(quotient, c_quo);
  quotient->add_option("--set", quo_set, "H: saturated hereditary set")
      ->required();
  quotient->add_option("--s", quo_s, "S: subset of the breaking vertices");
  quotient->add_option("-o,--output", quo_out, "write graph JSON here");
  quotient->callback([&] {
    const PresentedGraph g = load_graph(c_quo.file);
    const VertexSet s_flag = parse_set_flag(quo_s);
    std::set<std::string> s(s_flag.base().begin(), s_flag.base().end());
    const PresentedGraph q =
        gca::quotient_graph(g, parse_set_flag(quo_set), s);
    const json j = gca::graph_to_json(q);
    if (!quo_out.empty()) {
      write_output(quo_out, gca::canonical_dump(j));
      exit_code = 0;
      return;
    }
    exit_code = emit(c_quo, j, render_graph_text(q));
  });

  // stabilize
  static Command c_stz;
  static bool stz_minimal = false;
  static std::string stz_out;
  auto* stabilize = app.add_subcommand("stabilize", "add heads");
  add_common(stabilize, c_stz);
  stabilize->add_flag("--minimal", stz_minimal,
                      "heads only at left-finite vertices");
  stabilize->add_option("-o,--output", stz_out, "write graph JSON here");
  stabilize->callback([&] {
    const PresentedGraph g = load_graph(c_stz.file);
    const PresentedGraph r =
        stz_minimal ? gca::stabilize_minimal(g) : gca::stabilize_graph(g);
    const json j = gca::graph_to_json(r);
    if (!stz_out.empty()) {
      write_output(stz_out, gca::canonical_dump(j));
      exit_code = 0;
      return;
    }
    exit_code = emit(c_stz, j, render_graph_text(r));
  });

  // condition-k
  static Command c_k;
  auto* condk = app.add_subcommand("condition-k", "simple-loop count check");
  add_common(condk, c_k);
  condk->callback([&] {
    const PresentedGraph g = load_graph(c_k.file);
    const gca::ConditionKReport r = gca::condition_k(g);
    std::ostringstream text;
    text << "holds: " << (r.holds ? "true" : "false") << "\n";
    for (const auto& [v, n] : r.loop_counts) {
      text << "  " << v << ": " << n;
      if (n == 2) text << " (or more)";
      text << "\n";
    }
    emit(c_k, gca::condition_k_to_json(r), text.str());
    exit_code = r.holds ? 0 : 1;
  });

  // witness
  static Command c_wit;
  static std::string wit_v, wit_avoid;
  auto* witness =
      app.add_subcommand("witness", "projection-comparison certificate");
  add_common(witness, c_wit);
  witness->add_option("--v", wit_v, "dominated vertex (u or u#k)")->required();
  witness->add_option("--avoid", wit_avoid,
                      "comma-separated vertices the witness must avoid");
  witness->callback([&] {
    const PresentedGraph g = load_graph(c_wit.file);
    const Vertex v = gca::parse_vertex_flag(wit_v);
    std::set<Vertex> avoid;
    for (const auto& a : parse_vertex_list(wit_avoid)) avoid.insert(a);
    const gca::ComparisonCertificate cert =
        gca::find_witness_single(g, v, avoid);
    std::ostringstream text;
    text << "dominated: " << v.to_string() << "\n" << "dominating:";
    for (const auto& w : cert.dominating) text << " " << w.to_string();
    text << "\n";
    exit_code = emit(c_wit, gca::certificate_to_json(cert), text.str());
  });

  // verify
  static Command c_ver;
  static std::string ver_cert;
  auto* verify =
      app.add_subcommand("verify", "re-check a comparison certificate");
  add_common(verify, c_ver);
  verify->add_option("--cert", ver_cert, "certificate JSON file")->required();
  verify->callback([&] {
    const PresentedGraph g = load_graph(c_ver.file);
    const gca::ComparisonCertificate cert =
        gca::certificate_from_json(parse_json(read_file(ver_cert)));
    const gca::VerifyResult r = gca::verify_certificate(g, cert);
    std::ostringstream text;
    text << (r.ok ? "ok" : "INVALID") << "\n";
    for (const auto& reason : r.reasons) text << "  " << reason << "\n";
    emit(c_ver, gca::verify_result_to_json(r), text.str());
    exit_code = r.ok ? 0 : 1;
  });

  // reach
  static Command c_reach;
  static std::string reach_from, reach_to;
  auto* reach = app.add_subcommand("reach", "does one vertex reach another?");
  add_common(reach, c_reach);
  reach->add_option("--from", reach_from, "source vertex (u or u#k)")
      ->required();
  reach->add_option("--to", reach_to, "target vertex (u or u#k)")->required();
  reach->callback([&] {
    const PresentedGraph g = load_graph(c_reach.file);
    const Vertex from = gca::parse_vertex_flag(reach_from);
    const Vertex to = gca::parse_vertex_flag(reach_to);
    const bool yes = gca::reaches(g, from, to);
    std::ostringstream text;
    text << from.to_string() << " reaches " << to.to_string() << ": "
         << (yes ? "yes" : "no") << "\n";
    emit(c_reach, json{{"reaches", yes}}, text.str());
    exit_code = yes ? 0 : 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the usage message
    return 3;
  } catch (const gca::WitnessUnavailableError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
