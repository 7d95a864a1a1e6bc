#include "bergesat/serialize.hpp"

#include <json.hpp>

#include <sstream>

namespace bergesat {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json subset_to_array(VertexSet s) {
  ordered_json a = ordered_json::array();
  for (Vertex v : s.elements()) a.push_back(v);
  return a;
}

ordered_json graph_obj(const Graph& g) {
  ordered_json j;
  j["n"] = g.vertex_count();
  ordered_json edges = ordered_json::array();
  for (Edge e : g.edges()) edges.push_back({e.first, e.second});
  j["edges"] = std::move(edges);
  return j;
}

ordered_json hypergraph_obj(const Hypergraph& h) {
  ordered_json j;
  j["n"] = h.vertex_count();
  ordered_json edges = ordered_json::array();
  for (VertexSet e : h.hyperedges()) edges.push_back(subset_to_array(e));
  j["hyperedges"] = std::move(edges);
  return j;
}

ordered_json set_system_obj(const SetSystem& s) {
  ordered_json j;
  j["n"] = s.vertex_count();
  ordered_json members = ordered_json::array();
  for (VertexSet e : s.members()) members.push_back(subset_to_array(e));
  j["members"] = std::move(members);
  return j;
}

ordered_json witness_obj(const Graph& g, const BergeWitness& w) {
  ordered_json j;
  ordered_json vm = ordered_json::object();
  for (Vertex v = 1; v <= g.vertex_count(); ++v)
    vm[std::to_string(v)] = w.vertex_map[static_cast<std::size_t>(v) - 1];
  j["vertex_map"] = std::move(vm);
  ordered_json ea = ordered_json::array();
  for (int i = 0; i < g.edge_count(); ++i) {
    ordered_json entry;
    entry["edge"] = {g.edges()[i].first, g.edges()[i].second};
    entry["hyperedge_index"] = w.edge_assignment[i];
    ea.push_back(std::move(entry));
  }
  j["edge_assignment"] = std::move(ea);
  return j;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

// Translate nlohmann's byte offset into line/column for parse diagnostics.
[[noreturn]] void rethrow_parse_error(const std::string& text, const nlohmann::json::parse_error& e) {
  std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
  if (byte > text.size()) byte = text.size();
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte; ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  std::ostringstream msg;
  msg << "JSON parse error at line " << line << ", column " << col << ": " << e.what();
  throw std::runtime_error(msg.str());
}

ordered_json parse_document(const std::string& text) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    rethrow_parse_error(text, e);
  }
}

int require_int(const ordered_json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j[key].is_number_integer())
    throw std::runtime_error(std::string("expected integer field '") + key + "'");
  return j[key].get<int>();
}

const ordered_json& require_array(const ordered_json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j[key].is_array())
    throw std::runtime_error(std::string("expected array field '") + key + "'");
  return j[key];
}

VertexSet subset_from_array(const ordered_json& a) {
  if (!a.is_array()) throw std::runtime_error("expected an array of vertices");
  VertexSet s;
  for (const auto& v : a) {
    if (!v.is_number_integer()) throw std::runtime_error("expected an array of vertices");
    int vv = v.get<int>();
    if (vv < 1 || vv > kMaxGroundSetSize) throw std::runtime_error("vertex out of range");
    s = s.with(vv);
  }
  return s;
}

}  // namespace

std::string to_json(const Graph& g) { return dump(graph_obj(g)); }
std::string to_json(const Hypergraph& h) { return dump(hypergraph_obj(h)); }
std::string to_json(const SetSystem& s) { return dump(set_system_obj(s)); }
std::string witness_to_json(const Graph& g, const BergeWitness& w) {
  return dump(witness_obj(g, w));
}

Graph graph_from_json(const std::string& text) {
  ordered_json j = parse_document(text);
  int n = require_int(j, "n");
  std::vector<Edge> edges;
  for (const auto& e : require_array(j, "edges")) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw std::runtime_error("expected edges as [u, v] pairs");
    edges.push_back({e[0].get<int>(), e[1].get<int>()});
  }
  return Graph(n, std::move(edges));
}

Hypergraph hypergraph_from_json(const std::string& text) {
  ordered_json j = parse_document(text);
  int n = require_int(j, "n");
  std::vector<VertexSet> edges;
  for (const auto& e : require_array(j, "hyperedges")) edges.push_back(subset_from_array(e));
  return Hypergraph(n, std::move(edges));
}

SetSystem set_system_from_json(const std::string& text) {
  ordered_json j = parse_document(text);
  int n = require_int(j, "n");
  std::vector<VertexSet> members;
  for (const auto& e : require_array(j, "members")) members.push_back(subset_from_array(e));
  return SetSystem(n, std::move(members));
}

Hypergraph hypergraph_from_text(const std::string& text) {
  std::istringstream in(text);
  std::string header;
  while (std::getline(in, header)) {
    if (header.find_first_not_of(" \t\r") != std::string::npos) break;
  }
  std::istringstream hl(header);
  int n = 0, m = 0;
  if (!(hl >> n >> m) || m < 0) throw std::runtime_error("expected 'n m' header line");
  std::vector<VertexSet> edges;
  std::string line;
  while (static_cast<int>(edges.size()) < m && std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    VertexSet e;
    int v;
    while (ls >> v) {
      if (v < 1 || v > kMaxGroundSetSize) throw std::runtime_error("vertex out of range");
      e = e.with(v);
    }
    edges.push_back(e);
  }
  if (static_cast<int>(edges.size()) < m) throw std::runtime_error("fewer hyperedges than announced");
  return Hypergraph(n, std::move(edges));
}

Hypergraph parse_hypergraph(const std::string& text) {
  std::size_t i = text.find_first_not_of(" \t\r\n");
  if (i != std::string::npos && text[i] == '{') return hypergraph_from_json(text);
  return hypergraph_from_text(text);
}

std::string format_subset(VertexSet s, int n) {
  if (s == VertexSet::full(n)) return "[" + std::to_string(n) + "]";
  if (s.empty()) return "{}";
  std::string out = "{";
  bool first = true;
  for (Vertex v : s.elements()) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

std::string format_hypergraph(const Hypergraph& h) {
  std::string out = "([" + std::to_string(h.vertex_count()) + "], {";
  bool first = true;
  for (VertexSet e : h.hyperedges()) {
    if (!first) out += ", ";
    out += format_subset(e, h.vertex_count());
    first = false;
  }
  return out + "})";
}

std::string format_graph_edges(const Graph& g) {
  std::string out = "{";
  bool first = true;
  for (Edge e : g.edges()) {
    if (!first) out += ", ";
    out += std::to_string(e.first) + std::to_string(e.second);
    first = false;
  }
  return out + "}";
}

std::string check_berge_output_json(const Graph& g, const Hypergraph& h,
                                    const std::optional<BergeWitness>& w) {
  ordered_json j;
  j["schema_version"] = 1;
  j["contains"] = w.has_value();
  j["witness"] = w ? witness_obj(g, *w) : ordered_json(nullptr);
  (void)h;
  return dump(j);
}

std::string check_berge_output_text(const Graph& g, const Hypergraph& h,
                                    const std::optional<BergeWitness>& w) {
  if (!w) return "none\n";
  std::ostringstream out;
  out << "contains: yes\n";
  out << "vertex_map:";
  for (Vertex v = 1; v <= g.vertex_count(); ++v)
    out << " " << v << "->" << w->vertex_map[static_cast<std::size_t>(v) - 1];
  out << "\nedge_assignment:\n";
  for (int i = 0; i < g.edge_count(); ++i) {
    int idx = w->edge_assignment[i];
    out << "  " << g.edges()[i].first << g.edges()[i].second << " -> #" << idx << " "
        << format_subset(h.hyperedges()[idx], h.vertex_count()) << "\n";
  }
  return out.str();
}

std::string verify_sat_output_json(const Graph& g, const SaturationReport& r) {
  ordered_json j;
  j["schema_version"] = 1;
  j["is_free"] = r.is_free;
  j["is_saturated"] = r.is_saturated;
  ordered_json failing = ordered_json::array();
  for (VertexSet e : r.failing_edges) failing.push_back(subset_to_array(e));
  j["failing_edges"] = std::move(failing);
  ordered_json witnesses = ordered_json::array();
  for (const auto& [e, w] : r.witness_per_edge) {
    ordered_json entry;
    entry["edge"] = subset_to_array(e);
    entry["witness"] = witness_obj(g, w);
    witnesses.push_back(std::move(entry));
  }
  j["witnesses"] = std::move(witnesses);
  return dump(j);
}

std::string verify_sat_output_text(const Graph& g, const SaturationReport& r) {
  std::ostringstream out;
  out << "free: " << (r.is_free ? "yes" : "no") << "\n";
  out << "saturated: " << (r.is_saturated ? "yes" : "no") << "\n";
  if (!r.failing_edges.empty()) {
    out << "failing edges:";
    // n is not part of the report; failing edges never equal the full set of
    // a ground set we cannot recover here, so plain brace notation is used.
    for (VertexSet e : r.failing_edges) out << " " << format_subset(e, 0);
    out << "\n";
  }
  (void)g;
  return out.str();
}

std::string sat_number_output_json(const SatResult& r) {
  ordered_json j;
  j["schema_version"] = 1;
  j["value"] = r.value;
  j["witness"] = hypergraph_obj(r.witness);
  ordered_json stats;
  stats["enumerated"] = r.stats.enumerated;
  stats["isomorph_rejected"] = r.stats.isomorph_rejected;
  stats["examined"] = r.stats.examined;
  j["stats"] = std::move(stats);
  return dump(j);
}

std::string sat_number_output_text(const SatResult& r) {
  std::ostringstream out;
  out << "sat = " << r.value << "\n";
  out << "witness: " << format_hypergraph(r.witness) << "\n";
  out << "candidates: enumerated " << r.stats.enumerated << ", isomorph-rejected "
      << r.stats.isomorph_rejected << ", examined " << r.stats.examined << "\n";
  return out.str();
}

std::string theorem_output_json(const std::vector<TheoremRow>& rows) {
  ordered_json j;
  j["schema_version"] = 1;
  bool all = true;
  ordered_json arr = ordered_json::array();
  for (const TheoremRow& row : rows) {
    ordered_json r;
    r["graph"] = graph_obj(row.graph);
    r["predicted"] = row.predicted;
    r["computed"] = row.computed;
    r["agree"] = row.agree;
    r["construction"] = row.construction;
    r["construction_saturated"] = row.construction_saturated;
    arr.push_back(std::move(r));
    all = all && row.agree && row.construction_saturated;
  }
  j["rows"] = std::move(arr);
  j["all_agree"] = all;
  return dump(j);
}

std::string theorem_output_text(const std::vector<TheoremRow>& rows) {
  std::ostringstream out;
  bool all = true;
  for (const TheoremRow& row : rows) {
    out << "V=" << row.graph.vertex_count() << " E=" << row.graph.edge_count() << " edges="
        << format_graph_edges(row.graph) << " predicted=" << row.predicted
        << " computed=" << row.computed << " agree=" << (row.agree ? "yes" : "no")
        << " construction=" << row.construction
        << " saturated=" << (row.construction_saturated ? "yes" : "no") << "\n";
    all = all && row.agree && row.construction_saturated;
  }
  out << "all rows agree: " << (all ? "yes" : "no") << "\n";
  return out.str();
}

std::string lemma_output_json(int t, int n, bool holds) {
  ordered_json j;
  j["schema_version"] = 1;
  j["t"] = t;
  j["n"] = n;
  j["holds"] = holds;
  return dump(j);
}

std::string lemma_output_text(int t, int n, bool holds) {
  std::ostringstream out;
  out << "no hypergraph on [" << n << "] with " << (t - 2) << " hyperedges is saturated for the "
      << "star on " << t << " vertices: " << (holds ? "yes" : "no") << "\n";
  return out.str();
}

}  // namespace bergesat
