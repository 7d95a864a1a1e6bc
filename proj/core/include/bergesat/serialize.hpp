#pragma once

#include "bergesat/berge.hpp"
#include "bergesat/graph.hpp"
#include "bergesat/hypergraph.hpp"
#include "bergesat/saturation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bergesat {

// --- JSON emission (stable field and element order, 2-space indent) ---

/// {"n": n, "edges": [[u,v], ...]} with u < v, pairs sorted lexicographically.
std::string to_json(const Graph& g);

/// {"n": n, "hyperedges": [[...], ...]} in canonical listing order.
std::string to_json(const Hypergraph& h);

/// {"n": n, "members": [[...], ...]}; the empty set appears as [].
std::string to_json(const SetSystem& s);

/// {"vertex_map": {"1": h1, ...}, "edge_assignment": [{"edge": [u,v],
///  "hyperedge_index": k}, ...]} following the edge order of g.
std::string witness_to_json(const Graph& g, const BergeWitness& w);

// --- JSON parsing; malformed input raises std::runtime_error with the
// --- line/column of the failure ---

Graph graph_from_json(const std::string& text);
Hypergraph hypergraph_from_json(const std::string& text);
SetSystem set_system_from_json(const std::string& text);

/// Compact text form: a "n m" header line, then one hyperedge per line as
/// space-separated vertices.
Hypergraph hypergraph_from_text(const std::string& text);

/// Accepts either the JSON object form or the compact text form.
Hypergraph parse_hypergraph(const std::string& text);

// --- Human-readable set notation ---

/// "{2,3,4}", "[n]" for the full set, "{}" for the empty set.
std::string format_subset(VertexSet s, int n);

/// "([4], {[4], {2,3,4}, {1,3,4}, {1,2,4}})"
std::string format_hypergraph(const Hypergraph& h);

/// Edges as digit pairs: "{12, 13, 45}" (ground sets here never exceed 9).
std::string format_graph_edges(const Graph& g);

// --- Report emission used by the command-line front end ---

std::string check_berge_output_json(const Graph& g, const Hypergraph& h,
                                    const std::optional<BergeWitness>& w);
std::string check_berge_output_text(const Graph& g, const Hypergraph& h,
                                    const std::optional<BergeWitness>& w);

std::string verify_sat_output_json(const Graph& g, const SaturationReport& r);
std::string verify_sat_output_text(const Graph& g, const SaturationReport& r);

std::string sat_number_output_json(const SatResult& r);
std::string sat_number_output_text(const SatResult& r);

std::string theorem_output_json(const std::vector<TheoremRow>& rows);
std::string theorem_output_text(const std::vector<TheoremRow>& rows);

std::string lemma_output_json(int t, int n, bool holds);
std::string lemma_output_text(int t, int n, bool holds);

}  // namespace bergesat
