#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "graphalg/transducer.hpp"

namespace graphalg {

using Json = nlohmann::ordered_json;

/// Malformed JSON documents and missing keys are InputErrors.
Json parse_json(std::string_view text);
Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);
/// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);

/// {"vertices": [...], "edges": [{"id", "src", "dst"}, ...]}
Json to_json(const Graph& g);
GraphPtr graph_from_json(const Json& j);

/// {"anchor": v, "edges": [ids]}. The anchor may be omitted when edges is
/// non-empty, and must then equal the source of the first edge.
Json to_json(const Graph& g, const Path& p);
Path path_from_json(const Graph& g, const Json& j);

/// {"terms": [{"coeff", "mu", "nu"}, ...]} in normal form. Coefficients
/// outside the 64-bit range are written as decimal strings.
Json to_json(const AlgebraElement& a);
AlgebraElement element_from_json(const GraphPtr& graph, const Json& j);

/// {"pairs": [{"mu", "nu"}, ...]}
Json to_json(const PairSet& j);
/// Accepts the pair form or an element ({"terms": ...}) of the polynomial class.
PairSet pairset_from_json(const GraphPtr& graph, const Json& j);

/// {"prefix": [ids], "period": [ids]}
Json to_json(const Graph& g, const EventuallyPeriodicWord& w);
EventuallyPeriodicWord word_from_json(const Graph& g, const Json& j);

/// One trace line: {"round", "split": {"mu", "nu"}, "negative_edges", "classification"}.
Json to_json(const Graph& g, const SplitRound& r);
/// JSON lines, one per round.
std::string trace_jsonl(const SplitResult& r);

/// {"vertices": ["(mu, nu)", ...], "edges": [{"source", "target", "label", "degree"}], "classification"}
Json coding_summary(const CodingGraph& cg);

/// {"outcome", "delay"?, "witness"?, "splits": [...]}. The witness holds the
/// path outside the image and the offending cycles as vertex texts.
Json to_json(const DiagonalVerdict& v);

}  // namespace graphalg
