#ifndef HREG_IO_HPP
#define HREG_IO_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hreg/applications.hpp"
#include "hreg/complex.hpp"
#include "hreg/hypergraph.hpp"
#include "hreg/removal.hpp"

#include "json.hpp"

namespace hreg {

using Json = nlohmann::ordered_json;

// Parses a JSON file; parse failures carry the byte position and path.
Json load_json(const std::string& path);

// Writes text exactly; parent directory must exist.
void write_text(const std::string& path, const std::string& text);
std::string read_text(const std::string& path);

// Serialized form: { "r", "k", "parts": [n_i], "colors": { "<I>": [names] },
// "coloring": { "<I>": flat array, lexicographic tuple order } } with <I> the
// comma-joined part ids.  Accepts ragged tables (regularization output).
Json hypergraph_json(const Hypergraph& G);
Hypergraph hypergraph_from_json(const Json& j);
void save_hypergraph(const Hypergraph& G, const std::string& path);
Hypergraph load_hypergraph(const std::string& path);

// { "r", "s", "h", "local": { "<I>": flat local ids, -1 invisible },
//   "binding": { "<I>": host color per local id } }
Json complex_json(const SimplicialComplex& S);
SimplicialComplex complex_from_json(const Json& j);

// { "r", "k", "h", "top": { "<I>": flat array, -1 invisible } }
Json pattern_json(const UniformPattern& F);
UniformPattern pattern_from_json(const Json& j);
void save_pattern(const UniformPattern& F, const std::string& path);
UniformPattern load_pattern(const std::string& path);

// { "N", "r", "points": [[...]] } / { "N", "k", "points": [[...]] }
Json grid_set_json(const GridSet& S);
GridSet grid_set_from_json(const Json& j);
Json simplex_set_json(const SimplexSet& S);
SimplexSet simplex_set_from_json(const Json& j);

// Newline-separated integer tuples; blank lines and '#' comments skipped;
// separators are spaces and/or commas.
std::vector<std::vector<int>> parse_point_lines(const std::string& text);

// Loads a grid set from either format: JSON object, JSON array of points
// (dimensions from n/r), or plain text lines.
GridSet load_grid_set(const std::string& path, int N, int r);

// Exact rationals serialize as "p/q" strings ("p" when q = 1).
std::string rational_str(const Rational& q);

// RFC-style CSV: fields quoted when they contain comma, quote, or newline;
// quotes doubled.  Rows written in given order, one trailing newline.
std::string csv_escape(const std::string& field);
std::string csv_table(const std::vector<std::string>& header,
                      const std::vector<std::vector<std::string>>& rows);

// report emission: "json" writes the object with 2-space indent, "csv"
// expects {"header": [...], "rows": [[...]]} produced by the callers.
void emit_report(const Json& report, const std::string& format, const std::string& path);

// Reproducibility sidecar: command line, parameters, seed, input digests.
struct RunManifest {
  std::string tool = "hreg";
  std::string version;
  std::vector<std::string> command;
  std::uint64_t seed = 0;
  std::map<std::string, std::string> input_digests;  // path -> fnv1a64 hex

  Json to_json() const;
};
std::string digest_hex(const std::string& bytes);
void write_manifest(const RunManifest& m, const Json& params, const std::string& path);

}  // namespace hreg

#endif
