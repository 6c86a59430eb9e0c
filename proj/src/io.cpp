#include "hreg/io.hpp"

#include <fstream>
#include <sstream>

#include "hreg/errors.hpp"
#include "hreg/rational.hpp"
#include "hreg/regularity.hpp"

namespace hreg {
namespace {

std::string tuple_str(const std::vector<int>& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(t[i]);
  }
  return s + ")";
}

// Field access with diagnostics that name the missing/ill-typed field.
const Json& need(const Json& j, const char* field) {
  auto it = j.find(field);
  if (it == j.end()) throw ValidationError(std::string("missing field \"") + field + "\"");
  return *it;
}

int need_int(const Json& j, const char* field) {
  const Json& v = need(j, field);
  if (!v.is_number_integer())
    throw ValidationError(std::string("field \"") + field + "\" must be an integer");
  return v.get<int>();
}

std::vector<IndexSet> keyed_sets(int r, int k) { return canonical_subsets(IndexSet::full(r), k); }

}  // namespace

Json load_json(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot open " + path + " for writing");
  out << text;
  if (!out) throw ValidationError("write to " + path + " failed");
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json hypergraph_json(const Hypergraph& G) {
  Json j;
  j["r"] = G.r();
  j["k"] = G.k();
  j["parts"] = G.part_sizes();
  Json colors = Json::object(), coloring = Json::object();
  for (std::size_t ord = 0; ord < G.index_sets().size(); ++ord) {
    std::string key = G.index_sets()[ord].str();
    colors[key] = G.table(static_cast<int>(ord));
    coloring[key] = G.coloring(static_cast<int>(ord));
  }
  j["colors"] = std::move(colors);
  j["coloring"] = std::move(coloring);
  return j;
}

Hypergraph hypergraph_from_json(const Json& j) {
  int r = need_int(j, "r");
  int k = need_int(j, "k");
  if (r < 1 || r > 30) throw ValidationError("r must be in [1,30], got " + std::to_string(r));
  if (k < 1 || k > r)
    throw ValidationError("k must be in [1,r]; got k=" + std::to_string(k) +
                          " with r=" + std::to_string(r));
  const Json& jp = need(j, "parts");
  if (!jp.is_array() || static_cast<int>(jp.size()) != r)
    throw ValidationError("\"parts\" must be an array of r = " + std::to_string(r) + " sizes");
  std::vector<int> parts = jp.get<std::vector<int>>();

  const Json& jcolors = need(j, "colors");
  const Json& jcoloring = need(j, "coloring");
  auto sets = keyed_sets(r, k);
  std::vector<std::vector<std::string>> tables;
  std::vector<std::vector<ColorId>> coloring;
  for (const auto& I : sets) {
    std::string key = I.str();
    auto tc = jcolors.find(key);
    if (tc == jcolors.end())
      throw ValidationError("colors for index set {" + key + "} missing");
    tables.push_back(tc->get<std::vector<std::string>>());

    auto cc = jcoloring.find(key);
    if (cc == jcoloring.end())
      throw ValidationError("coloring for index set {" + key + "} missing");
    std::int64_t cells = 1;
    for (int p : I.members()) cells *= parts[p];
    if (static_cast<std::int64_t>(cc->size()) != cells) {
      // name the first tuple that lacks (or exceeds) an entry
      std::vector<int> members = I.members();
      std::vector<int> tuple(members.size(), 0);
      std::int64_t at = std::min<std::int64_t>(cells, static_cast<std::int64_t>(cc->size()));
      for (std::int64_t off = 0; off < at; ++off)
        for (int pos = static_cast<int>(members.size()) - 1; pos >= 0; --pos) {
          if (++tuple[pos] < parts[members[pos]]) break;
          tuple[pos] = 0;
        }
      throw ValidationError("coloring for index set {" + key + "} has " +
                            std::to_string(cc->size()) + " entries, want " +
                            std::to_string(cells) + "; first mismatch at tuple " +
                            tuple_str(tuple));
    }
    coloring.push_back(cc->get<std::vector<ColorId>>());
  }
  return Hypergraph::raw(r, k, std::move(parts), std::move(tables), std::move(coloring));
}

void save_hypergraph(const Hypergraph& G, const std::string& path) {
  write_text(path, hypergraph_json(G).dump(2) + "\n");
}

Hypergraph load_hypergraph(const std::string& path) {
  try {
    return hypergraph_from_json(load_json(path));
  } catch (const ValidationError& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

Json complex_json(const SimplicialComplex& S) {
  Json j;
  j["r"] = S.r();
  j["s"] = S.s();
  j["h"] = S.h();
  Json local = Json::object(), binding = Json::object();
  for (std::size_t ord = 0; ord < S.index_sets().size(); ++ord) {
    std::string key = S.index_sets()[ord].str();
    std::vector<int> cells(S.edge_count(static_cast<int>(ord)));
    for (std::int64_t off = 0; off < static_cast<std::int64_t>(cells.size()); ++off)
      cells[off] = S.local_at(static_cast<int>(ord), off);
    local[key] = std::move(cells);
    binding[key] = S.binding(static_cast<int>(ord));
  }
  j["local"] = std::move(local);
  j["binding"] = std::move(binding);
  return j;
}

SimplicialComplex complex_from_json(const Json& j) {
  int r = need_int(j, "r");
  int s = need_int(j, "s");
  int h = need_int(j, "h");
  if (r < 1 || s < 1 || s > r || h < 1)
    throw ValidationError("complex needs 1 <= s <= r and h >= 1");
  SimplicialComplex S(r, s, h);
  const Json& jl = need(j, "local");
  const Json& jb = need(j, "binding");
  for (std::size_t ord = 0; ord < S.index_sets().size(); ++ord) {
    std::string key = S.index_sets()[ord].str();
    auto lc = jl.find(key);
    if (lc == jl.end()) throw ValidationError("local colors for index set {" + key + "} missing");
    auto cells = lc->get<std::vector<int>>();
    if (static_cast<std::int64_t>(cells.size()) != S.edge_count(static_cast<int>(ord)))
      throw ValidationError("local colors for index set {" + key + "} have " +
                            std::to_string(cells.size()) + " entries, want " +
                            std::to_string(S.edge_count(static_cast<int>(ord))));
    for (std::int64_t off = 0; off < static_cast<std::int64_t>(cells.size()); ++off)
      S.set_local(static_cast<int>(ord), off, cells[off]);
    auto bc = jb.find(key);
    if (bc == jb.end()) throw ValidationError("binding for index set {" + key + "} missing");
    S.set_binding(static_cast<int>(ord), bc->get<std::vector<ColorId>>());
  }
  return S;
}

Json pattern_json(const UniformPattern& F) {
  Json j;
  j["r"] = F.r;
  j["k"] = F.k;
  j["h"] = F.h;
  Json top = Json::object();
  auto sets = F.top_sets();
  for (std::size_t i = 0; i < sets.size(); ++i) top[sets[i].str()] = F.top[i];
  j["top"] = std::move(top);
  return j;
}

UniformPattern pattern_from_json(const Json& j) {
  UniformPattern F;
  F.r = need_int(j, "r");
  F.k = need_int(j, "k");
  F.h = need_int(j, "h");
  if (F.r < 1 || F.k < 1 || F.k > F.r || F.h < 1)
    throw ValidationError("pattern needs 1 <= k <= r and h >= 1");
  const Json& jt = need(j, "top");
  auto sets = F.top_sets();
  for (const auto& I : sets) {
    std::string key = I.str();
    auto tc = jt.find(key);
    if (tc == jt.end()) throw ValidationError("top colors for index set {" + key + "} missing");
    auto cells = tc->get<std::vector<ColorId>>();
    if (static_cast<std::int64_t>(cells.size()) != F.cell_count())
      throw ValidationError("top colors for index set {" + key + "} have " +
                            std::to_string(cells.size()) + " entries, want " +
                            std::to_string(F.cell_count()));
    F.top.push_back(std::move(cells));
  }
  return F;
}

void save_pattern(const UniformPattern& F, const std::string& path) {
  write_text(path, pattern_json(F).dump(2) + "\n");
}

UniformPattern load_pattern(const std::string& path) {
  try {
    return pattern_from_json(load_json(path));
  } catch (const ValidationError& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

Json grid_set_json(const GridSet& S) {
  Json j;
  j["N"] = S.N;
  j["r"] = S.r;
  j["points"] = Json::array();
  for (const auto& p : S.points) j["points"].push_back(p);
  return j;
}

GridSet grid_set_from_json(const Json& j) {
  int N = need_int(j, "N");
  int r = need_int(j, "r");
  const Json& jp = need(j, "points");
  if (!jp.is_array()) throw ValidationError("\"points\" must be an array");
  return GridSet::from_points(N, r, jp.get<std::vector<std::vector<int>>>());
}

Json simplex_set_json(const SimplexSet& S) {
  Json j;
  j["N"] = S.N;
  j["k"] = S.k;
  j["points"] = Json::array();
  for (const auto& p : S.points) j["points"].push_back(p);
  return j;
}

SimplexSet simplex_set_from_json(const Json& j) {
  int N = need_int(j, "N");
  int k = need_int(j, "k");
  const Json& jp = need(j, "points");
  if (!jp.is_array()) throw ValidationError("\"points\" must be an array");
  return SimplexSet::from_points(N, k, jp.get<std::vector<std::vector<int>>>());
}

std::vector<std::vector<int>> parse_point_lines(const std::string& text) {
  std::vector<std::vector<int>> pts;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string cleaned;
    for (char c : line) {
      if (c == '#') break;
      cleaned += (c == ',' ? ' ' : c);
    }
    std::istringstream ls(cleaned);
    std::vector<int> p;
    long long v;
    while (ls >> v) p.push_back(static_cast<int>(v));
    if (!ls.eof())
      throw ValidationError("line " + std::to_string(lineno) + ": not an integer tuple");
    if (!p.empty()) pts.push_back(std::move(p));
  }
  return pts;
}

GridSet load_grid_set(const std::string& path, int N, int r) {
  std::string text = read_text(path);
  std::size_t i = text.find_first_not_of(" \t\r\n");
  if (i != std::string::npos && (text[i] == '{' || text[i] == '[')) {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw ValidationError(path + ": " + e.what());
    }
    try {
      if (j.is_object()) return grid_set_from_json(j);
      return GridSet::from_points(N, r, j.get<std::vector<std::vector<int>>>());
    } catch (const ValidationError& e) {
      throw ValidationError(path + ": " + e.what());
    }
  }
  try {
    return GridSet::from_points(N, r, parse_point_lines(text));
  } catch (const ValidationError& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

std::string rational_str(const Rational& q) { return format_rational(q); }

std::string csv_escape(const std::string& field) {
  bool quote = field.find_first_of(",\"\n\r") != std::string::npos;
  if (!quote) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string csv_table(const std::vector<std::string>& header,
                      const std::vector<std::vector<std::string>>& rows) {
  std::string out;
  auto emit = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += csv_escape(cells[i]);
    }
    out += '\n';
  };
  emit(header);
  for (const auto& row : rows) emit(row);
  return out;
}

void emit_report(const Json& report, const std::string& format, const std::string& path) {
  if (format == "json") {
    write_text(path, report.dump(2) + "\n");
    return;
  }
  if (format == "csv") {
    auto header = need(report, "header").get<std::vector<std::string>>();
    std::vector<std::vector<std::string>> rows;
    for (const auto& row : need(report, "rows")) {
      std::vector<std::string> cells;
      for (const auto& cell : row)
        cells.push_back(cell.is_string() ? cell.get<std::string>() : cell.dump());
      rows.push_back(std::move(cells));
    }
    write_text(path, csv_table(header, rows));
    return;
  }
  throw ValidationError("unknown report format \"" + format + "\" (want json or csv)");
}

std::string digest_hex(const std::string& bytes) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a64(bytes)));
  return buf;
}

Json RunManifest::to_json() const {
  Json j;
  j["tool"] = tool;
  j["version"] = version;
  j["command"] = command;
  j["seed"] = seed;
  j["inputs"] = input_digests;
  return j;
}

void write_manifest(const RunManifest& m, const Json& params, const std::string& path) {
  Json j = m.to_json();
  j["params"] = params;
  write_text(path, j.dump(2) + "\n");
}

}  // namespace hreg
