#include "graphfair/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>

namespace graphfair {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void fail(ParseErrorCode code, const std::string& message) {
  throw ParseError(code, message);
}

json parse_document(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) fail(ParseErrorCode::MalformedDocument, "invalid JSON");
  return doc;
}

// Values are JSON integers, or strings "p/q" in lowest terms with q >= 2.
// Anything else (floats, integer-valued strings, unreduced fractions) is
// rejected so that serialization stays canonical.
Rational read_value(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    if (s.find('/') == std::string::npos)
      fail(ParseErrorCode::NonCanonicalRational, where + ": integer values must be JSON numbers");
    auto r = Rational::parse(s);
    if (!r) fail(ParseErrorCode::MalformedDocument, where + ": unreadable rational '" + s + "'");
    if (r->str() != s)
      fail(ParseErrorCode::NonCanonicalRational, where + ": '" + s + "' is not in lowest terms");
    return *r;
  }
  fail(ParseErrorCode::MalformedDocument, where + ": values must be integers or 'p/q' strings");
}

Rational read_nonnegative(const json& v, const std::string& where) {
  Rational r = read_value(v, where);
  if (r.is_negative()) fail(ParseErrorCode::NegativeValue, where + ": negative value " + r.str());
  return r;
}

json value_to_json(const Rational& r) {
  if (r.is_integer()) return json(r.num());
  return json(r.str());
}

Graph read_graph(const json& doc) {
  if (!doc.is_object() || !doc.contains("m") || !doc.contains("edges"))
    fail(ParseErrorCode::MalformedDocument, "graph needs 'm' and 'edges'");
  if (!doc["m"].is_number_integer())
    fail(ParseErrorCode::MalformedDocument, "graph 'm' must be an integer");
  const std::int64_t m = doc["m"].get<std::int64_t>();
  if (m < 1 || m > 1000000) fail(ParseErrorCode::MalformedDocument, "graph 'm' out of range");
  if (!doc["edges"].is_array()) fail(ParseErrorCode::MalformedDocument, "graph 'edges' must be an array");

  std::vector<std::pair<int, int>> edges;
  std::set<std::pair<int, int>> seen;
  for (const json& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      fail(ParseErrorCode::MalformedDocument, "each edge must be a pair of integers");
    const std::int64_t a = e[0].get<std::int64_t>();
    const std::int64_t b = e[1].get<std::int64_t>();
    if (a == b) fail(ParseErrorCode::LoopEdge, "edge [" + std::to_string(a) + "," + std::to_string(b) + "]");
    if (a < 0 || b < 0 || a >= m || b >= m)
      fail(ParseErrorCode::IndexOutOfRange,
           "edge [" + std::to_string(a) + "," + std::to_string(b) + "] outside 0.." + std::to_string(m - 1));
    if (a > b)
      fail(ParseErrorCode::MalformedDocument,
           "edge [" + std::to_string(a) + "," + std::to_string(b) + "] must be ordered i < j");
    if (!seen.insert({static_cast<int>(a), static_cast<int>(b)}).second)
      fail(ParseErrorCode::DuplicateEdge, "edge [" + std::to_string(a) + "," + std::to_string(b) + "]");
    edges.push_back({static_cast<int>(a), static_cast<int>(b)});
  }
  return Graph(static_cast<int>(m), std::move(edges));
}

}  // namespace

const char* parse_error_code_name(ParseErrorCode code) {
  switch (code) {
    case ParseErrorCode::MalformedDocument: return "malformed-document";
    case ParseErrorCode::DimensionMismatch: return "dimension-mismatch";
    case ParseErrorCode::NegativeValue: return "negative-value";
    case ParseErrorCode::NonCanonicalRational: return "non-canonical-rational";
    case ParseErrorCode::LoopEdge: return "loop-edge";
    case ParseErrorCode::DuplicateEdge: return "duplicate-edge";
    case ParseErrorCode::IndexOutOfRange: return "index-out-of-range";
  }
  return "unknown";
}

Instance parse_instance(const std::string& text) {
  json doc = parse_document(text);
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("graph") || !doc.contains("valuations"))
    fail(ParseErrorCode::MalformedDocument, "instance needs 'n', 'graph' and 'valuations'");
  if (!doc["n"].is_number_integer()) fail(ParseErrorCode::MalformedDocument, "'n' must be an integer");
  const std::int64_t n = doc["n"].get<std::int64_t>();
  if (n < 1 || n > 100000) fail(ParseErrorCode::MalformedDocument, "'n' out of range");

  Instance inst;
  inst.agents = static_cast<int>(n);
  inst.graph = read_graph(doc["graph"]);
  const int m = inst.graph.vertex_count();

  const json& vals = doc["valuations"];
  if (!vals.is_object() || !vals.contains("type") || !vals.contains("values"))
    fail(ParseErrorCode::MalformedDocument, "'valuations' needs 'type' and 'values'");
  const std::string type = vals["type"].is_string() ? vals["type"].get<std::string>() : "";
  if (!vals["values"].is_array())
    fail(ParseErrorCode::MalformedDocument, "'valuations.values' must be an array");
  if (static_cast<std::int64_t>(vals["values"].size()) != n)
    fail(ParseErrorCode::DimensionMismatch, "expected one valuation per agent");

  if (type == "additive") {
    for (std::size_t i = 0; i < vals["values"].size(); ++i) {
      const json& row = vals["values"][i];
      const std::string who = "agent " + std::to_string(i);
      if (!row.is_array()) fail(ParseErrorCode::MalformedDocument, who + ": values must be an array");
      if (static_cast<int>(row.size()) != m)
        fail(ParseErrorCode::DimensionMismatch, who + ": expected " + std::to_string(m) + " values");
      std::vector<Rational> values;
      values.reserve(row.size());
      for (std::size_t g = 0; g < row.size(); ++g)
        values.push_back(read_nonnegative(row[g], who + ", good " + std::to_string(g)));
      inst.valuations.push_back(AdditiveValuation(std::move(values)));
    }
  } else if (type == "table") {
    if (m > 30) fail(ParseErrorCode::MalformedDocument, "tabulated valuations limited to small m");
    const std::size_t size = std::size_t(1) << m;
    for (std::size_t i = 0; i < vals["values"].size(); ++i) {
      const json& table = vals["values"][i];
      const std::string who = "agent " + std::to_string(i);
      if (!table.is_object()) fail(ParseErrorCode::MalformedDocument, who + ": table must be an object");
      if (table.size() != size)
        fail(ParseErrorCode::DimensionMismatch,
             who + ": table must list all " + std::to_string(size) + " bundles");
      std::vector<Rational> entries(size);
      std::vector<char> present(size, 0);
      for (const auto& [key, value] : table.items()) {
        std::size_t pos = 0;
        unsigned long long mask = 0;
        try {
          mask = std::stoull(key, &pos);
        } catch (const std::exception&) {
          fail(ParseErrorCode::MalformedDocument, who + ": table key '" + key + "' is not a bundle mask");
        }
        if (pos != key.size() || mask >= size)
          fail(ParseErrorCode::IndexOutOfRange, who + ": table key '" + key + "' outside the bundle range");
        if (present[mask]) fail(ParseErrorCode::MalformedDocument, who + ": duplicate table key '" + key + "'");
        present[mask] = 1;
        entries[mask] = read_nonnegative(value, who + ", bundle " + key);
      }
      inst.valuations.push_back(TabulatedValuation(m, std::move(entries)));
    }
  } else {
    fail(ParseErrorCode::MalformedDocument, "valuation type must be 'additive' or 'table'");
  }
  return inst;
}

std::string serialize_instance(const Instance& inst) {
  json doc;
  doc["n"] = inst.agents;
  json graph;
  graph["m"] = inst.graph.vertex_count();
  json edges = json::array();
  for (auto [a, b] : inst.graph.edges()) edges.push_back(json::array({a, b}));
  graph["edges"] = std::move(edges);
  doc["graph"] = std::move(graph);

  json vals;
  const bool additive = inst.valuations.empty() || inst.valuations.front().is_additive();
  vals["type"] = additive ? "additive" : "table";
  json rows = json::array();
  for (const Valuation& u : inst.valuations) {
    if (const AdditiveValuation* a = u.additive()) {
      json row = json::array();
      for (const Rational& v : a->values()) row.push_back(value_to_json(v));
      rows.push_back(std::move(row));
    } else {
      const TabulatedValuation* t = u.tabulated();
      json row;
      for (std::size_t mask = 0; mask < t->table().size(); ++mask)
        row[std::to_string(mask)] = value_to_json(t->table()[mask]);
      rows.push_back(std::move(row));
    }
  }
  vals["values"] = std::move(rows);
  doc["valuations"] = std::move(vals);
  return doc.dump(2) + "\n";
}

Allocation parse_allocation(const std::string& text) {
  json doc = parse_document(text);
  if (!doc.is_object() || !doc.contains("bundles") || !doc["bundles"].is_array())
    fail(ParseErrorCode::MalformedDocument, "allocation needs a 'bundles' array");
  Allocation alloc;
  for (const json& b : doc["bundles"]) {
    if (!b.is_array()) fail(ParseErrorCode::MalformedDocument, "each bundle must be an array");
    std::vector<int> bundle;
    for (const json& e : b) {
      if (!e.is_number_integer()) fail(ParseErrorCode::MalformedDocument, "goods must be integers");
      const std::int64_t g = e.get<std::int64_t>();
      if (g < 0) fail(ParseErrorCode::IndexOutOfRange, "good " + std::to_string(g));
      if (!bundle.empty() && g <= bundle.back())
        fail(ParseErrorCode::MalformedDocument, "bundles must be sorted ascending without repeats");
      bundle.push_back(static_cast<int>(g));
    }
    alloc.bundles.push_back(std::move(bundle));
  }
  return alloc;
}

std::string serialize_allocation(const Allocation& alloc) {
  json doc;
  json bundles = json::array();
  for (const auto& b : alloc.bundles) {
    std::vector<int> sorted = b;
    std::sort(sorted.begin(), sorted.end());
    bundles.push_back(json(sorted));
  }
  doc["bundles"] = std::move(bundles);
  return doc.dump(2) + "\n";
}

}  // namespace graphfair
