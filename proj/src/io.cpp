#include "cuhyper/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cuhyper/error.hpp"

namespace cuh {

namespace {

using nlohmann::json;

std::string position_of(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const std::string where = position_of(text, e.byte);
    throw Error(ErrorCode::SyntaxError, "malformed JSON", where);
  }
}

[[noreturn]] void schema_error(const std::string& message, const std::string& path) {
  throw Error(ErrorCode::SchemaError, message, path);
}

const json& require_field(const json& object, const char* key, const std::string& path) {
  const auto it = object.find(key);
  if (it == object.end()) schema_error(std::string("missing field \"") + key + "\"", path);
  return *it;
}

void reject_unknown(const json& object, std::initializer_list<const char*> allowed, const std::string& path) {
  for (const auto& [key, value] : object.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || key == a;
    if (!known) schema_error("unknown field \"" + key + "\"", path.empty() ? key : path + "." + key);
  }
}

std::size_t read_index(const json& value, const std::string& path) {
  if (!value.is_number_integer()) schema_error("expected a nonnegative integer", path);
  if (value.is_number_unsigned()) return value.get<std::size_t>();
  const auto signed_value = value.get<std::int64_t>();
  if (signed_value < 0) schema_error("expected a nonnegative integer", path);
  return static_cast<std::size_t>(signed_value);
}

std::pair<double, double> read_pair(const json& value, const std::string& path) {
  if (!value.is_array() || value.size() != 2 || !value[0].is_number() || !value[1].is_number()) {
    schema_error("expected [re, im]", path);
  }
  return {value[0].get<double>(), value[1].get<double>()};
}

void check_version(const json& doc) {
  if (!doc.is_object()) schema_error("document must be an object", "");
  const json& version = require_field(doc, "schema_version", "");
  if (!version.is_number_integer() || version.get<std::int64_t>() != kSchemaVersion) {
    schema_error("unsupported version", "schema_version");
  }
}

void append_number(std::string& out, double x) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.17g", x == 0.0 ? 0.0 : x);
  out += buffer;
}

void append_pair(std::string& out, const Phase& z) {
  out += '[';
  append_number(out, z.re());
  out += ',';
  append_number(out, z.im());
  out += ']';
}

json complex_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

json optional_json(const std::optional<double>& x) { return x ? json(*x) : json(nullptr); }

json equality_json(const EqualityAnalysis& eq) {
  return {{"component_predicted", eq.component_predicted},
          {"consistent", eq.consistent()},
          {"holds", eq.holds},
          {"hypothesis", eq.hypothesis},
          {"without_hypothesis", eq.without_hypothesis}};
}

json report_object(const CheckReport& r) {
  json measured = json::object();
  for (const Measurement& m : r.measured) measured[m.label] = m.value;
  return {{"check_name", r.check_name},
          {"detail", r.detail},
          {"failures", r.failures},
          {"inputs_digest", r.inputs_digest},
          {"measured", measured},
          {"skip_reason", r.skip_reason},
          {"tolerance", r.tolerance},
          {"verdict", to_string(r.verdict)}};
}

}  // namespace

Hypergraph parse_hypergraph(std::string_view text) {
  const json doc = parse_json(text);
  check_version(doc);
  reject_unknown(doc, {"schema_version", "n", "edges"}, "");
  const std::size_t n = read_index(require_field(doc, "n", ""), "n");
  if (n > kMaxDocumentVertices) {
    throw Error(ErrorCode::TooLarge, "n exceeds " + std::to_string(kMaxDocumentVertices), "n");
  }
  const json& edges = require_field(doc, "edges", "");
  if (!edges.is_array()) schema_error("expected a list of edges", "edges");

  std::vector<std::vector<RawIncidence>> raw(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string edge_path = "edges[" + std::to_string(i) + "]";
    if (!edges[i].is_array()) schema_error("expected a list of incidences", edge_path);
    for (std::size_t j = 0; j < edges[i].size(); ++j) {
      const std::string path = edge_path + "[" + std::to_string(j) + "]";
      const json& record = edges[i][j];
      if (!record.is_object()) schema_error("expected an incidence record", path);
      reject_unknown(record, {"v", "omega"}, path);
      const std::size_t v = read_index(require_field(record, "v", path), path + ".v");
      const auto [re, im] = read_pair(require_field(record, "omega", path), path + ".omega");
      raw[i].push_back({v, re, im});
    }
  }
  return Hypergraph::build(n, raw);
}

std::string serialize_hypergraph(const Hypergraph& g) {
  std::string out = "{\"schema_version\":1,\"n\":" + std::to_string(g.num_vertices()) + ",\"edges\":[";
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    if (e > 0) out += ',';
    out += '[';
    bool first = true;
    for (const auto& [v, phase] : g.edge(e)) {
      if (!first) out += ',';
      first = false;
      out += "{\"v\":" + std::to_string(v) + ",\"omega\":";
      append_pair(out, phase);
      out += '}';
    }
    out += ']';
  }
  return out + "]}";
}

SwitchingFunction parse_switching(std::string_view text, SwitchingFunction::Kind expected) {
  const json doc = parse_json(text);
  check_version(doc);
  reject_unknown(doc, {"schema_version", "kind", "values"}, "");
  if (const auto it = doc.find("kind"); it != doc.end()) {
    const char* want = expected == SwitchingFunction::Kind::Vertex ? "vertex" : "edge";
    if (!it->is_string() || it->get<std::string>() != want) {
      schema_error(std::string("expected kind \"") + want + "\"", "kind");
    }
  }
  const json& values = require_field(doc, "values", "");
  if (!values.is_array()) schema_error("expected a list of phases", "values");
  SwitchingFunction f{expected, {}};
  for (std::size_t i = 0; i < values.size(); ++i) {
    const std::string path = "values[" + std::to_string(i) + "]";
    const auto [re, im] = read_pair(values[i], path);
    try {
      f.values.emplace_back(re, im);
    } catch (const Error& e) {
      throw Error(e.code(), e.what(), path);
    }
  }
  return f;
}

std::string serialize_switching(const SwitchingFunction& f) {
  std::string out = "{\"schema_version\":1,\"kind\":\"";
  out += f.kind == SwitchingFunction::Kind::Vertex ? "vertex" : "edge";
  out += "\",\"values\":[";
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    if (i > 0) out += ',';
    append_pair(out, f.values[i]);
  }
  return out + "]}";
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open for reading", path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::IoError, "read failed", path.string());
  return buffer.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoError, "cannot open for writing", path.string());
  out << text;
  out.flush();
  if (!out) throw Error(ErrorCode::IoError, "write failed", path.string());
}

std::string spectrum_json(OperatorKind kind, const Spectrum& s) {
  json doc = {{"schema_version", kSchemaVersion},
              {"operator", to_string(kind)},
              {"eigenvalues", s.values},
              {"max_residual", s.max_residual}};
  if (s.vectors) {
    json vectors = json::array();
    for (const ComplexVector& x : *s.vectors) {
      json column = json::array();
      for (const Complex& z : x) column.push_back(complex_json(z));
      vectors.push_back(column);
    }
    doc["eigenvectors"] = vectors;
  }
  return doc.dump(2) + "\n";
}

std::string report_json(const CheckReport& r) {
  json doc = report_object(r);
  doc["schema_version"] = kSchemaVersion;
  return doc.dump(2) + "\n";
}

std::string suite_json(const SuiteResult& suite) {
  json reports = json::array();
  for (const CheckReport& r : suite.reports) reports.push_back(report_object(r));
  const json doc = {{"schema_version", kSchemaVersion},
                    {"reports", reports},
                    {"summary", {{"passed", suite.passed}, {"failed", suite.failed}, {"skipped", suite.skipped}}}};
  return doc.dump(2) + "\n";
}

std::string bounds_json(const BoundReport& b) {
  json doc = {{"schema_version", kSchemaVersion},
              {"delta", b.delta},
              {"nabla", b.nabla},
              {"rho_A", b.rho_A},
              {"gershgorin_A", b.gershgorin_A},
              {"lambda_max_K", b.lambda_max_K},
              {"lambda_max_K_underlying", b.lambda_max_K_underlying},
              {"lambda_max_L", optional_json(b.lambda_max_L)},
              {"lambda_max_L_underlying", optional_json(b.lambda_max_L_underlying)},
              {"bound_rho", b.bound_rho},
              {"bound_K", b.bound_K},
              {"bound_L", b.bound_L},
              {"bound_max", b.bound_max},
              {"alpha", b.alpha ? json(*b.alpha) : json(nullptr)},
              {"rho_ok", b.rho_ok},
              {"k_chain_ok", b.k_chain_ok},
              {"l_chain_ok", b.l_chain_ok},
              {"max_ok", b.max_ok},
              {"gershgorin_ok", b.gershgorin_ok},
              {"k_equality", equality_json(b.k_equality)},
              {"l_equality", b.l_equality ? equality_json(*b.l_equality) : json(nullptr)},
              {"all_ok", b.all_ok()}};
  return doc.dump(2) + "\n";
}

std::string format_human(double x, double scale) {
  if (!(std::abs(x) > 1e-12 * (1.0 + std::abs(scale)))) x = 0.0;
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.12g", x);
  return buffer;
}

}  // namespace cuh
