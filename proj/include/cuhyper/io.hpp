#pragma once

// HypergraphDocument reading and writing, plus JSON renderings of spectra and
// check reports for the command-line tool.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "cuhyper/analysis.hpp"
#include "cuhyper/eigen.hpp"
#include "cuhyper/hypergraph.hpp"

namespace cuh {

inline constexpr int kSchemaVersion = 1;
inline constexpr std::size_t kMaxDocumentVertices = 1'000'000;

/// Throws SyntaxError ("line L, column C"), SchemaError (field path as
/// location) or the validation errors of Hypergraph::build.
Hypergraph parse_hypergraph(std::string_view text);

/// Canonical compact form: edges in stored order, incidences by vertex,
/// phases with 17 significant digits.
std::string serialize_hypergraph(const Hypergraph& g);

/// `{"schema_version":1,"kind":"vertex"|"edge","values":[[re,im],...]}`.
/// The kind field is optional; when present it must equal `expected`.
SwitchingFunction parse_switching(std::string_view text, SwitchingFunction::Kind expected);
std::string serialize_switching(const SwitchingFunction& f);

/// Throws IoError.
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

// Reports. All objects have sorted keys and carry schema_version.
std::string spectrum_json(OperatorKind kind, const Spectrum& s);
std::string report_json(const CheckReport& r);
std::string suite_json(const SuiteResult& suite);
std::string bounds_json(const BoundReport& b);

/// %.12g, with values at or below 1e-12·(1 + scale) printed as 0.
std::string format_human(double x, double scale = 0.0);

}  // namespace cuh
