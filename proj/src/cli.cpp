#include "cuhyper/cli.hpp"

#include <charconv>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cuhyper/analysis.hpp"
#include "cuhyper/error.hpp"
#include "cuhyper/io.hpp"

namespace cuh {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitCheckFailed = 2;

OperatorKind operator_from_name(const std::string& name) {
  for (OperatorKind k : {OperatorKind::A, OperatorKind::K, OperatorKind::Kstar, OperatorKind::L,
                         OperatorKind::Lstar, OperatorKind::SymL}) {
    if (name == to_string(k)) return k;
  }
  throw Error(ErrorCode::BadParameter, "unknown operator " + name, "--operator");
}

std::size_t parse_count(std::string_view text, const std::string& what) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw Error(ErrorCode::BadParameter, "bad " + what + " \"" + std::string(text) + "\"");
  }
  return value;
}

// "v0,v2" or "0,2"; the prefix letter is optional.
std::set<std::size_t> parse_index_list(const std::string& text, char prefix) {
  std::set<std::size_t> out;
  std::size_t start = 0;
  while (start <= text.size() && !text.empty()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    std::string_view item(text.data() + start, comma - start);
    if (!item.empty() && item.front() == prefix) item.remove_prefix(1);
    out.insert(parse_count(item, "index"));
    start = comma + 1;
  }
  return out;
}

std::pair<PhaseMode, std::size_t> parse_phases(const std::string& text) {
  if (text == "continuous") return {PhaseMode::Continuous, 2};
  if (text.rfind("roots:", 0) == 0) {
    const std::size_t k = parse_count(std::string_view(text).substr(6), "root order");
    return {PhaseMode::RootsOfUnity, k};
  }
  throw Error(ErrorCode::BadParameter, "expected continuous or roots:K, got \"" + text + "\"", "--phases");
}

Hypergraph load(const std::string& path) { return parse_hypergraph(read_text_file(path)); }

void print_spectrum(std::ostream& out, const Spectrum& s) {
  const double scale = s.values.empty() ? 0.0 : s.max_abs();
  for (std::size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << format_human(s.values[i], scale);
  out << "\n";
  if (!s.vectors) return;
  for (const ComplexVector& x : *s.vectors) {
    for (std::size_t j = 0; j < x.size(); ++j) {
      out << (j ? " " : "") << format_human(x[j].real()) << "," << format_human(x[j].imag());
    }
    out << "\n";
  }
}

void print_suite(std::ostream& out, const SuiteResult& suite) {
  for (const CheckReport& r : suite.reports) {
    if (r.passed()) {
      out << "PASS " << r.check_name << "\n";
    } else if (r.skipped()) {
      out << "SKIP " << r.check_name << " (" << r.skip_reason << ")\n";
    } else {
      out << "FAIL " << r.check_name;
      for (std::size_t i = 0; i < r.failures.size(); ++i) out << (i ? "; " : ": ") << r.failures[i];
      out << "\n";
    }
  }
  out << "checks: " << suite.passed << " passed, " << suite.failed << " failed, " << suite.skipped
      << " skipped\n";
}

void print_bounds(std::ostream& out, const BoundReport& b) {
  const auto line = [&](const char* key, double value) { out << key << " " << format_human(value) << "\n"; };
  const auto flag = [&](const char* key, bool value) { out << key << " " << (value ? "yes" : "no") << "\n"; };
  line("delta", static_cast<double>(b.delta));
  line("nabla", static_cast<double>(b.nabla));
  line("rho_A", b.rho_A);
  line("gershgorin_A", b.gershgorin_A);
  line("bound_rho", b.bound_rho);
  line("lambda_max_K", b.lambda_max_K);
  line("lambda_max_K_underlying", b.lambda_max_K_underlying);
  line("bound_K", b.bound_K);
  line("bound_max", b.bound_max);
  if (b.lambda_max_L) {
    line("lambda_max_L", *b.lambda_max_L);
    line("lambda_max_L_underlying", *b.lambda_max_L_underlying);
    line("bound_L", b.bound_L);
  } else {
    out << "lambda_max_L undefined (zero-degree vertex)\n";
  }
  if (b.alpha) line("alpha", static_cast<double>(*b.alpha));
  flag("rho_ok", b.rho_ok);
  flag("gershgorin_ok", b.gershgorin_ok);
  flag("k_chain_ok", b.k_chain_ok);
  flag("l_chain_ok", b.l_chain_ok);
  flag("max_ok", b.max_ok);
  flag("k_equality", b.k_equality.holds);
  flag("k_equality_without_regular_uniform", b.k_equality.without_hypothesis);
  if (b.l_equality) {
    flag("l_equality", b.l_equality->holds);
    flag("l_equality_without_uniform", b.l_equality->without_hypothesis);
  }
  out << "bounds: " << (b.all_ok() ? "ok" : "violated") << "\n";
}

Hypergraph transform(const Hypergraph& g, const std::vector<std::string>& op) {
  const std::string& name = op.front();
  const bool has_arg = op.size() == 2;
  const auto need_arg = [&](bool expected) {
    if (has_arg != expected) {
      throw Error(ErrorCode::BadParameter,
                  name + (expected ? " needs an argument" : " takes no argument"), "--op");
    }
  };
  if (name == "dual") {
    need_arg(false);
    return dual(g);
  }
  if (name == "underlying") {
    need_arg(false);
    return underlying(g);
  }
  if (name == "delete-vertices") {
    need_arg(true);
    return weak_delete_vertices(g, parse_index_list(op[1], 'v')).graph;
  }
  if (name == "delete-edges") {
    need_arg(true);
    return weak_delete_edges(g, parse_index_list(op[1], 'e'));
  }
  if (name == "vswitch" || name == "eswitch") {
    need_arg(true);
    const auto kind = name == "vswitch" ? SwitchingFunction::Kind::Vertex : SwitchingFunction::Kind::Edge;
    return apply_switching(g, parse_switching(read_text_file(op[1]), kind));
  }
  throw Error(ErrorCode::BadParameter, "unknown transform " + name, "--op");
}

}  // namespace

int suite_exit_code(const SuiteResult& suite) { return suite.failed == 0 ? kExitOk : kExitCheckFailed; }

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectra and identity checks for complex unit hypergraphs", "cuhyper"};
  app.require_subcommand(1);

  std::string file, output, operator_name, phases = "continuous";
  bool want_vectors = false, want_json = false;
  std::uint64_t seed = 0;
  std::vector<std::string> op;
  std::size_t gen_n = 1, gen_m = 1;
  double gen_p = 0.5;

  auto* spectrum = app.add_subcommand("spectrum", "Print the ascending spectrum of an operator");
  spectrum->add_option("file", file, "HypergraphDocument")->required();
  spectrum->add_option("--operator", operator_name, "A, K, Kstar, L, Lstar or calL")
      ->required()
      ->check(CLI::IsMember({"A", "K", "Kstar", "L", "Lstar", "calL"}));
  spectrum->add_flag("--vectors", want_vectors, "Also print eigenvectors");
  spectrum->add_flag("--json", want_json, "JSON output");

  auto* check = app.add_subcommand("check", "Run every identity and bound check");
  check->add_option("file", file, "HypergraphDocument")->required();
  check->add_option("--seed", seed, "Seed for sampled vectors, deletions and switchings");
  check->add_flag("--json", want_json, "JSON output");

  auto* bounds = app.add_subcommand("bounds", "Extremal eigenvalue bounds");
  bounds->add_option("file", file, "HypergraphDocument")->required();
  bounds->add_flag("--json", want_json, "JSON output");

  auto* trans = app.add_subcommand("transform", "Apply a transformation and write the result");
  trans->add_option("file", file, "HypergraphDocument")->required();
  trans->add_option("--op", op,
                    "dual | underlying | delete-vertices v0,v1 | delete-edges e0 | vswitch FILE | eswitch FILE")
      ->required()
      ->expected(1, 2);
  trans->add_option("-o,--output", output, "Output file")->required();

  auto* gen = app.add_subcommand("gen", "Generate a random hypergraph");
  gen->add_option("--n", gen_n, "Vertices")->required();
  gen->add_option("--m", gen_m, "Edges")->required();
  gen->add_option("--p", gen_p, "Incidence probability in (0,1]")->required();
  gen->add_option("--phases", phases, "continuous or roots:K");
  gen->add_option("--seed", seed, "Generator seed");
  gen->add_option("-o,--output", output, "Output file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*spectrum) {
      const Hypergraph g = load(file);
      const OperatorKind kind = operator_from_name(operator_name);
      const Spectrum s = operator_spectrum(kind, g, want_vectors);
      if (want_json) out << spectrum_json(kind, s);
      else print_spectrum(out, s);
      return kExitOk;
    }
    if (*check) {
      SuiteOptions options;
      options.seed = seed;
      const SuiteResult suite = run_full_suite(load(file), options);
      if (want_json) out << suite_json(suite);
      else print_suite(out, suite);
      return suite_exit_code(suite);
    }
    if (*bounds) {
      const BoundReport b = bound_report(load(file));
      if (want_json) out << bounds_json(b);
      else print_bounds(out, b);
      return b.all_ok() ? kExitOk : kExitCheckFailed;
    }
    if (*trans) {
      write_text_file(output, serialize_hypergraph(transform(load(file), op)) + "\n");
      return kExitOk;
    }
    if (*gen) {
      RandomOptions options;
      options.n = gen_n;
      options.m = gen_m;
      options.p = gen_p;
      std::tie(options.mode, options.k) = parse_phases(phases);
      options.seed = seed;
      const GeneratedHypergraph result = gen_random(options);
      if (result.empty_edge_warning) {
        err << "warning: an edge stayed empty after " << kEmptyEdgeResamples << " resamples\n";
      }
      write_text_file(output, serialize_hypergraph(result.graph) + "\n");
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace cuh
