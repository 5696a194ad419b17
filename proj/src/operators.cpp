#include "cuhyper/operators.hpp"

#include <cmath>
#include <string>

#include "cuhyper/error.hpp"

namespace cuh {

namespace {

std::vector<double> degrees_as_double(const Hypergraph& g) {
  const DegreeProfile profile = degree_profile(g);
  return {profile.degrees.begin(), profile.degrees.end()};
}

std::vector<double> require_positive_degrees(const Hypergraph& g) {
  if (const auto zeros = zero_degree_vertices(g); !zeros.empty()) {
    std::string list;
    for (std::size_t v : zeros) list += (list.empty() ? "" : ",") + std::to_string(v);
    throw Error(ErrorCode::ZeroDegreeVertex, "vertices of degree 0: " + list, {}, zeros);
  }
  return degrees_as_double(g);
}

}  // namespace

const char* to_string(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::A: return "A";
    case OperatorKind::K: return "K";
    case OperatorKind::Kstar: return "Kstar";
    case OperatorKind::L: return "L";
    case OperatorKind::Lstar: return "Lstar";
    case OperatorKind::SymL: return "calL";
  }
  return "?";
}

std::vector<std::size_t> zero_degree_vertices(const Hypergraph& g) {
  const DegreeProfile profile = degree_profile(g);
  std::vector<std::size_t> zeros;
  for (std::size_t v = 0; v < profile.degrees.size(); ++v)
    if (profile.degrees[v] == 0) zeros.push_back(v);
  return zeros;
}

bool has_zero_degree(const Hypergraph& g) { return !zero_degree_vertices(g).empty(); }

ComplexMatrix degree_matrix(const Hypergraph& g) {
  const std::vector<double> d = degrees_as_double(g);
  return ComplexMatrix::diagonal(d);
}

ComplexMatrix incidence_matrix(const Hypergraph& g) {
  ComplexMatrix b(g.num_vertices(), g.num_edges());
  for (std::size_t e = 0; e < g.num_edges(); ++e)
    for (const auto& [v, phase] : g.edge(e)) b(v, e) = phase.value();
  return b;
}

ComplexMatrix adjacency_matrix(const Hypergraph& g) {
  ComplexMatrix a(g.num_vertices(), g.num_vertices());
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    const Edge& edge = g.edge(e);
    for (const auto& [i, wi] : edge)
      for (const auto& [j, wj] : edge)
        if (i != j) a(i, j) += adjacency_gain(g, e, i, j).value();
  }
  return a.mark_hermitian();
}

ComplexMatrix kirchhoff(const Hypergraph& g) {
  ComplexMatrix k = degree_matrix(g) - adjacency_matrix(g);
  return k.mark_hermitian();
}

ComplexMatrix dual_kirchhoff(const Hypergraph& g) {
  const ComplexMatrix b = incidence_matrix(g);
  ComplexMatrix ks = b.adjoint() * b;
  return ks.mark_hermitian();
}

ComplexMatrix normalized(const Hypergraph& g) {
  const std::vector<double> d = require_positive_degrees(g);
  const ComplexMatrix a = adjacency_matrix(g);
  ComplexMatrix l(g.num_vertices(), g.num_vertices());
  for (std::size_t i = 0; i < l.rows(); ++i)
    for (std::size_t j = 0; j < l.cols(); ++j)
      l(i, j) = (i == j ? 1.0 : 0.0) - a(i, j) / d[i];
  return l;
}

ComplexMatrix sym_normalized(const Hypergraph& g) {
  const std::vector<double> d = require_positive_degrees(g);
  const ComplexMatrix a = adjacency_matrix(g);
  std::vector<double> root(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) root[i] = std::sqrt(d[i]);
  ComplexMatrix l(g.num_vertices(), g.num_vertices());
  for (std::size_t i = 0; i < l.rows(); ++i)
    for (std::size_t j = 0; j < l.cols(); ++j)
      l(i, j) = (i == j ? 1.0 : 0.0) - a(i, j) / (root[i] * root[j]);
  return l.mark_hermitian();
}

ComplexMatrix dual_normalized(const Hypergraph& g) {
  const std::vector<double> d = require_positive_degrees(g);
  const ComplexMatrix b = incidence_matrix(g);
  const std::size_t m = g.num_edges();
  ComplexMatrix ls(m, m);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t k = 0; k < m; ++k) {
      Complex acc{};
      for (std::size_t i = 0; i < g.num_vertices(); ++i)
        acc += std::conj(b(i, j)) * b(i, k) / d[i];
      ls(j, k) = acc;
    }
  return ls.mark_hermitian();
}

ComplexMatrix build_operator(OperatorKind kind, const Hypergraph& g) {
  switch (kind) {
    case OperatorKind::A: return adjacency_matrix(g);
    case OperatorKind::K: return kirchhoff(g);
    case OperatorKind::Kstar: return dual_kirchhoff(g);
    case OperatorKind::L: return normalized(g);
    case OperatorKind::Lstar: return dual_normalized(g);
    case OperatorKind::SymL: return sym_normalized(g);
  }
  throw Error(ErrorCode::BadParameter, "unknown operator");
}

ComplexMatrix switching_diagonal(const SwitchingFunction& f) {
  ComplexMatrix d(f.values.size(), f.values.size());
  for (std::size_t i = 0; i < f.values.size(); ++i) d(i, i) = f.values[i].value();
  return d;
}

}  // namespace cuh
