#include "commsplit/io.hpp"

#include <limits>
#include <ostream>

#include "commsplit/errors.hpp"

namespace commsplit {

Json partition_to_json(const IndexedPartition& lambda) {
  Json parts = Json::object();
  for (unsigned code = 0; code < static_cast<unsigned>(lambda.size()); ++code)
    parts[lambda.sequence(code).to_string()] = lambda.part(code);
  return Json{{"n", lambda.arity()}, {"m", lambda.rank()}, {"parts", parts}};
}

IndexedPartition partition_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("parts"))
    throw DomainError("partition JSON must contain n and parts");
  const int n = j.at("n").get<int>();
  if (n < 1 || n > kMaxArity) throw CapacityError("partition JSON arity out of range");
  std::vector<int> parts(size_t(1) << n, 0);
  const Json& entries = j.at("parts");
  size_t seen = 0;
  for (auto it = entries.begin(); it != entries.end(); ++it) {
    const std::string& key = it.key();
    if (static_cast<int>(key.size()) != n)
      throw DomainError("partition JSON bitstring of wrong length: " + key);
    unsigned code = 0;
    for (char c : key) {
      if (c != '0' && c != '1')
        throw DomainError("partition JSON bitstring must be 0/1: " + key);
      code = (code << 1) | static_cast<unsigned>(c - '0');
    }
    parts[code] = it.value().get<int>();
    ++seen;
  }
  if (seen != parts.size())
    throw DomainError("partition JSON must list all 2^n parts explicitly");
  IndexedPartition lambda(n, std::move(parts));
  if (j.contains("m") && j.at("m").get<int>() != lambda.rank())
    throw DimensionError("partition JSON m does not match the sum of parts");
  return lambda;
}

Json polynomial_to_json(const Polynomial& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coefficients()) {
    if (is_integral(c) && numerator(c) >= std::numeric_limits<int64_t>::min() &&
        numerator(c) <= std::numeric_limits<int64_t>::max()) {
      coeffs.push_back(static_cast<int64_t>(numerator(c)));
    } else {
      // Rational fallback; series emitted by the toolkit are integral.
      coeffs.push_back(c.str());
    }
  }
  return Json{{"text", p.to_string()}, {"coeffs", coeffs}};
}

Json matrix_to_json(const ComplexMatrix& a) {
  Json rows = Json::array();
  for (int i = 0; i < a.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < a.cols(); ++j)
      row.push_back(Json::array({a(i, j).real(), a(i, j).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty())
    throw DomainError("matrix JSON must be a non-empty array of rows");
  const int rows = static_cast<int>(j.size());
  const int cols = static_cast<int>(j.at(0).size());
  ComplexMatrix a(rows, cols);
  for (int i = 0; i < rows; ++i) {
    const Json& row = j.at(i);
    if (static_cast<int>(row.size()) != cols)
      throw DomainError("matrix JSON rows have inconsistent lengths");
    for (int k = 0; k < cols; ++k) {
      const Json& entry = row.at(k);
      if (!entry.is_array() || entry.size() != 2)
        throw DomainError("matrix JSON entries must be [re, im] pairs");
      a(i, k) = std::complex<double>(entry.at(0).get<double>(),
                                     entry.at(1).get<double>());
    }
  }
  return a;
}

Json tuple_to_json(const UnitaryTuple& t) {
  Json matrices = Json::array();
  for (const auto& u : t.matrices) matrices.push_back(matrix_to_json(u));
  return Json{{"n", t.n}, {"m", t.m}, {"matrices", matrices}};
}

UnitaryTuple tuple_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("m") ||
      !j.contains("matrices"))
    throw DomainError("tuple JSON must contain n, m and matrices");
  UnitaryTuple t;
  t.n = j.at("n").get<int>();
  t.m = j.at("m").get<int>();
  const Json& matrices = j.at("matrices");
  if (static_cast<int>(matrices.size()) != t.n)
    throw DimensionError("tuple JSON has wrong matrix count");
  for (const Json& mj : matrices) {
    ComplexMatrix u = matrix_from_json(mj);
    if (u.rows() != t.m || u.cols() != t.m)
      throw DimensionError("tuple JSON matrix is not m x m");
    t.matrices.push_back(std::move(u));
  }
  return t;
}

Json tolerances_to_json(const Tolerances& tol) {
  return Json{{"unitary", tol.unitary}, {"commute", tol.commute},
              {"skew", tol.skew},       {"one", tol.one},
              {"margin", tol.margin},   {"diagonal", tol.diagonal}};
}

Json cycle_class_to_json(const CycleClass& w) {
  Json size;
  if (w.class_size <= std::numeric_limits<int64_t>::max())
    size = static_cast<int64_t>(w.class_size);
  else
    size = w.class_size.str();
  return Json{{"positive_cycles", w.positive_cycles},
              {"negative_cycles", w.negative_cycles},
              {"size", size}};
}

Json conjugacy_classes_to_json(const GroupFamily& g) {
  Json classes = Json::array();
  for (const auto& w : conjugacy_classes(g))
    classes.push_back(cycle_class_to_json(w));
  return Json{{"family", g.name()},
              {"weyl_order", g.weyl_order().str()},
              {"classes", classes}};
}

Json stratum_report_to_json(const StratumReport& report) {
  return Json{{"partition", partition_to_json(report.partition)},
              {"conjugator", matrix_to_json(report.conjugator)},
              {"eigen_rows", matrix_to_json(report.eigen_rows)},
              {"residual", report.residual},
              {"ambiguous", report.ambiguous},
              {"tolerances", tolerances_to_json(report.tolerance_used)}};
}

Json summand_report_to_json(const SummandReport& report) {
  Json dims = Json::array();
  for (const auto& entry : report.sphere_dims)
    dims.push_back(Json{{"block", entry.block.to_string()},
                        {"part", entry.part},
                        {"block_arity", entry.block_arity},
                        {"dim", entry.dim}});
  return Json{{"partition", partition_to_json(report.partition)},
              {"flag_poly", polynomial_to_json(report.flag_poly)},
              {"sphere_dims", dims},
              {"total_sphere_dim", report.total_sphere_dim()},
              {"series_closed", polynomial_to_json(report.series_closed)},
              {"series_equivariant", polynomial_to_json(report.series_equivariant)},
              {"agree", report.agree}};
}

Json splitting_table_to_json(const SplittingTable& table) {
  Json reports = Json::array();
  for (const auto& report : table.reports)
    reports.push_back(summand_report_to_json(report));
  return Json{{"family", table.family.name()},
              {"n", table.n},
              {"summands", reports},
              {"summand_total", polynomial_to_json(table.summand_total)},
              {"hom_series", polynomial_to_json(table.hom)},
              {"splitting_identity", table.splitting_identity},
              {"models_agree", table.all_agree}};
}

void poset_csv(std::ostream& out, const std::vector<IndexedPartition>& elements) {
  out << "partition,weight,in_s,inverted_primes\n";
  for (const auto& lambda : elements) {
    out << lambda.to_string() << "," << weight(lambda) << ","
        << (in_S(lambda) ? "true" : "false") << ",";
    auto primes = inverted_primes(lambda);
    for (size_t i = 0; i < primes.size(); ++i)
      out << (i ? "|" : "") << primes[i];
    out << "\n";
  }
}

void hasse_csv(std::ostream& out, const HasseDiagram& diagram) {
  out << "child,parent\n";
  for (auto [child, parent] : diagram.edges)
    out << diagram.elements[child].to_string() << ","
        << diagram.elements[parent].to_string() << "\n";
}

void splitting_csv(std::ostream& out, const SplittingTable& table) {
  out << "partition,flag_poly,D,series,agree\n";
  for (const auto& report : table.reports)
    out << report.partition.to_string() << "," << report.flag_poly.to_string()
        << "," << report.total_sphere_dim() << ","
        << report.series_equivariant.to_string() << ","
        << (report.agree ? "true" : "false") << "\n";
  out << "# total: " << table.summand_total.to_string() << "\n";
  out << "# hom series: " << table.hom.to_string() << "\n";
  out << "# splitting identity: "
      << (table.splitting_identity ? "PASS" : "FAIL") << "\n";
  if (table.family.kind == GroupKind::Symplectic)
    out << "# series valid after inverting 2^m*m! = "
        << table.family.weyl_order() << "\n";
  else
    out << "# series valid after inverting m! = " << table.family.weyl_order()
        << "\n";
}

}  // namespace commsplit
