#include "commsplit/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "commsplit/errors.hpp"
#include "commsplit/io.hpp"
#include "commsplit/modp.hpp"
#include "commsplit/selftest.hpp"
#include "commsplit/series.hpp"

namespace commsplit::cli {

namespace {

GroupFamily parse_family(const std::string& name, int m) {
  if (m < 1) throw DomainError("--m must be at least 1");
  if (name == "U") return GroupFamily::unitary(m);
  if (name == "Sp") return GroupFamily::symplectic(m);
  if (name == "SOodd") return GroupFamily::orthogonal_odd(m);
  if (name == "SOeven") return GroupFamily::orthogonal_even(m);
  throw DomainError("unknown family '" + name + "' (use U, Sp, SOodd, SOeven)");
}

void deliver(const std::string& text, const std::string& out_file,
             std::ostream& out) {
  if (out_file.empty()) {
    out << text;
    return;
  }
  std::ofstream file(out_file, std::ios::binary);
  if (!file) throw Error("cannot open output file " + out_file);
  file << text;
}

std::string homology_text(const GroupFamily& g, int n, const std::string& format) {
  Polynomial series = hom_series(g, n);
  std::ostringstream text;
  const bool orthogonal = g.kind == GroupKind::OrthogonalOdd ||
                          g.kind == GroupKind::OrthogonalEven;
  if (format == "json") {
    Json j{{"family", g.name()},
           {"n", n},
           {"component", orthogonal ? "identity" : "all"},
           {"series", polynomial_to_json(series)}};
    text << j.dump(2) << "\n";
  } else if (format == "csv") {
    text << "degree,coefficient\n";
    for (int k = 0; k <= series.degree(); ++k)
      text << k << "," << series.coeff(k) << "\n";
  } else {
    if (orthogonal)
      text << "# identity component of Hom(Z^" << n << ", " << g.name()
           << ")\n";
    text << series.to_string() << "\n";
  }
  return text.str();
}

std::string modp_text(long long p, int n, const std::string& format) {
  Polynomial closed = cnup_modp_closed(p, n);
  Polynomial gysin = cnup_modp_gysin(p, n);
  bool agree = closed == gysin;
  std::ostringstream text;
  if (format == "json") {
    Json j{{"p", p},
           {"n", n},
           {"closed", polynomial_to_json(closed)},
           {"gysin", polynomial_to_json(gysin)},
           {"agree", agree}};
    text << j.dump(2) << "\n";
  } else if (format == "csv") {
    text << "degree,closed,gysin\n";
    int top = std::max(closed.degree(), gysin.degree());
    for (int k = 0; k <= top; ++k)
      text << k << "," << closed.coeff(k) << "," << gysin.coeff(k) << "\n";
    text << "# agree: " << (agree ? "true" : "false") << "\n";
  } else {
    text << "closed: " << closed.to_string() << "   [literal formula]\n";
    text << "gysin:  " << gysin.to_string()
         << "   [Gysin assembly over U(p)/N]\n";
    text << "agree: " << (agree ? "true" : "false") << "\n";
  }
  return text.str();
}

std::string summands_pretty(const SplittingTable& table) {
  std::ostringstream text;
  const int blocks = 1 << table.n;
  for (int code = 0; code < blocks; ++code)
    text << BinarySequence(table.n, static_cast<unsigned>(code)).to_string()
         << " ";
  text << "| D  | series | agree\n";
  for (const auto& report : table.reports) {
    for (int code = 0; code < blocks; ++code)
      text << report.partition.part(static_cast<unsigned>(code)) << " ";
    text << "| " << report.total_sphere_dim() << " | "
         << report.series_equivariant.to_string() << " | "
         << (report.agree ? "yes" : "no") << "\n";
  }
  text << "# total: " << table.summand_total.to_string() << "\n";
  text << "# hom series: " << table.hom.to_string() << "\n";
  text << "# splitting identity: "
       << (table.splitting_identity ? "PASS" : "FAIL") << "\n";
  if (table.family.kind == GroupKind::Symplectic)
    text << "# series valid after inverting 2^m*m! = "
         << table.family.weyl_order() << "\n";
  else
    text << "# series valid after inverting m! = " << table.family.weyl_order()
         << "\n";
  return text.str();
}

std::vector<int> parse_parts(const std::string& spec, int n) {
  std::vector<int> parts;
  std::stringstream stream(spec);
  std::string item;
  while (std::getline(stream, item, ','))
    parts.push_back(std::stoi(item));
  if (parts.size() != (size_t(1) << n))
    throw DimensionError("--parts must list exactly 2^n comma-separated values");
  return parts;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err, std::istream* in) {
  CLI::App app{"exact Poincare series and stratum classification for spaces "
               "of commuting tuples in compact groups"};
  app.require_subcommand(1);

  std::string family_name = "U";
  int m = 2, n = 2;
  long long p = 2;
  std::string format;
  uint64_t seed = 0;
  double tol_one = -1.0, tol_commute = -1.0;
  std::string out_file, in_file, parts_spec;
  bool want_hasse = false, diagonal = false;

  // Defaults are resolved after parsing: csv for tables, pretty for series.
  auto add_common = [&](CLI::App* cmd, const char* default_format) {
    cmd->add_option("--format", format, std::string("output format (default ") +
                                            default_format + ")")
        ->check(CLI::IsMember({"csv", "json", "pretty"}));
    cmd->add_option("--out", out_file, "write output to a file");
  };

  CLI::App* poset_cmd =
      app.add_subcommand("poset", "enumerate the partition poset");
  poset_cmd->add_option("--n", n, "arity")->required();
  poset_cmd->add_option("--m", m, "rank")->required();
  poset_cmd->add_flag("--hasse", want_hasse, "emit cover relations instead");
  add_common(poset_cmd, "csv");

  CLI::App* summands_cmd = app.add_subcommand(
      "summands", "per-partition stable summand series and identity checks");
  summands_cmd->add_option("--family", family_name, "U or Sp")->required();
  summands_cmd->add_option("--m", m, "rank")->required();
  summands_cmd->add_option("--n", n, "arity")->required();
  add_common(summands_cmd, "csv");

  CLI::App* homology_cmd = app.add_subcommand(
      "homology", "Poincare series of the commuting tuple space");
  homology_cmd->add_option("--family", family_name, "U, Sp, SOodd or SOeven")
      ->required();
  homology_cmd->add_option("--m", m, "rank")->required();
  homology_cmd->add_option("--n", n, "arity")->required();
  add_common(homology_cmd, "pretty");

  CLI::App* modp_cmd = app.add_subcommand(
      "modp", "mod-p series of the compactified commuting variety");
  modp_cmd->add_option("--p", p, "prime")->required();
  modp_cmd->add_option("--n", n, "even arity >= 4")->required();
  add_common(modp_cmd, "pretty");

  CLI::App* classify_cmd = app.add_subcommand(
      "classify", "classify a commuting unitary tuple into its stratum");
  classify_cmd->add_option("--in", in_file, "tuple JSON file (default stdin)");
  classify_cmd->add_option("--seed", seed, "seed for the diagonalization");
  classify_cmd->add_option("--tol-one", tol_one, "eigenvalue-equals-1 tolerance");
  classify_cmd->add_option("--tol-commute", tol_commute, "commutator tolerance");
  classify_cmd->add_option("--out", out_file, "write output to a file");

  CLI::App* generate_cmd = app.add_subcommand(
      "generate", "generate a random commuting tuple in a given stratum");
  generate_cmd->add_option("--n", n, "arity")->required();
  generate_cmd->add_option("--parts", parts_spec,
                           "partition parts in lexicographic block order, "
                           "e.g. 1,1,2,2")
      ->required();
  generate_cmd->add_option("--seed", seed, "random seed");
  generate_cmd->add_flag("--diagonal", diagonal,
                         "emit the torus tuple without conjugating");
  generate_cmd->add_option("--out", out_file, "write output to a file");

  CLI::App* selftest_cmd =
      app.add_subcommand("selftest", "run the full acceptance suite");
  selftest_cmd->add_option("--out", out_file, "write output to a file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 1;
  }

  if (format.empty()) {
    if (app.got_subcommand(homology_cmd) || app.got_subcommand(modp_cmd))
      format = "pretty";
    else
      format = "csv";
  }

  try {
    if (app.got_subcommand(poset_cmd)) {
      std::ostringstream text;
      if (format == "json") {
        Json j;
        j["n"] = n;
        j["m"] = m;
        Json elems = Json::array();
        if (want_hasse) {
          HasseDiagram diagram = hasse(n, m);
          for (const auto& lambda : diagram.elements)
            elems.push_back(partition_to_json(lambda));
          Json edges = Json::array();
          for (auto [child, parent] : diagram.edges)
            edges.push_back(Json::array({child, parent}));
          j["partitions"] = elems;
          j["hasse"] = edges;
        } else {
          for (const auto& lambda : enumerate_partitions(n, m))
            elems.push_back(partition_to_json(lambda));
          j["partitions"] = elems;
        }
        text << j.dump(2) << "\n";
      } else {
        if (want_hasse)
          hasse_csv(text, hasse(n, m));
        else
          poset_csv(text, enumerate_partitions(n, m));
      }
      deliver(text.str(), out_file, out);
    } else if (app.got_subcommand(summands_cmd)) {
      SplittingTable table = splitting_table(parse_family(family_name, m), n);
      std::ostringstream text;
      if (format == "json")
        text << splitting_table_to_json(table).dump(2) << "\n";
      else if (format == "pretty")
        text << summands_pretty(table);
      else
        splitting_csv(text, table);
      deliver(text.str(), out_file, out);
      if (!table.splitting_identity) {
        err << "splitting identity FAILED for " << table.family.name()
            << " n=" << n << "\n";
        return 2;
      }
    } else if (app.got_subcommand(homology_cmd)) {
      deliver(homology_text(parse_family(family_name, m), n, format), out_file,
              out);
    } else if (app.got_subcommand(modp_cmd)) {
      deliver(modp_text(p, n, format), out_file, out);
    } else if (app.got_subcommand(classify_cmd)) {
      Json input;
      if (!in_file.empty()) {
        std::ifstream file(in_file);
        if (!file) throw Error("cannot open input file " + in_file);
        file >> input;
      } else {
        if (in == nullptr) in = &std::cin;
        *in >> input;
      }
      Tolerances tol;
      if (tol_one > 0) tol.one = tol_one;
      if (tol_commute > 0) tol.commute = tol_commute;
      StratumReport report = classify(tuple_from_json(input), seed, tol);
      deliver(stratum_report_to_json(report).dump(2) + "\n", out_file, out);
    } else if (app.got_subcommand(generate_cmd)) {
      IndexedPartition lambda(n, parse_parts(parts_spec, n));
      UnitaryTuple tuple = diagonal ? random_torus_tuple(lambda, seed)
                                    : random_commuting_tuple(lambda, seed);
      deliver(tuple_to_json(tuple).dump(2) + "\n", out_file, out);
    } else if (app.got_subcommand(selftest_cmd)) {
      std::ostringstream text;
      auto results = run_acceptance(&text);
      int passed = 0;
      for (const auto& result : results) passed += result.pass ? 1 : 0;
      text << "passed " << passed << "/" << results.size() << " criteria\n";
      deliver(text.str(), out_file, out);
      if (passed != static_cast<int>(results.size())) return 2;
    }
  } catch (const ConsistencyError& e) {
    err << "internal consistency failure: " << e.what() << "\n";
    return 2;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace commsplit::cli
