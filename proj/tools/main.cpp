// Command-line front end: classify matrices and graph-subspace relations,
// reproduce the example tables, sweep the rotation family, and run the
// verification suites.  Exit codes: 0 success, 1 verification failure,
// 2 input error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "monoclass/catalog.hpp"
#include "monoclass/numerics.hpp"
#include "monoclass/operators.hpp"
#include "monoclass/products.hpp"
#include "monoclass/relations.hpp"
#include "monoclass/verify.hpp"

using json = nlohmann::ordered_json;
using namespace monoclass;

namespace {

// Every number leaves the program with 12 significant digits.
std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

double num12(double v) { return std::stod(num(v)); }

json vec_json(const Vec& v) {
  json a = json::array();
  for (double x : v) a.push_back(num12(x));
  return a;
}

std::string read_source(const std::string& inline_text, const std::string& file) {
  if (!inline_text.empty()) return inline_text;
  std::ifstream in(file);
  if (!in) throw std::invalid_argument("cannot open file: " + file);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Rows of reals from JSON arrays-of-arrays or CSV (newline/';' rows,
// ','/whitespace fields).
std::vector<Vec> parse_rows(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw std::invalid_argument("empty input");

  std::vector<Vec> rows;
  if (text[first] == '[') {
    json j = json::parse(text);
    if (!j.is_array()) throw std::invalid_argument("expected an array of rows");
    for (const auto& row : j) {
      if (!row.is_array()) throw std::invalid_argument("expected an array of rows");
      Vec r;
      for (const auto& x : row) {
        if (!x.is_number()) throw std::invalid_argument("matrix entries must be numbers");
        r.push_back(x.get<double>());
      }
      rows.push_back(std::move(r));
    }
    return rows;
  }

  std::string normalized(text);
  for (char& c : normalized)
    if (c == ';') c = '\n';
  std::istringstream lines(normalized);
  std::string line;
  while (std::getline(lines, line)) {
    for (char& c : line)
      if (c == ',') c = ' ';
    std::istringstream fields(line);
    Vec r;
    double x;
    while (fields >> x) r.push_back(x);
    if (!fields.eof()) throw std::invalid_argument("malformed numeric field: " + line);
    if (!r.empty()) rows.push_back(std::move(r));
  }
  if (rows.empty()) throw std::invalid_argument("no rows in input");
  return rows;
}

Matrix parse_matrix(const std::string& text) {
  const std::vector<Vec> rows = parse_rows(text);
  const int r = static_cast<int>(rows.size());
  const int c = static_cast<int>(rows.front().size());
  Vec entries;
  for (const Vec& row : rows) {
    if (static_cast<int>(row.size()) != c) throw std::invalid_argument("ragged rows");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return Matrix(r, c, std::move(entries));
}

json report_json(const ClassificationReport& r) {
  json j;
  j["code"] = r.code.str();
  j["monotone"] = r.monotone;
  j["dim"] = r.dim;
  j["classes"] = {{"paramonotone", r.code.pm},
                  {"strictly_monotone", r.code.sm},
                  {"cyclic_3", r.code.cm3},
                  {"maximal", r.code.mm},
                  {"star_3", r.code.star3}};
  j["lambda_min_sym"] = num12(r.lambda_min_sym);
  j["ker_sym_dim"] = r.ker_sym.dim();
  j["ker_dim"] = r.ker_full.dim();
  if (r.alpha_star)
    j["alpha_star"] = r.alpha_star->unbounded ? json("unbounded") : json(num12(r.alpha_star->value));
  else
    j["alpha_star"] = nullptr;
  if (r.cycle_witness) {
    json points = json::array();
    for (const Vec& p : r.cycle_witness->points) points.push_back(vec_json(p));
    j["cycle_witness"] = {{"points", points}, {"sum", num12(r.cycle_witness->cycle_sum)}};
  } else {
    j["cycle_witness"] = nullptr;
  }
  j["notes"] = r.notes;
  return j;
}

void print_report_text(const ClassificationReport& r) {
  std::cout << "code            " << r.code.str() << "\n"
            << "monotone        " << (r.monotone ? "yes" : "no") << "\n"
            << "paramonotone    " << (r.code.pm ? "yes" : "no") << "\n"
            << "strictly mono   " << (r.code.sm ? "yes" : "no") << "\n"
            << "3-cyclic        " << (r.code.cm3 ? "yes" : "no") << "\n"
            << "maximal         " << (r.code.mm ? "yes" : "no") << "\n"
            << "3*-monotone     " << (r.code.star3 ? "yes" : "no") << "\n"
            << "lambda_min_sym  " << num(r.lambda_min_sym) << "\n";
  if (r.alpha_star)
    std::cout << "alpha_star      "
              << (r.alpha_star->unbounded ? std::string("unbounded") : num(r.alpha_star->value))
              << "\n";
  if (r.cycle_witness) std::cout << "cycle_sum       " << num(r.cycle_witness->cycle_sum) << "\n";
  for (const std::string& note : r.notes) std::cout << "note            " << note << "\n";
}

int cmd_classify(const std::string& source, const std::string& format, const Tolerance& tol) {
  const Matrix m = parse_matrix(source);
  if (!m.square()) throw std::invalid_argument("classify expects a square matrix");
  const ClassificationReport r = classify(MatrixOperator(m), tol);
  if (format == "text")
    print_report_text(r);
  else
    std::cout << report_json(r).dump(2) << "\n";
  return 0;
}

int cmd_classify_relation(const std::string& source, const std::string& format,
                          const Tolerance& tol) {
  const std::vector<Vec> rows = parse_rows(source);
  const int width = static_cast<int>(rows.front().size());
  if (width % 2 != 0) throw std::invalid_argument("relation rows must have even length 2d");
  const LinearRelation rel = LinearRelation::from_graph_vectors(width / 2, rows, tol);
  const ClassificationReport r = classify_relation(rel, tol);

  if (format == "text") {
    print_report_text(r);
    std::cout << "graph_dim       " << rel.graph_dim() << "\n"
              << "dom/ran/a0/ker  " << rel.dom().dim() << "/" << rel.ran().dim() << "/"
              << rel.a0().dim() << "/" << rel.ker().dim() << "\n";
  } else {
    json j = report_json(r);
    j["graph_dim"] = rel.graph_dim();
    j["dom_dim"] = rel.dom().dim();
    j["ran_dim"] = rel.ran().dim();
    j["a0_dim"] = rel.a0().dim();
    j["ker_relation_dim"] = rel.ker().dim();
    j["maximal"] = r.code.mm;
    std::cout << j.dump(2) << "\n";
  }
  return 0;
}

struct TableRow {
  std::string name;
  std::string code;  // or the marker for infinite-dimensional rows
  std::string detail;
};

int cmd_table(const std::string& which, const std::string& format, int alpha_decay,
              const Tolerance& tol) {
  if (which != "r2" && which != "hilbert")
    throw std::invalid_argument("unknown table id: " + which + " (expected r2 or hilbert)");

  const std::vector<std::string> r2_names = {"rotation_half_pi", "projection", "rotation_1.3",
                                             "identity"};
  const std::vector<std::string> hilbert_extra = {"example_3x3", "zero"};

  std::vector<TableRow> rows;
  const auto ops = operator_catalog(tol);
  auto live = [&](const std::string& name) {
    for (const CatalogEntry& e : ops)
      if (e.name == name)
        rows.push_back({name, classify(e.op(), tol).code.str(), e.provenance});
  };
  for (const std::string& n : r2_names) live(n);
  if (which == "hilbert") {
    for (const std::string& n : hilbert_extra) live(n);
    // The classes PM-only and PM+SM without 3CM/3* have no matrix instances;
    // the rotation-chain family witnesses them in the limit through its
    // decaying alpha*.
    std::ostringstream decay;
    for (int k = 1; k <= alpha_decay; ++k) {
      const AlphaStar a = brezis_haraux_alpha(rotation_chain(k), tol);
      decay << (k > 1 ? " " : "") << num(a.unbounded ? 0.0 : a.value);
    }
    rows.push_back({"rotation_chain", "infinite-dimensional only (PM SM - MM -)",
                    "alpha* decay: " + decay.str()});
    rows.push_back({"zero x rotation_chain", "infinite-dimensional only (PM - - MM -)",
                    "product of the zero operator with the chain"});
  }

  if (format == "csv") {
    std::cout << "name,code,detail\n";
    for (const TableRow& r : rows)
      std::cout << r.name << ",\"" << r.code << "\",\"" << r.detail << "\"\n";
  } else {
    std::cout << "| name | PM | SM | 3CM | MM | 3* | detail |\n";
    std::cout << "|------|----|----|-----|----|----|--------|\n";
    for (const TableRow& r : rows) {
      std::cout << "| " << r.name << " | ";
      if (r.code.size() == 5) {
        for (char c : r.code) std::cout << c << " | ";
      } else {
        std::cout << r.code << " | | | | | ";
      }
      std::cout << r.detail << " |\n";
    }
  }
  return 0;
}

int cmd_sweep(int n_max, int grid, const Tolerance& tol) {
  if (n_max < 2) throw std::invalid_argument("sweep: n_max must be >= 2");
  if (grid < 2) throw std::invalid_argument("sweep: grid must be >= 2");
  const double half_pi = std::numbers::pi / 2;

  std::vector<double> thetas;
  for (int j = 0; j < grid; ++j) {
    if (j == 0)
      thetas.push_back(0.0);
    else if (j == grid - 1)
      thetas.push_back(half_pi);
    else
      thetas.push_back((j + 0.37) * half_pi / grid);  // offset dodges the n-cyclic boundaries
  }
  for (int n = 2; n <= n_max; ++n) {
    thetas.push_back(std::numbers::pi / n - 1e-4);
    thetas.push_back(std::numbers::pi / n + 1e-4);
  }

  std::cout << "theta,n,cyclic\n";
  for (double theta : thetas) {
    const MatrixOperator r = rotation(theta);
    for (int n = 2; n <= n_max; ++n)
      std::cout << num(theta) << "," << n << "," << (is_n_cyclic(r, n, tol).cyclic ? 1 : 0)
                << "\n";
  }
  return 0;
}

int cmd_verify(std::uint64_t seed, int budget, const std::string& suite, bool inject_fault,
               const Tolerance& tol) {
  VerifyOptions opt;
  opt.seed = seed;
  opt.budget = budget;
  opt.suite = suite;
  opt.inject_fault = inject_fault;
  opt.tol = tol;
  const std::vector<SuiteResult> results = run_verification(opt);

  bool ok = true;
  json suites = json::array();
  for (const SuiteResult& r : results) {
    ok = ok && r.ok();
    json s = {{"name", r.name}, {"checks", r.checks}, {"failures", r.failures}};
    if (!r.ok()) s["failing"] = r.messages;
    suites.push_back(std::move(s));
  }
  json out = {{"seed", seed}, {"budget", budget}, {"suites", suites}, {"ok", ok}};
  std::cout << out.dump(2) << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"classify linear operators and linear relations into the five monotone classes"};
  app.require_subcommand(1);

  std::string inline_text, file, format = "json";
  double tol_value = 0.0;

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("--inline", inline_text, "matrix/rows as a JSON or CSV string");
    cmd->add_option("--file", file, "path to a JSON or CSV file");
    cmd->add_option("--format", format, "json|text")
        ->check(CLI::IsMember({"json", "text"}))
        ->default_str("json");
    cmd->add_option("--tol", tol_value, "decision tolerance (default 1e-9)")->check(CLI::PositiveNumber);
  };

  auto* c_classify = app.add_subcommand("classify", "classify a square matrix");
  add_input(c_classify);

  auto* c_relation =
      app.add_subcommand("classify-relation", "classify a relation from graph-basis rows (2d wide)");
  add_input(c_relation);

  std::string table_id;
  int alpha_decay = 5;
  auto* c_table = app.add_subcommand("table", "reproduce an example table (r2 or hilbert)");
  c_table->add_option("which", table_id, "r2|hilbert")->required();
  c_table->add_option("--alpha-decay", alpha_decay, "terms of the rotation-chain alpha* series");
  c_table->add_option("--format", format, "text|csv")
      ->check(CLI::IsMember({"json", "text", "csv"}))
      ->default_str("text");
  c_table->add_option("--tol", tol_value, "decision tolerance")->check(CLI::PositiveNumber);

  int n_max = 8, grid = 50;
  auto* c_sweep = app.add_subcommand("sweep", "CSV of n-cyclic membership for rotations");
  c_sweep->add_option("--n-max", n_max, "largest cycle length (default 8)");
  c_sweep->add_option("--grid", grid, "grid points on [0, pi/2] (default 50)");
  c_sweep->add_option("--tol", tol_value, "decision tolerance")->check(CLI::PositiveNumber);

  std::uint64_t seed = 1;
  int budget = 10000;
  std::string suite;
  bool inject_fault = false;
  auto* c_verify = app.add_subcommand("verify", "run the invariant/property suites");
  c_verify->add_option("--seed", seed, "random seed (default 1)");
  c_verify->add_option("--budget", budget, "trials per randomized suite (default 10000)");
  c_verify->add_option("--suite", suite,
                       "numerics|operators|relations|products|catalog|oracle (default all)");
  c_verify->add_flag("--inject-fault", inject_fault, "deliberately fail one product-law check");
  c_verify->add_option("--tol", tol_value, "decision tolerance")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  Tolerance tol;
  if (tol_value > 0.0) {
    tol.abs = tol_value;
    tol.eig_rel = tol_value;
    tol.bisect_rel = tol_value / 10.0;
  }
  tol.validate();

  try {
    if (app.got_subcommand(c_classify))
      return cmd_classify(read_source(inline_text, file), format, tol);
    if (app.got_subcommand(c_relation))
      return cmd_classify_relation(read_source(inline_text, file), format, tol);
    if (app.got_subcommand(c_table)) {
      if (format == "json") format = "text";
      return cmd_table(table_id, format, alpha_decay, tol);
    }
    if (app.got_subcommand(c_sweep)) return cmd_sweep(n_max, grid, tol);
    if (app.got_subcommand(c_verify)) return cmd_verify(seed, budget, suite, inject_fault, tol);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
