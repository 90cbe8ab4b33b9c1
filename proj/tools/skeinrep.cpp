// skeinrep: command-line front end.
//
// Exit status: 0 success, 1 invalid input (or a failed `check`), 2 when an
// evaluation exceeds the term budget.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "check_suite.hpp"
#include "skeinrep/analysis.hpp"
#include "skeinrep/io.hpp"
#include "skeinrep/recoupling.hpp"

using namespace skeinrep;

namespace {

struct RunConfig {
  std::string command;
  int r = 5;
  int genus = 1;
  std::string output;
  std::string format;
  std::int64_t budget = kDefaultTermBudget;
  int depth = 6;
  int bound = 3;
  int digits = 12;
  std::string curve;
  std::string file;
  std::string engine = "accel";
  bool raw = false;
  int samples = 60;
};

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string exact(const CycloScalar& x) { return scalar_to_json(x).dump(); }

std::string render_text_matrix(const RepMatrix& m, int digits) {
  std::ostringstream os;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) os << (j ? "  " : "") << format_numeric(m(i, j), digits);
    os << '\n';
  }
  return os.str();
}

json matrix_report(const RepMatrix& m, int digits) {
  return {{"exact", matrix_to_json(m)}, {"numeric", matrix_numeric_json(m, digits)}};
}

EvalOptions eval_options(const RunConfig& c) {
  EvalOptions opt;
  opt.term_budget = c.budget;
  return opt;
}

// ---------------------------------------------------------------------------

std::string run_tables(const RunConfig& c) {
  const Level L(c.r);
  const int n = L.max_color();
  std::ostringstream os;
  if (c.format == "json") {
    json j;
    j["r"] = c.r;
    j["delta"] = json::array();
    j["xi"] = json::array();
    j["theta"] = json::array();
    for (int a = 0; a <= n; ++a) {
      j["delta"].push_back({{"a", a}, {"exact", scalar_to_json(delta(a, L))},
                            {"numeric", numeric_to_json(delta(a, L), c.digits)}});
      j["xi"].push_back({{"a", a}, {"exact", scalar_to_json(xi(a, L))},
                         {"numeric", numeric_to_json(xi(a, L), c.digits)}});
    }
    for (int a = 0; a <= n; ++a)
      for (int b = a; b <= n; ++b)
        for (int cc = b; cc <= n; ++cc)
          if (admissible(a, b, cc, L)) {
            const auto t = theta(a, b, cc, L);
            j["theta"].push_back({{"a", a}, {"b", b}, {"c", cc}, {"exact", scalar_to_json(t)},
                                  {"numeric", numeric_to_json(t, c.digits)}});
          }
    return j.dump(2) + "\n";
  }
  const bool csv = c.format == "csv";
  if (csv) os << "table,a,b,c,exact,numeric\n";
  auto line = [&](const char* table, int a, int b, int cc, const CycloScalar& x) {
    auto idx = [](int v) { return v < 0 ? std::string() : std::to_string(v); };
    if (csv)
      os << table << ',' << idx(a) << ',' << idx(b) << ',' << idx(cc) << ',' << csv_quote(exact(x)) << ','
         << format_numeric(x, c.digits) << '\n';
    else
      os << table << '(' << idx(a) << (b < 0 ? "" : "," + idx(b)) << (cc < 0 ? "" : "," + idx(cc))
         << ") = " << x << "  ~ " << format_numeric(x, c.digits) << '\n';
  };
  for (int a = 0; a <= n; ++a) line("delta", a, -1, -1, delta(a, L));
  for (int a = 0; a <= n; ++a) line("xi", a, -1, -1, xi(a, L));
  for (int a = 0; a <= n; ++a)
    for (int b = a; b <= n; ++b)
      for (int cc = b; cc <= n; ++cc)
        if (admissible(a, b, cc, L)) line("theta", a, b, cc, theta(a, b, cc, L));
  return os.str();
}

std::string run_basis(const RunConfig& c) {
  const Level L(c.r);
  const Spine& s = standard_spine(c.genus);
  const auto basis = enumerate_basis(c.genus, L);
  std::ostringstream os;
  if (c.format == "json") {
    json j{{"genus", c.genus}, {"r", c.r}, {"edges", s.edge_names}, {"dimension", basis.size()},
           {"labelings", basis}};
    return j.dump(2) + "\n";
  }
  if (c.format == "csv") {
    os << "index";
    for (const auto& e : s.edge_names) os << ',' << e;
    os << '\n';
    for (std::size_t i = 0; i < basis.size(); ++i) {
      os << i;
      for (int v : basis[i]) os << ',' << v;
      os << '\n';
    }
    return os.str();
  }
  os << "genus " << c.genus << ", r = " << c.r << ": " << basis.size() << " labelings\n";
  for (std::size_t i = 0; i < basis.size(); ++i) os << i << ": " << format_labeling(s, basis[i]) << '\n';
  return os.str();
}

std::string run_rep(const RunConfig& c) {
  const Level L(c.r);
  const auto opt = eval_options(c);
  std::vector<CurveSpec> curves;
  if (c.curve.empty()) {
    for (const auto& n : standard_curve_names(c.genus)) curves.push_back(CurveSpec::named(n));
  } else if (std::filesystem::exists(c.curve)) {
    curves.push_back(CurveSpec::from_diagram(read_diagram_file(c.curve), c.curve));
  } else {
    curves.push_back(CurveSpec::named(c.curve));
  }
  std::vector<RepMatrix> mats;
  for (const auto& cv : curves) {
    RepMatrix m = dehn_twist_matrix(cv, c.genus, L, opt);
    mats.push_back(c.raw ? m : normalize_projective(m));
  }
  const auto basis = enumerate_basis(c.genus, L);
  std::ostringstream os;
  if (c.format == "json") {
    json j{{"genus", c.genus}, {"r", c.r}, {"normalized", !c.raw}, {"basis", basis}};
    j["matrices"] = json::array();
    for (std::size_t k = 0; k < mats.size(); ++k) {
      json m = matrix_report(mats[k], c.digits);
      m["curve"] = curves[k].name;
      j["matrices"].push_back(std::move(m));
    }
    return j.dump(2) + "\n";
  }
  if (c.format == "csv") {
    os << "curve,row,col,exact,numeric\n";
    for (std::size_t k = 0; k < mats.size(); ++k)
      for (Eigen::Index i = 0; i < mats[k].rows(); ++i)
        for (Eigen::Index jx = 0; jx < mats[k].cols(); ++jx)
          os << curves[k].name << ',' << i << ',' << jx << ',' << csv_quote(exact(mats[k](i, jx))) << ','
             << format_numeric(mats[k](i, jx), c.digits) << '\n';
    return os.str();
  }
  for (std::size_t k = 0; k < mats.size(); ++k)
    os << curves[k].name << ":\n" << render_text_matrix(mats[k], c.digits) << '\n';
  return os.str();
}

std::string run_irr(const RunConfig& c) {
  const Level L(c.r);
  const auto rep = irreducibility_verdict(c.genus, L, eval_options(c));
  std::ostringstream os;
  if (c.format == "json") {
    json j{{"genus", c.genus},
           {"r", c.r},
           {"generators", rep.generators},
           {"dimension", rep.dimension},
           {"commutant_dimension", rep.commutant_dimension},
           {"irreducible", rep.irreducible}};
    j["basis"] = json::array();
    for (const auto& b : rep.basis) j["basis"].push_back(matrix_report(b, c.digits));
    return j.dump(2) + "\n";
  }
  if (c.format == "csv") {
    os << "genus,r,generators,dimension,commutant_dimension,irreducible\n"
       << c.genus << ',' << c.r << ',' << rep.generators << ',' << rep.dimension << ','
       << rep.commutant_dimension << ',' << (rep.irreducible ? "true" : "false") << '\n';
    return os.str();
  }
  os << "genus " << c.genus << ", r = " << c.r << "\n"
     << "generators: " << rep.generators << "\n"
     << "dimension: " << rep.dimension << "\n"
     << "commutant dimension: " << rep.commutant_dimension << "\n"
     << "verdict: " << (rep.irreducible ? "irreducible" : "reducible") << "\n";
  return os.str();
}

std::string run_invariants(const RunConfig& c) {
  const Level L(c.r);
  const auto found = modular_invariants(L, c.bound);
  const std::vector<RepMatrix> st{normalize_projective(s_matrix(L)), t_matrix(L)};
  const auto d = commutant(st).commutant_dimension;
  std::ostringstream os;
  if (c.format == "json") {
    json j{{"r", c.r}, {"bound", c.bound}, {"commutant_dimension", d}};
    j["invariants"] = json::array();
    for (const auto& z : found) {
      json rows = json::array();
      for (Eigen::Index i = 0; i < z.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index k = 0; k < z.cols(); ++k) row.push_back(z(i, k));
        rows.push_back(std::move(row));
      }
      j["invariants"].push_back({{"matrix", rows}, {"diagonal", is_diagonal<long>(z)}});
    }
    return j.dump(2) + "\n";
  }
  if (c.format == "csv") {
    os << "invariant,row,col,value\n";
    for (std::size_t k = 0; k < found.size(); ++k)
      for (Eigen::Index i = 0; i < found[k].rows(); ++i)
        for (Eigen::Index jx = 0; jx < found[k].cols(); ++jx)
          os << k << ',' << i << ',' << jx << ',' << found[k](i, jx) << '\n';
    return os.str();
  }
  os << "r = " << c.r << ", bound " << c.bound << ", commutant dimension " << d << ", "
     << found.size() << " invariant(s)\n";
  for (std::size_t k = 0; k < found.size(); ++k)
    os << "\n#" << k << (is_diagonal<long>(found[k]) ? " (diagonal)" : "") << "\n" << found[k] << '\n';
  return os.str();
}

std::string run_eval(const RunConfig& c, const CLI::App& sub) {
  if (c.file.empty()) throw std::invalid_argument("eval: --file is required");
  GraphDiagram d = read_diagram_file(c.file);
  if (sub.count("--r") > 0) {
    if (d.r != 0 && d.r != c.r) throw InvalidDiagram("eval: --r disagrees with the diagram header");
  }
  // no header: the --r value (or its default) fixes the level
  if (d.r == 0) d.r = c.r;
  const Level L(d.r);
  const auto opt = eval_options(c);
  const EvalResult res = c.engine == "naive" ? eval_naive(d, L, opt) : eval_accel(d, L, opt);
  std::ostringstream os;
  if (c.format == "json") {
    json j{{"r", d.r},
           {"engine", c.engine},
           {"value", scalar_to_json(res.value)},
           {"numeric", numeric_to_json(res.value, c.digits)},
           {"stats",
            {{"crossings_resolved", res.stats.crossings_resolved},
             {"loops_removed", res.stats.loops_removed},
             {"recoupling_moves", res.stats.recoupling_moves},
             {"peak_terms", res.stats.peak_terms}}}};
    return j.dump(2) + "\n";
  }
  if (c.format == "csv") {
    os << "r,engine,exact,numeric\n"
       << d.r << ',' << c.engine << ',' << csv_quote(exact(res.value)) << ','
       << format_numeric(res.value, c.digits) << '\n';
    return os.str();
  }
  os << res.value << '\n';
  if (!res.value.is_rational()) os << "~ " << format_numeric(res.value, c.digits) << '\n';
  return os.str();
}

std::string module_of(const std::exception& e) {
  if (dynamic_cast<const InvalidDiagram*>(&e)) return "diagram";
  if (dynamic_cast<const ResourceLimit*>(&e)) return "engine";
  if (dynamic_cast<const InvalidCurve*>(&e)) return "mcg_rep";
  if (dynamic_cast<const UnsupportedGenus*>(&e) || dynamic_cast<const SingularGram*>(&e))
    return "rep_spaces";
  if (dynamic_cast<const DimensionMismatch*>(&e)) return "analysis";
  if (dynamic_cast<const DivisionByZero*>(&e) || dynamic_cast<const LevelMismatch*>(&e))
    return "scalars";
  if (dynamic_cast<const ZeroTheta*>(&e)) return "recoupling";
  if (dynamic_cast<const json::exception*>(&e)) return "io";
  return "skeinrep";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact skein-theoretic quantum representations of mapping class groups"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* s, const std::string& default_format) {
    s->add_option("--r", cfg.r, "level r (A is a primitive 4r-th root of unity)")->check(CLI::Range(3, 64));
    s->add_option("--format", cfg.format, "json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->default_str(default_format);
    s->add_option("--output,-o", cfg.output, "write to this file instead of stdout");
    s->add_option("--budget", cfg.budget, "term budget per evaluation")->check(CLI::PositiveNumber);
    s->add_option("--digits", cfg.digits, "decimal places in numeric renderings")->check(CLI::Range(1, 18));
  };

  auto* tables = app.add_subcommand("tables", "Delta, xi and theta tables");
  add_common(tables, "csv");
  auto* basis = app.add_subcommand("basis", "admissible labelings of the standard spine");
  add_common(basis, "text");
  basis->add_option("--genus", cfg.genus)->check(CLI::Range(1, kMaxGenus));
  auto* rep = app.add_subcommand("rep", "Dehn twist matrices");
  add_common(rep, "text");
  rep->add_option("--genus", cfg.genus)->check(CLI::Range(1, kMaxGenus));
  rep->add_option("--curve", cfg.curve, "stored curve name or a curve diagram file");
  rep->add_flag("--raw", cfg.raw, "do not normalize projectively");
  auto* irr = app.add_subcommand("irr", "commutant dimension and irreducibility verdict");
  add_common(irr, "text");
  irr->add_option("--genus", cfg.genus)->check(CLI::Range(1, 2));
  auto* inv = app.add_subcommand("invariants", "bounded search for genus-one modular invariants");
  add_common(inv, "text");
  inv->add_option("--bound", cfg.bound)->check(CLI::Range(1, 16));
  auto* ev = app.add_subcommand("eval", "evaluate a diagram file");
  add_common(ev, "text");
  ev->add_option("--file,-f", cfg.file, "diagram file")->required();
  ev->add_option("--engine", cfg.engine)->check(CLI::IsMember({"accel", "naive"}));
  auto* chk = app.add_subcommand("check", "run the property suite at one level");
  add_common(chk, "text");
  chk->add_option("--genus", cfg.genus, "largest genus to exercise")->check(CLI::Range(1, 2));
  chk->add_option("--depth", cfg.depth, "orbit search depth")->check(CLI::NonNegativeNumber);
  chk->add_option("--samples", cfg.samples, "random diagrams for the evaluator cross-check")
      ->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  CLI::App* sub = app.get_subcommands().front();
  cfg.command = sub->get_name();
  if (cfg.format.empty()) cfg.format = sub->get_option("--format")->get_default_str();
  if (sub->count("--budget") == 0) {
    if (const char* env = std::getenv("SKEINREP_BUDGET")) {
      try {
        cfg.budget = std::stoll(env);
      } catch (const std::exception&) {
        cfg.budget = 0;
      }
      if (cfg.budget <= 0) {
        std::cerr << "skeinrep: SKEINREP_BUDGET must be a positive integer\n";
        return 1;
      }
    }
  }

  try {
    std::string out;
    int status = 0;
    if (cfg.command == "tables") out = run_tables(cfg);
    else if (cfg.command == "basis") out = run_basis(cfg);
    else if (cfg.command == "rep") out = run_rep(cfg);
    else if (cfg.command == "irr") out = run_irr(cfg);
    else if (cfg.command == "invariants") out = run_invariants(cfg);
    else if (cfg.command == "eval") out = run_eval(cfg, *sub);
    else {
      CheckOptions co{cfg.r, cfg.genus, cfg.depth, cfg.samples, eval_options(cfg)};
      const auto results = run_check_suite(co);
      out = render_check_results(results, cfg.format);
      for (const auto& r : results)
        if (!r.passed()) status = 1;
    }
    if (cfg.output.empty()) {
      std::cout << out;
    } else {
      std::ofstream f(cfg.output, std::ios::binary);
      if (!f) throw std::invalid_argument("cannot write " + cfg.output);
      f << out;
    }
    return status;
  } catch (const ResourceLimit& e) {
    std::cerr << "skeinrep: engine: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "skeinrep: " << module_of(e) << ": " << e.what() << '\n';
    return 1;
  }
}
