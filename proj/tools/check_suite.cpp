#include "check_suite.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <sstream>

#include "json.hpp"
#include "skeinrep/analysis.hpp"
#include "skeinrep/random_diagrams.hpp"
#include "skeinrep/temperley_lieb.hpp"

namespace skeinrep {

namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int k = 2; k * k <= n; ++k)
    if (n % k == 0) return false;
  return true;
}

struct Outcome {
  CheckStatus status;
  std::string detail;
};

Outcome pass(std::string d = {}) { return {CheckStatus::Pass, std::move(d)}; }
Outcome fail(std::string d) { return {CheckStatus::Fail, std::move(d)}; }
Outcome skip(std::string d) { return {CheckStatus::Skip, std::move(d)}; }

class Suite {
 public:
  void add(std::string module, std::string name, const std::function<Outcome()>& body) {
    CheckResult res{std::move(module), std::move(name)};
    const auto t0 = std::chrono::steady_clock::now();
    try {
      const Outcome o = body();
      res.status = o.status;
      res.detail = o.detail;
    } catch (const ResourceLimit&) {
      throw;
    } catch (const std::exception& e) {
      res.status = CheckStatus::Fail;
      res.detail = std::string("exception: ") + e.what();
    }
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    results.push_back(std::move(res));
  }

  std::vector<CheckResult> results;
};

}  // namespace

std::vector<CheckResult> run_check_suite(const CheckOptions& opt) {
  const Level L(opt.r);
  const int n = L.max_color();
  Suite s;

  s.add("temperley_lieb", "jones_wenzl_contract", [&] {
    for (int a = 0; a <= n; ++a) {
      const TLElement& f = jones_wenzl(a, L);
      if (!(tl_compose(f, f) == f)) return fail("f(" + std::to_string(a) + ") not idempotent");
      for (int i = 1; i < a; ++i)
        if (!tl_compose(TLElement::hook(L, a, i), f).is_zero())
          return fail("hook e" + std::to_string(i) + " does not kill f(" + std::to_string(a) + ")");
      if (markov_trace(f) != delta(a, L)) return fail("trace of f(" + std::to_string(a) + ") != Delta");
    }
    return pass("a = 0.." + std::to_string(n));
  });

  s.add("rep_spaces", "framed_vandermonde_invertible", [&] {
    const RepMatrix m = framed_vandermonde_matrix(L);
    const auto rk = rank<CycloScalar>(m);
    if (rk != m.rows()) return fail("rank " + std::to_string(rk) + " of " + std::to_string(m.rows()));
    return pass("rank " + std::to_string(rk));
  });

  s.add("recoupling", "xi_distinct", [&] {
    if (!is_prime(opt.r)) return skip("r is not prime");
    for (int a = 0; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b)
        if (xi(a, L) == xi(b, L)) return fail("xi(" + std::to_string(a) + ") = xi(" + std::to_string(b) + ")");
    return pass();
  });

  s.add("mcg_rep", "modular_relations", [&] {
    const RepMatrix S = s_matrix(L);
    const RepMatrix T = t_matrix(L);
    const RepMatrix S2 = S * S;
    const RepMatrix id = identity_matrix<CycloScalar>(S.rows());
    if (!proportional<CycloScalar>(S2 * S2, id)) return fail("S^4 not proportional to I");
    const RepMatrix ST = S * T;
    if (!proportional<CycloScalar>(ST * ST * ST, S2)) return fail("(ST)^3 not proportional to S^2");
    return pass();
  });

  for (int g = 1; g <= opt.max_genus; ++g) {
    const std::string gs = "genus" + std::to_string(g);
    s.add("rep_spaces", "dimension_" + gs, [&, g] {
      const auto dim = static_cast<double>(enumerate_basis(g, L).size());
      const double v = verlinde_dimension(g, opt.r);
      std::ostringstream os;
      os << dim << " labelings, Verlinde " << v;
      if (std::abs(dim - v) > 1e-6) return fail(os.str());
      return pass(os.str());
    });

    s.add("rep_spaces", "gram_diagonal_" + gs, [&, g] {
      const RepMatrix G = gram_matrix(g, L, opt.eval);
      if (!is_diagonal<CycloScalar>(G)) return fail("off-diagonal entries");
      for (Eigen::Index i = 0; i < G.rows(); ++i)
        if (G(i, i).is_zero()) return fail("zero diagonal entry " + std::to_string(i));
      return pass();
    });

    if (g > 2) continue;

    s.add("mcg_rep", "pants_twists_" + gs, [&, g] {
      const auto gens = generator_matrices(g, L, opt.eval);
      const auto idx = pants_generator_indices(g);
      // pants curves are the meridians of the spine edges, in edge order
      for (std::size_t k = 0; k < idx.size(); ++k) {
        const RepMatrix& m = gens[static_cast<std::size_t>(idx[k])];
        if (!is_diagonal<CycloScalar>(m)) return fail("generator " + std::to_string(idx[k]) + " not diagonal");
        if (!proportional<CycloScalar>(m, pants_twist_matrix(static_cast<int>(k), g, L)))
          return fail("generator " + std::to_string(idx[k]) + " not proportional to diag(xi)");
      }
      return pass(std::to_string(idx.size()) + " pants curves");
    });

    s.add("mcg_rep", "pants_eigentuples_" + gs, [&, g] {
      const auto rep = pants_eigentuple_check(g, L);
      if (rep.distinct) return pass(std::to_string(rep.tuples.size()) + " distinct tuples");
      if (!is_prime(opt.r)) return skip(std::to_string(rep.collisions.size()) + " collisions (r not prime)");
      return fail(std::to_string(rep.collisions.size()) + " collisions");
    });

    if (g == 1)
      s.add("mcg_rep", "longitude_conjugate", [&] {
        const RepMatrix lon = dehn_twist_matrix(CurveSpec::named("longitude"), 1, L, opt.eval);
        const RepMatrix S = s_matrix(L);
        const RepMatrix conj = S * t_matrix(L) * inverse<CycloScalar>(S);
        if (!proportional<CycloScalar>(lon, conj)) return fail("longitude twist not proportional to S T S^-1");
        return pass();
      });

    s.add("mcg_rep", "vacuum_orbit_" + gs, [&, g] {
      const auto dim = static_cast<Eigen::Index>(enumerate_basis(g, L).size());
      const auto rk = vacuum_orbit_rank(g, L, opt.depth, opt.eval);
      const std::string d = "rank " + std::to_string(rk) + " of " + std::to_string(dim) + " at depth " +
                            std::to_string(opt.depth);
      return rk == dim ? pass(d) : fail(d);
    });

    s.add("analysis", "commutant_" + gs, [&, g] {
      const auto gens = generator_matrices(g, L, opt.eval);
      const auto rep = commutant(gens);
      for (const auto& x : rep.basis)
        for (const auto& m : gens)
          if (!(x * m == m * x)) return fail("basis member does not commute");
      const std::string d = "d = " + std::to_string(rep.commutant_dimension);
      if (is_prime(opt.r) && !rep.irreducible) return fail(d);
      return pass(d);
    });
  }

  s.add("diagram_engine", "accel_matches_naive", [&] {
    std::mt19937_64 rng(0x5eed0000u + static_cast<unsigned>(opt.r));
    RandomDiagramParams p;
    p.omega_probability = 0.2;
    for (int k = 0; k < opt.samples; ++k) {
      const GraphDiagram d = random_closed_diagram(rng, L, p);
      const auto a = eval_accel(d, L, opt.eval).value;
      const auto b = eval_naive(d, L, opt.eval).value;
      if (a != b) return fail("sample " + std::to_string(k) + " differs:\n" + format_diagram(d));
    }
    return pass(std::to_string(opt.samples) + " samples");
  });

  return s.results;
}

std::string render_check_results(const std::vector<CheckResult>& results, const std::string& format,
                                 bool with_timing) {
  auto status = [](CheckStatus st) {
    switch (st) {
      case CheckStatus::Pass: return "PASS";
      case CheckStatus::Fail: return "FAIL";
      case CheckStatus::Skip: return "SKIP";
    }
    return "?";
  };
  std::ostringstream os;
  if (format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : results) {
      nlohmann::json e{{"module", r.module}, {"name", r.name}, {"status", status(r.status)}, {"detail", r.detail}};
      if (with_timing) e["seconds"] = r.seconds;
      j.push_back(std::move(e));
    }
    return j.dump(2) + "\n";
  }
  if (format == "csv") {
    os << "module,name,status,detail\n";
    for (const auto& r : results) {
      std::string d = r.detail;
      for (auto& c : d)
        if (c == '\n') c = ' ';
      std::string q = "\"";
      for (char c : d) q += (c == '"') ? std::string("\"\"") : std::string(1, c);
      os << r.module << ',' << r.name << ',' << status(r.status) << ',' << q << "\"\n";
    }
    return os.str();
  }
  int failed = 0;
  for (const auto& r : results) {
    os << status(r.status) << "  " << r.module << '.' << r.name;
    if (!r.detail.empty()) os << "  (" << r.detail << ')';
    os << '\n';
    if (r.status == CheckStatus::Fail) ++failed;
  }
  os << results.size() - static_cast<std::size_t>(failed) << '/' << results.size() << " checks passed\n";
  return os.str();
}

}  // namespace skeinrep
