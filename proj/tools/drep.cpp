/*
 * drep -- command-line laboratory for derived representation schemes:
 * presentation validation, representation homology, cyclic/stable/obstruction
 * complexes, zeta and Molien-Weyl series, combinatorial identities, matrix
 * Lie homology, twisting cochains, de Rham tables, and the reproduction
 * suite.
 *
 * Exit codes: 0 success/pass, 1 verification failure, 2 usage error.
 */
#include <CLI11.hpp>

#include "drep/acceptance.hpp"
#include "drep/derham.hpp"
#include "drep/liekoszul.hpp"
#include "drep/series.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using namespace drep;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// Presentations come from files or from `builtin:<name>[:param]`.
DGAPresentation load_presentation(const std::string& source, int max_weight) {
  if (source.rfind("builtin:", 0) == 0)
    return builtin_from_spec(source.substr(8), max_weight);
  return parse_presentation(slurp(source));
}

struct CacheConfig {
  std::string dir;   // empty = disabled
  bool enabled = true;
};

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

// Serves `compute()` through the cache when a directory is configured.
std::string cached(const CacheConfig& cache, const std::string& key,
                   const std::function<std::string()>& compute) {
  if (!cache.enabled || cache.dir.empty()) return compute();
  std::ostringstream name;
  name << std::hex << fnv1a(key) << ".json";
  fs::path path = fs::path(cache.dir) / name.str();
  if (fs::exists(path)) {
    try {
      std::string blob = slurp(path.string());
      if (!blob.empty()) return blob;
      std::cerr << "warning: empty cache entry " << path << "; recomputing\n";
    } catch (const std::exception&) {
      std::cerr << "warning: unreadable cache entry " << path << "; recomputing\n";
    }
  }
  std::string blob = compute();
  std::error_code ec;
  fs::create_directories(cache.dir, ec);
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << blob;
  }
  fs::rename(tmp, path, ec);  // first writer wins; losers overwrite equal bytes
  return blob;
}

std::string series_json(const PowerSeries& s, int T, bool verified,
                        std::optional<int> mismatch) {
  std::ostringstream os;
  os << "{\"coefficients\": [";
  for (int k = 0; k <= T; ++k)
    os << (k ? ", " : "") << "\"" << scalar_str(s.coeff1(k)) << "\"";
  os << "], \"verified\": " << (verified ? "true" : "false")
     << ", \"first_mismatch\": ";
  if (mismatch)
    os << *mismatch;
  else
    os << "null";
  os << "}";
  return os.str();
}

std::string render_betti(const BettiTable& b, const std::string& format,
                         std::vector<std::pair<std::string, std::string>> meta) {
  if (format == "table") return betti_grid(b);
  return betti_json(b, std::move(meta)) + "\n";
}

std::string jstr(const std::string& s) { return "\"" + s + "\""; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"derived representation scheme laboratory"};
  app.require_subcommand(1);

  CacheConfig cache;
  std::string cache_dir_flag;
  bool no_cache = false;
  int jobs = 2;
  app.add_option("--cache-dir", cache_dir_flag, "result cache directory");
  app.add_flag("--no-cache", no_cache, "disable the result cache");
  app.add_option("--jobs", jobs, "parallel cell workers")->check(CLI::PositiveNumber);

  // Common per-command state.
  std::string source, format = "json", which, algebra = "dual-numbers",
              example = "dual-numbers";
  int max_weight = 4, n = 1, terms = 10, max_n = 3, alphabet = 2, max_len = 8,
      r_size = 1, max_wedge = 4, max_degree = 6, criterion = -1;
  bool invariants = false, trains = false, commutative = false, stable = false;
  long cell_budget = kDefaultCellBudget;
  app.add_option("--cell-budget", cell_budget, "monomial budget per cell");

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "json|table")
        ->check(CLI::IsMember({"json", "table"}));
  };

  auto* check = app.add_subcommand("check", "validate a presentation file");
  check->add_option("file", source)->required();
  check->add_option("--max-weight", max_weight);

  auto* rep = app.add_subcommand("rep", "emit R_n as a presentation file");
  rep->add_option("file", source)->required();
  rep->add_option("-n", n)->required();
  rep->add_option("--max-weight", max_weight);

  auto* homology = app.add_subcommand("homology", "Betti table of R_n");
  homology->add_option("file", source)->required();
  homology->add_option("-n", n)->required();
  homology->add_option("--max-weight", max_weight)->required();
  homology->add_flag("--invariants", invariants, "GL-invariant part");
  add_format(homology);

  auto* cyclic = app.add_subcommand("cyclic", "Betti table of C(R)");
  cyclic->add_option("file", source)->required();
  cyclic->add_option("--max-weight", max_weight)->required();
  add_format(cyclic);

  auto* stablecmd = app.add_subcommand("stable", "Betti table of Lambda[C(R)]");
  stablecmd->add_option("file", source)->required();
  stablecmd->add_option("--max-weight", max_weight)->required();
  add_format(stablecmd);

  auto* obstruction = app.add_subcommand("obstruction", "Betti table of K(A,n)");
  obstruction->add_option("file", source)->required();
  obstruction->add_option("-n", n)->required();
  obstruction->add_option("--max-weight", max_weight)->required();
  add_format(obstruction);

  auto* stabilize = app.add_subcommand("stabilize", "stabilization scan");
  stabilize->add_option("file", source)->required();
  stabilize->add_option("--max-weight", max_weight)->required();
  stabilize->add_option("--max-n", max_n)->required();
  add_format(stabilize);

  auto* zeta = app.add_subcommand("zeta", "zeta series of a census");
  zeta->add_option("file", source)->required();
  zeta->add_option("--terms", terms)->required();
  zeta->add_flag("--trains", trains, "use the m-train expansion (truncated:m)");

  auto* molien = app.add_subcommand("molien", "Molien-Weyl invariant Euler series");
  molien->add_option("file", source)->required();
  molien->add_option("-n", n)->required();
  molien->add_option("--terms", terms)->required();

  auto* identities = app.add_subcommand("identities", "verify q-series identities");
  identities->add_option("--which", which, "cid1|cid2:m|cidd:d|cidd1:d")->required();
  identities->add_option("--terms", terms)->required();

  auto* necklace = app.add_subcommand("necklace", "necklace and Witt counts");
  necklace->add_option("--alphabet", alphabet)->required();
  necklace->add_option("--max-len", max_len)->required();

  auto* ce = app.add_subcommand("ce", "Chevalley-Eilenberg invariant table");
  ce->add_option("--algebra", algebra, "dual-numbers|square-zero:d|truncated:m");
  ce->add_option("-r", r_size)->required();
  ce->add_option("--max-wedge", max_wedge)->required();
  ce->add_option("--max-weight", max_weight)->required();
  add_format(ce);

  auto* twist = app.add_subcommand("twist", "MC status and twisted-tensor table");
  twist->add_option("--example", example, "dual-numbers only");
  twist->add_option("-n", n)->required();
  twist->add_option("-r", r_size)->required();
  twist->add_option("--max-degree", max_degree)->required();
  twist->add_option("--max-weight", max_weight);

  auto* derham = app.add_subcommand("derham", "(reduced/stable) de Rham tables");
  derham->add_option("file", source)->required();
  derham->add_option("--max-weight", max_weight)->required();
  derham->add_flag("--commutative", commutative, "DR(R_n) instead of forms of R");
  derham->add_option("-n", n);
  derham->add_flag("--stable", stable, "stable table Lambda[C(forms)]");
  add_format(derham);

  auto* reproduce = app.add_subcommand("reproduce", "run the acceptance suite");
  std::string suite = "paper";
  reproduce->add_option("--suite", suite)->check(CLI::IsMember({"paper"}));
  reproduce->add_option("--criterion", criterion, "run a single criterion");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  cache.enabled = !no_cache;
  cache.dir = cache_dir_flag;
  if (cache.dir.empty()) {
    const char* env = std::getenv("DREP_CACHE");
    if (env) cache.dir = env;
  }

  try {
    if (app.got_subcommand(check)) {
      DGAPresentation p = load_presentation(source, max_weight);
      if (p.census_only) {
        std::cout << "census-only presentation; nothing to validate\n";
        return 0;
      }
      auto rep_ = verify_d_squared(p, max_weight);
      std::cout << "generators: " << p.tab.size() << "\n";
      auto census = weight_census(p);
      std::cout << "census:";
      for (auto& [w, d] : census) std::cout << " d_" << w << "=" << d;
      std::cout << "\n";
      if (rep_.pass()) {
        std::cout << "d^2 = 0 up to weight " << max_weight << ": OK\n";
        return 0;
      }
      for (auto& v : rep_.violations) std::cout << "violation: " << v << "\n";
      return 1;
    }

    if (app.got_subcommand(rep)) {
      DGAPresentation p = load_presentation(source, max_weight);
      std::cout << serialize_matrix_algebra(rep_n(p, n));
      return 0;
    }

    if (app.got_subcommand(homology)) {
      DGAPresentation p = load_presentation(source, max_weight);
      std::string key = "homology|" + presentation_digest(p) + "|n=" +
                        std::to_string(n) + "|w=" + std::to_string(max_weight) +
                        "|inv=" + std::to_string(invariants) + "|" + format;
      std::cout << cached(cache, key, [&] {
        BettiTable b = invariants
                           ? betti(invariant_subcomplex(p, n, max_weight,
                                                        cell_budget, jobs)
                                       .complex)
                           : betti(full_complex(rep_n(p, n), max_weight,
                                                cell_budget));
        return render_betti(b, format,
                            {{"command", jstr("homology")},
                             {"n", std::to_string(n)},
                             {"max_weight", std::to_string(max_weight)},
                             {"invariants", invariants ? "true" : "false"},
                             {"digest", jstr(presentation_digest(p))}});
      });
      return 0;
    }

    if (app.got_subcommand(cyclic)) {
      DGAPresentation p = load_presentation(source, max_weight);
      std::string key = "cyclic|" + presentation_digest(p) + "|w=" +
                        std::to_string(max_weight) + "|" + format;
      std::cout << cached(cache, key, [&] {
        BettiTable b = betti(cyclic_complex(p, max_weight).complex);
        return render_betti(b, format,
                            {{"command", jstr("cyclic")},
                             {"max_weight", std::to_string(max_weight)},
                             {"digest", jstr(presentation_digest(p))}});
      });
      return 0;
    }

    if (app.got_subcommand(stablecmd)) {
      DGAPresentation p = load_presentation(source, max_weight);
      std::string key = "stable|" + presentation_digest(p) + "|w=" +
                        std::to_string(max_weight) + "|" + format;
      std::cout << cached(cache, key, [&] {
        BettiTable b = betti(stable_complex(p, max_weight).complex);
        return render_betti(b, format,
                            {{"command", jstr("stable")},
                             {"max_weight", std::to_string(max_weight)},
                             {"digest", jstr(presentation_digest(p))}});
      });
      return 0;
    }

    if (app.got_subcommand(obstruction)) {
      DGAPresentation p = load_presentation(source, max_weight);
      std::string key = "obstruction|" + presentation_digest(p) + "|n=" +
                        std::to_string(n) + "|w=" + std::to_string(max_weight) +
                        "|" + format;
      std::cout << cached(cache, key, [&] {
        BettiTable b = betti(
            obstruction_complex(p, n, max_weight, cell_budget, jobs).complex);
        return render_betti(b, format,
                            {{"command", jstr("obstruction")},
                             {"n", std::to_string(n)},
                             {"max_weight", std::to_string(max_weight)},
                             {"digest", jstr(presentation_digest(p))}});
      });
      return 0;
    }

    if (app.got_subcommand(stabilize)) {
      DGAPresentation p = load_presentation(source, max_weight);
      StabilityTable t =
          empirical_stability(p, max_weight, max_n, cell_budget, jobs);
      std::ostringstream os;
      os << "{\"stable_reached\": {";
      bool first = true;
      for (auto& [w, least] : t.least_n) {
        os << (first ? "" : ", ") << "\"" << w << "\": ";
        if (least)
          os << *least;
        else
          os << "null";
        first = false;
      }
      os << "}}";
      if (format == "table") {
        std::cout << "w\tleast n with stable invariant homology\n";
        for (auto& [w, least] : t.least_n)
          std::cout << w << "\t" << (least ? std::to_string(*least) : "not reached")
                    << "\n";
      } else {
        std::cout << os.str() << "\n";
      }
      return 0;
    }

    if (app.got_subcommand(zeta)) {
      DGAPresentation p = load_presentation(source, terms);
      p.require_weight(terms);  // partial presentations must not truncate silently
      PowerSeries s;
      if (trains) {
        if (p.name.rfind("k[x]/", 0) != 0 || !p.census_only)
          throw std::invalid_argument("--trains requires builtin:truncated:m");
        // recover m from the spec string
        auto colon = source.rfind(':');
        int m = std::stoi(source.substr(colon + 1));
        s = zeta_trains(m, terms);
      } else {
        s = zeta_closed(weight_census(p), terms);
      }
      std::cout << series_json(s, terms, true, std::nullopt) << "\n";
      return 0;
    }

    if (app.got_subcommand(molien)) {
      DGAPresentation p = load_presentation(source, terms);
      p.require_weight(terms);
      PowerSeries s = molien_weyl(weight_census(p), n, terms);
      std::cout << series_json(s, terms, true, std::nullopt) << "\n";
      return 0;
    }

    if (app.got_subcommand(identities)) {
      std::string name = which;
      int param = 0;
      auto colon = which.find(':');
      if (colon != std::string::npos) {
        name = which.substr(0, colon);
        param = std::stoi(which.substr(colon + 1));
      }
      IdentityResult r = verify_identity(name, param, terms);
      std::ostringstream os;
      os << "{\"identity\": \"" << which << "\", \"verified\": "
         << (r.pass ? "true" : "false") << ", \"first_mismatch\": ";
      if (r.first_mismatch)
        os << *r.first_mismatch;
      else
        os << "null";
      os << "}";
      std::cout << os.str() << "\n";
      return r.pass ? 0 : 1;
    }

    if (app.got_subcommand(necklace)) {
      NecklaceCounts c = necklace_counts(alphabet, max_len);
      std::ostringstream os;
      os << "{\"phi\": [";
      for (int r = 1; r <= max_len; ++r) os << (r > 1 ? ", " : "") << c.phi[r];
      os << "], \"moebius\": [";
      for (int r = 1; r <= max_len; ++r) os << (r > 1 ? ", " : "") << c.mob[r];
      os << "], \"verified\": true, \"first_mismatch\": null}";
      std::cout << os.str() << "\n";
      return 0;
    }

    if (app.got_subcommand(ce)) {
      FiniteGradedAlgebra A = algebra_from_spec(algebra);
      CEData data = ce_complex(A, r_size, max_wedge, max_weight);
      BettiTable b = betti(data.invariant_complex);
      std::cout << render_betti(b, format,
                                {{"command", jstr("ce")},
                                 {"algebra", jstr(algebra)},
                                 {"r", std::to_string(r_size)}});
      return 0;
    }

    if (app.got_subcommand(twist)) {
      if (example != "dual-numbers")
        throw std::invalid_argument("only --example dual-numbers is built in");
      if (max_weight < max_degree) max_weight = max_degree;
      DGAPresentation p = builtin_resolution("dual-numbers", 0, max_weight);
      FiniteGradedAlgebra A = FiniteGradedAlgebra::dual_numbers();
      BarCochain f = dual_numbers_cochain(p, max_weight);
      MCReport mc = verify_tau_rn(A, r_size, n, p, f, max_degree, max_weight);
      std::cout << "MC residual (tau_{" << r_size << "," << n
                << "}): " << (mc.pass() ? "zero" : "NONZERO") << " on "
                << mc.checked << " wedges\n";
      TruncatedComplex tc =
          ce_twisted_tensor(A, r_size, n, p, f, max_degree, max_weight);
      std::cout << "twisted tensor homology (exploratory):\n"
                << betti_grid(betti(tc));
      return mc.pass() ? 0 : 1;
    }

    if (app.got_subcommand(derham)) {
      DGAPresentation p = load_presentation(source, max_weight);
      BettiTable b;
      std::string kind;
      if (commutative) {
        CommPresentation dr = comm_derham(comm_view(rep_n(p, n)));
        b = betti(comm_full_complex(dr, max_weight, cell_budget));
        kind = "DR(R_n)";
      } else if (stable) {
        b = stable_derham(p, max_weight);
        kind = "stable";
      } else {
        b = reduced_hdr(p, max_weight);
        kind = "reduced";
      }
      std::cout << render_betti(b, format,
                                {{"command", jstr("derham")},
                                 {"kind", jstr(kind)},
                                 {"max_weight", std::to_string(max_weight)}});
      return 0;
    }

    if (app.got_subcommand(reproduce)) {
      auto results = run_paper_suite(criterion, jobs);
      std::cout << format_scoreboard(results);
      for (const auto& r : results)
        if (!r.pass) return 1;
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
