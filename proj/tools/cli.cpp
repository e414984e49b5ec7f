#include "cli.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <future>
#include <optional>
#include <random>
#include <sstream>
#include <thread>

#include "modkit/duality.hpp"
#include "modkit/errors.hpp"
#include "modkit/json_io.hpp"
#include "modkit/matching.hpp"
#include "modkit/oracles.hpp"
#include "modkit/probability.hpp"
#include "modkit/reference.hpp"

namespace modkit::cli {

namespace {

struct IoError : Error {
  using Error::Error;
};
struct GuardError : Error {
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << text;
  if (!out) throw IoError("error writing '" + path + "'");
}

struct GraphSource {
  std::string file;
  std::string standard;

  void add(CLI::App* cmd) {
    auto* f = cmd->add_option("--graph", file, "edge list (or .json) graph file");
    auto* s = cmd->add_option("--std", standard, "standard graph kind:n, e.g. cycle:6");
    f->excludes(s);
    s->excludes(f);
  }

  Graph load() const {
    if (!standard.empty()) return make_standard(standard);
    if (file.empty()) throw DomainError("one of --graph or --std is required");
    std::string text = read_file(file);
    if (file.size() >= 5 && file.compare(file.size() - 5, 5, ".json") == 0) {
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(text);
      } catch (const nlohmann::json::exception& e) {
        throw ParseError(e.what());
      }
      return graph_from_json(j);
    }
    return parse_graph(text);
  }
};

double default_tolerance() {
  if (const char* env = std::getenv("MODKIT_TOL")) {
    char* end = nullptr;
    double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v > 0.0)) {
      throw DomainError(std::string("MODKIT_TOL must be a positive number, got '") + env + "'");
    }
    return v;
  }
  return kDefaultTolerance;
}

std::string full(double x) { return fmt::format("{:.17g}", x); }

// compute

struct ComputeConfig {
  GraphSource source;
  std::string family;
  double p = 2.0;
  std::optional<double> tol;
  std::string out_path;
  std::string format = "json";
};

std::string compute_csv(const Graph& g, double modulus, double p, const EdgeVector& rho,
                        const std::vector<UsageRow>& active, const std::vector<double>& lambda) {
  std::string csv = "quantity,key,value\n";
  csv += "modulus,," + full(modulus) + "\n";
  csv += "p,," + full(p) + "\n";
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    csv += "rho," + g.edge_label(static_cast<EdgeIndex>(e)) + "," + full(rho[e]) + "\n";
  }
  for (std::size_t i = 0; i < active.size(); ++i) {
    csv += "lambda,\"" + active[i].label + "\"," + full(lambda[i]) + "\n";
  }
  return csv;
}

int cmd_compute(const ComputeConfig& c, std::ostream& out) {
  Graph g = c.source.load();
  const double tol = c.tol ? *c.tol : default_tolerance();
  ObjectFamily family = parse_object_family(c.family);
  double modulus = 0.0;
  std::string payload;
  if (family == ObjectFamily::FractionalCover) {
    DualResult r = fec_modulus_via_stars(g, c.p, tol);
    modulus = r.primal_modulus;
    if (c.format == "csv") {
      payload = compute_csv(g, modulus, c.p, r.eta_star, r.star_result.active_rows,
                            r.star_result.lambda);
    } else {
      nlohmann::json j = to_json(g, r);
      j["family"] = "fec";
      j["expected_usage"] =
          edge_map(g, optimal_edge_usage(r.eta_star, c.p, g.sigma(), modulus));
      payload = j.dump(2) + "\n";
    }
  } else {
    FamilyOracle fam = family == ObjectFamily::Star ? star_family(g) : edge_cover_family(g);
    ModulusResult r = basic_algorithm(fam, c.p, tol);
    modulus = r.modulus;
    if (c.format == "csv") {
      payload = compute_csv(g, modulus, c.p, r.rho_star, r.active_rows, r.lambda);
    } else {
      nlohmann::json j = to_json(g, r);
      j["family"] = fam.name();
      Pmf pmf = pmf_from_result(r);
      j["pmf"] = to_json(g, pmf, expected_edge_usage(pmf, r.active_rows));
      payload = j.dump(2) + "\n";
    }
  }
  if (!c.out_path.empty()) write_file(c.out_path, payload);
  out << fmt::format("{:.6f}\n", modulus);
  return 0;
}

// experiment barbell

struct BarbellRow {
  int n = 0;
  double mod_ec = 0.0, mod_fec = 0.0, usage_ec = 0.0, usage_fec = 0.0;
  std::string status = "ok";
};

BarbellRow barbell_row(int n, double tol) {
  BarbellRow row;
  row.n = n;
  try {
    Graph g = make_standard(StandardKind::Barbell, n);
    EdgeIndex bridge = barbell_bridge(g, n);
    ModulusResult ec = basic_algorithm(edge_cover_family(g), 2.0, tol);
    row.mod_ec = ec.modulus;
    row.usage_ec = expected_edge_usage(pmf_from_result(ec), ec.active_rows)[bridge];
    DualResult fec = fec_modulus_via_stars(g, 2.0, tol);
    row.mod_fec = fec.primal_modulus;
    row.usage_fec = optimal_edge_usage(fec.eta_star, 2.0, g.sigma(), fec.primal_modulus)[bridge];
  } catch (const Error& e) {
    row.status = std::string("failed: ") + e.what();
  }
  return row;
}

int cmd_barbell(int n_min, int n_max, const std::string& out_path, std::optional<double> tol_flag,
                std::ostream& out) {
  if (!(3 <= n_min && n_min <= n_max && n_max <= 30)) {
    throw DomainError("need 3 <= n-min <= n-max <= 30");
  }
  const double tol = tol_flag ? *tol_flag : default_tolerance();
  const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  std::vector<BarbellRow> rows;
  for (int start = n_min; start <= n_max; start += static_cast<int>(workers)) {
    std::vector<std::future<BarbellRow>> batch;
    for (int n = start; n <= n_max && n < start + static_cast<int>(workers); ++n) {
      batch.push_back(std::async(std::launch::async, barbell_row, n, tol));
    }
    for (auto& f : batch) rows.push_back(f.get());
  }
  std::string csv = "n,mod_ec,mod_fec,ratio,bridge_usage_ec,bridge_usage_fec,status\n";
  bool failed = false;
  for (const auto& r : rows) {
    if (r.status != "ok") {
      failed = true;
      csv += fmt::format("{},,,,,,\"{}\"\n", r.n, r.status);
      continue;
    }
    csv += fmt::format("{},{},{},{},{},{},ok\n", r.n, full(r.mod_ec), full(r.mod_fec),
                       full(r.mod_ec / r.mod_fec), full(r.usage_ec), full(r.usage_fec));
  }
  if (out_path.empty()) {
    out << csv;
  } else {
    write_file(out_path, csv);
    for (const auto& r : rows) {
      if (r.status == "ok") {
        out << fmt::format("n={:2d}  ec {:.6f}  fec {:.6f}  ratio {:.6f}  bridge ec {:.6f} fec {:.6f}\n",
                           r.n, r.mod_ec, r.mod_fec, r.mod_ec / r.mod_fec, r.usage_ec,
                           r.usage_fec);
      } else {
        out << fmt::format("n={:2d}  {}\n", r.n, r.status);
      }
    }
  }
  return failed ? 1 : 0;
}

// verify

class Checker {
 public:
  explicit Checker(std::ostream& out) : out_(out) {}

  void relative(const std::string& name, double expected, double actual, double tol) {
    bool ok = std::abs(actual - expected) <= tol * std::abs(expected);
    report(ok, fmt::format("{}: expected {:.10g}, actual {:.10g}, relative tolerance {:g}", name,
                           expected, actual, tol));
  }
  void absolute(const std::string& name, double expected, double actual, double tol) {
    bool ok = std::abs(actual - expected) <= tol;
    report(ok, fmt::format("{}: expected {:.10g}, actual {:.10g}, absolute tolerance {:g}", name,
                           expected, actual, tol));
  }
  void equal(const std::string& name, long long expected, long long actual) {
    report(expected == actual, fmt::format("{}: expected {}, actual {}", name, expected, actual));
  }
  void guard(const std::string& name, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      report(false, name + ": " + e.what());
    }
  }

  int failures() const { return failures_; }
  int total() const { return total_; }

 private:
  void report(bool ok, const std::string& line) {
    ++total_;
    if (!ok) ++failures_;
    out_ << (ok ? "PASS " : "FAIL ") << line << "\n";
  }

  std::ostream& out_;
  int total_ = 0;
  int failures_ = 0;
};

Graph random_bipartite(std::mt19937& rng, int a, int b) {
  std::bernoulli_distribution coin(0.5);
  std::uniform_real_distribution<double> weight(0.5, 2.0);
  std::vector<std::string> names;
  for (int i = 0; i < a + b; ++i) names.push_back(std::to_string(i));
  std::vector<Edge> edges;
  std::vector<int> degree(a + b, 0);
  for (int i = 0; i < a; ++i) {
    for (int j = a; j < a + b; ++j) {
      if (coin(rng)) {
        edges.push_back({i, j});
        ++degree[i];
        ++degree[j];
      }
    }
  }
  for (int v = 0; v < a + b; ++v) {
    if (degree[v] > 0) continue;
    Edge e = v < a ? Edge{v, a} : Edge{0, v};
    edges.push_back(e);
    ++degree[e.u];
    ++degree[e.v];
  }
  EdgeVector sigma;
  for (std::size_t e = 0; e < edges.size(); ++e) sigma.push_back(weight(rng));
  return Graph(names, edges, sigma);
}

int cmd_verify(const std::string& scope, std::optional<double> tol_flag, std::ostream& out) {
  const bool full_scope = scope == "full";
  const double tol = tol_flag ? *tol_flag : default_tolerance();
  Checker check(out);

  const int n_max = full_scope ? 10 : 8;
  std::vector<StandardKind> kinds{StandardKind::Star, StandardKind::Cycle, StandardKind::Complete};
  if (full_scope) {
    kinds.push_back(StandardKind::Path);
    kinds.push_back(StandardKind::Wheel);
  }
  for (const auto& entry : oracle_table(3, n_max)) {
    if (entry.quantity != "modulus") continue;
    if (std::find(kinds.begin(), kinds.end(), entry.kind) == kinds.end()) continue;
    std::string name = fmt::format("closed form {}:{} {}", to_string(entry.kind), entry.n,
                                   to_string(entry.family));
    check.guard(name, [&] {
      Graph g = make_standard(entry.kind, entry.n);
      double got = 0.0;
      switch (entry.family) {
        case ObjectFamily::Star:
          got = basic_algorithm(star_family(g), 2.0, tol).modulus;
          break;
        case ObjectFamily::EdgeCover:
          got = basic_algorithm(edge_cover_family(g), 2.0, tol).modulus;
          break;
        case ObjectFamily::FractionalCover:
          got = fec_modulus_via_stars(g, 2.0, tol).primal_modulus;
          break;
      }
      check.relative(name, to_double(entry.value), got, 1e-6);
    });
  }

  for (StandardKind kind : {StandardKind::Cycle, StandardKind::Complete, StandardKind::Wheel}) {
    for (int n = 4; n <= n_max; n += full_scope ? 1 : 2) {
      Graph g = make_standard(kind, n);
      std::string name = fmt::format("duality product {}:{}", to_string(kind), n);
      auto r = verify_reciprocal(g, star_family(g), reference_fec_family(g), 2.0, g.sigma(), tol);
      if (!r.error.empty()) {
        check.guard(name, [&] { throw SolverError(r.error); });
      } else {
        check.absolute(name, 1.0, r.product, 1e-6);
      }
    }
  }

  if (full_scope) {
    check.equal("basic fec count wheel:5", 25,
                static_cast<long long>(enumerate_basic_fecs(make_standard("wheel:5")).size()));
    check.equal("basic fec count wheel:6", 36,
                static_cast<long long>(enumerate_basic_fecs(make_standard("wheel:6")).size()));
    check.equal("minimal cover count complete:4", 7,
                static_cast<long long>(enumerate_minimal_edge_covers(make_standard("complete:4")).size()));

    std::mt19937 rng(20170);
    for (int t = 0; t < 10; ++t) {
      Graph g = random_bipartite(rng, 2 + t % 3, 3 + t % 4);
      std::string name = fmt::format("bipartite ec = fec #{}", t);
      check.guard(name, [&] {
        double ec = basic_algorithm(edge_cover_family(g), 2.0, tol).modulus;
        double fec = fec_modulus_via_stars(g, 2.0, tol).primal_modulus;
        check.relative(name, fec, ec, 1e-6);
      });
    }

    for (const char* spec : {"cycle:5", "wheel:5", "wheel:6", "complete:5", "path:6"}) {
      Graph g = make_standard(spec);
      std::string name = fmt::format("enumerated fec rows vs duality {}", spec);
      check.guard(name, [&] {
        std::vector<UsageRow> rows;
        for (const auto& f : enumerate_basic_fecs(g)) rows.push_back({f.usage, vector_label(f.usage)});
        double direct = basic_algorithm(explicit_family(g, "bfec", rows), 2.0, tol).modulus;
        check.relative(name, fec_modulus_via_stars(g, 2.0, tol).primal_modulus, direct, 1e-6);
      });
    }

    std::uniform_real_distribution<double> w(0.0, 10.0);
    for (int t = 0; t < 30; ++t) {
      int n = 4 + 2 * (t % 4);
      std::vector<std::string> names;
      std::vector<Edge> edges;
      for (int i = 0; i < n; ++i) {
        names.push_back(std::to_string(i));
        for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
      }
      Graph g(names, edges, EdgeVector(edges.size(), 1.0));
      EdgeVector weights(edges.size());
      for (double& x : weights) x = w(rng);
      std::string name = fmt::format("matching vs brute force #{}", t);
      check.guard(name, [&] {
        double fast = min_weight_perfect_matching(g, weights).weight;
        double slow = brute_force_mwpm(g, weights).weight;
        check.absolute(name, slow, fast, 1e-9);
      });
    }
  }

  out << fmt::format("{} checks, {} failed\n", check.total(), check.failures());
  return check.failures() == 0 ? 0 : 1;
}

// enumerate

int cmd_enumerate(const std::string& what, const GraphSource& source, const std::string& out_path,
                  std::ostream& out) {
  Graph g = source.load();
  nlohmann::json j;
  try {
    if (what == "min-covers") {
      j = min_covers_to_json(g, enumerate_minimal_edge_covers(g));
    } else {
      j = basic_fecs_to_json(g, enumerate_basic_fecs(g));
    }
  } catch (const DomainError& e) {
    throw GuardError(e.what());
  }
  if (out_path.empty()) {
    out << j.dump(2) << "\n";
  } else {
    write_file(out_path, j.dump(2) + "\n");
    out << j.size() << "\n";
  }
  return 0;
}

// oracle dump

int cmd_oracle_dump(int n_min, int n_max, const std::string& out_path, std::ostream& out) {
  std::string csv = "quantity,kind,n,family,p,numerator,denominator,value\n";
  for (const auto& e : oracle_table(n_min, n_max)) {
    csv += fmt::format("{},{},{},{},{},{},{},{}\n", e.quantity, to_string(e.kind), e.n,
                       to_string(e.family), e.p, e.value.numerator(), e.value.denominator(),
                       full(to_double(e.value)));
  }
  if (out_path.empty()) {
    out << csv;
  } else {
    write_file(out_path, csv);
  }
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Discrete p-modulus of stars, edge covers and fractional edge covers"};
  app.require_subcommand(1);

  ComputeConfig compute;
  auto* c = app.add_subcommand("compute", "compute a modulus");
  compute.source.add(c);
  c->add_option("--family", compute.family, "stars | ec | fec")
      ->required()
      ->check(CLI::IsMember({"star", "stars", "ec", "fec"}));
  c->add_option("--p", compute.p, "exponent, 1 < p < inf")->required()->check(CLI::Range(1.0, 1e300));
  c->add_option("--tol", compute.tol, "constraint tolerance (default MODKIT_TOL or 1e-8)")
      ->check(CLI::PositiveNumber);
  c->add_option("--out", compute.out_path, "write the full result here");
  c->add_option("--format", compute.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));

  auto* experiment = app.add_subcommand("experiment", "reproduce an experiment as data");
  experiment->require_subcommand(1);
  auto* barbell = experiment->add_subcommand("barbell", "ec vs fec on n-barbells");
  int n_min = 3, n_max = 12;
  std::string barbell_out;
  std::optional<double> barbell_tol;
  barbell->add_option("--n-min", n_min, "smallest n (>= 3)");
  barbell->add_option("--n-max", n_max, "largest n (<= 30)");
  barbell->add_option("--out", barbell_out, "CSV output file");
  barbell->add_option("--tol", barbell_tol)->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "check the solver against known values");
  std::string scope = "quick";
  std::optional<double> verify_tol;
  verify->add_option("--scope", scope, "quick | full")->check(CLI::IsMember({"quick", "full"}));
  verify->add_option("--tol", verify_tol)->check(CLI::PositiveNumber);

  auto* enumerate = app.add_subcommand("enumerate", "list small families");
  std::string what;
  GraphSource enum_source;
  std::string enum_out;
  enumerate->add_option("--what", what, "min-covers | bfec")
      ->required()
      ->check(CLI::IsMember({"min-covers", "bfec"}));
  enum_source.add(enumerate);
  enumerate->add_option("--out", enum_out, "JSON output file");

  auto* oracle = app.add_subcommand("oracle", "closed-form values");
  oracle->require_subcommand(1);
  auto* dump = oracle->add_subcommand("dump", "print the oracle table as CSV");
  int dump_min = 3, dump_max = 10;
  std::string dump_out;
  dump->add_option("--n-min", dump_min);
  dump->add_option("--n-max", dump_max);
  dump->add_option("--out", dump_out, "CSV output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (c->parsed()) {
      if (!(compute.p > 1.0)) throw DomainError("--p must be > 1");
      return cmd_compute(compute, out);
    }
    if (barbell->parsed()) return cmd_barbell(n_min, n_max, barbell_out, barbell_tol, out);
    if (verify->parsed()) return cmd_verify(scope, verify_tol, out);
    if (enumerate->parsed()) return cmd_enumerate(what, enum_source, enum_out, out);
    if (dump->parsed()) return cmd_oracle_dump(dump_min, dump_max, dump_out, out);
  } catch (const GuardError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const SolverError& e) {
    err << "solver error: " << e.what() << "\n";
    return 1;
  } catch (const Infeasible& e) {
    err << "infeasible: " << e.what() << "\n";
    return 1;
  } catch (const DegenerateResult& e) {
    err << "degenerate result: " << e.what() << "\n";
    return 1;
  } catch (const ParseError& e) {
    err << "parse error";
    if (e.line() > 0) err << " on line " << e.line();
    err << ": " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace modkit::cli
