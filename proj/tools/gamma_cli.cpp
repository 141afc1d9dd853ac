// Command-line front end: transforms with operation accounting,
// count verification, preconditioner construction, cluster reports and
// solver runs.  All results land in files so scripts and CI can diff them.
//
// Exit codes: 0 success; 1 unreadable or malformed file; 2 invalid order or
// parameter; 3 operation-count mismatch; 4 oracle deviation or singular /
// indefinite matrix; 5 solver did not converge.

#include <chrono>
#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gmat/fast_transforms.hpp"
#include "gmat/gamma_algebra.hpp"
#include "gmat/pcg_solver.hpp"
#include "gmat/toeplitz_precond.hpp"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFile = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitCountMismatch = 3;
constexpr int kExitOracle = 4;
constexpr int kExitNoConvergence = 5;

struct FileError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// One real per line; "# n=<order>" header and other #-comments allowed.
std::vector<double> read_vector_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FileError("cannot open " + path);
  std::vector<double> values;
  std::optional<long> declared;
  std::string line;
  while (std::getline(in, line)) {
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == '#') {
      // only the "# n=<order>" header declares a length; other comments pass
      std::size_t pos = line.find_first_not_of(" \t", start + 1);
      if (pos != std::string::npos && line.compare(pos, 2, "n=") == 0) {
        char* end = nullptr;
        const long n = std::strtol(line.c_str() + pos + 2, &end, 10);
        if (end != line.c_str() + pos + 2) declared = n;
      }
      continue;
    }
    char* end = nullptr;
    const double v = std::strtod(line.c_str() + start, &end);
    if (end == line.c_str() + start) throw FileError("malformed number in " + path + ": " + line);
    while (*end == ' ' || *end == '\t' || *end == '\r') ++end;
    if (*end != '\0') throw FileError("trailing characters in " + path + ": " + line);
    values.push_back(v);
  }
  if (values.empty()) throw FileError("no values in " + path);
  if (declared && *declared != static_cast<long>(values.size())) {
    throw FileError("header declares n=" + std::to_string(*declared) + " but " + path +
                    " holds " + std::to_string(values.size()) + " values");
  }
  return values;
}

void write_vector_file(const std::string& path, const std::vector<double>& values,
                       const std::vector<std::string>& trailer = {}) {
  std::ofstream out(path);
  if (!out) throw FileError("cannot write " + path);
  out << "# n=" << values.size() << "\n";
  for (double v : values) out << format_double(v) << "\n";
  for (const std::string& line : trailer) out << line << "\n";
  if (!out) throw FileError("write failed for " + path);
}

void write_json_file(const std::string& path, const Json& doc) {
  std::ofstream out(path);
  if (!out) throw FileError("cannot write " + path);
  out << doc.dump(2) << "\n";
  if (!out) throw FileError("write failed for " + path);
}

double elapsed_ms(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since)
      .count();
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("GAMMA_SEED")) {
    return std::strtoull(env, nullptr, 10);
  }
  return 0;
}

int run_transform(const std::string& op, const std::string& in_path,
                  const std::string& out_path, bool with_counts) {
  const std::vector<double> x = read_vector_file(in_path);
  const int n = static_cast<int>(x.size());
  if (!gmat::is_fast_order(n)) {
    std::cerr << "gamma: transform needs a power-of-two length >= 4, got " << n << "\n";
    return kExitInvalid;
  }
  const gmat::TransformPlan plan(n);
  gmat::OpCounter total;
  const std::vector<double> y =
      op == "idsct" ? gmat::idsct(x, plan, total) : gmat::dsct(x, plan, total);

  std::vector<std::string> trailer;
  if (with_counts) {
    // Per-kernel accounting of the two recursive calls inside this
    // transform, next to the closed-form predictions.
    gmat::OpCounter cs_ctr, sn_ctr;
    gmat::cs(gmat::symmetrize(x), plan, cs_ctr);
    gmat::sn(gmat::antisymmetrize(x), plan, sn_ctr);
    const gmat::OpCounts cs_pred = gmat::predicted_counts_cs(n);
    const gmat::OpCounts sn_pred = gmat::predicted_counts_sn(n);
    const auto line = [](const char* label, std::uint64_t measured, std::int64_t predicted) {
      std::ostringstream os;
      os << "# counts " << label << " measured=" << measured << " predicted=" << predicted;
      return os.str();
    };
    trailer.push_back(line("cs_additions", cs_ctr.additions, cs_pred.additions));
    trailer.push_back(line("cs_multiplications", cs_ctr.multiplications, cs_pred.multiplications));
    trailer.push_back(line("sn_additions", sn_ctr.additions, sn_pred.additions));
    trailer.push_back(line("sn_multiplications", sn_ctr.multiplications, sn_pred.multiplications));
    {
      std::ostringstream os;
      os << "# counts transform_total additions=" << total.additions
         << " multiplications=" << total.multiplications;
      trailer.push_back(os.str());
    }
    // Two published leading-order matvec estimates, side by side.
    const gmat::AsymptoticCost pair_cost = gmat::matvec_cost_transform_pair(n);
    const gmat::AsymptoticCost pipe_cost = gmat::matvec_cost_full_pipeline(n);
    std::ostringstream os;
    os << "# matvec_additions_leading_order transform_pair=" << format_double(pair_cost.additions)
       << " full_pipeline=" << format_double(pipe_cost.additions);
    trailer.push_back(os.str());
  }
  write_vector_file(out_path, y, trailer);
  return kExitOk;
}

int run_verify_counts(int max_n, std::uint64_t seed) {
  if (!gmat::is_fast_order(max_n)) {
    std::cerr << "gamma: --max-n must be a power of two >= 4\n";
    return kExitInvalid;
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  bool all_ok = true;
  std::printf("%6s  %22s  %22s  %22s  %22s  %s\n", "n", "cs add (meas/pred)",
              "cs mul (meas/pred)", "sn add (meas/pred)", "sn mul (meas/pred)", "status");
  for (int n = 4; n <= max_n; n *= 2) {
    std::vector<double> raw(static_cast<std::size_t>(n));
    for (double& v : raw) v = unif(rng);
    const gmat::TransformPlan plan(n);
    gmat::OpCounter cs_ctr, sn_ctr;
    gmat::cs(gmat::symmetrize(raw), plan, cs_ctr);
    gmat::sn(gmat::antisymmetrize(raw), plan, sn_ctr);
    const gmat::OpCounts cs_pred = gmat::predicted_counts_cs(n);
    const gmat::OpCounts sn_pred = gmat::predicted_counts_sn(n);
    const bool ok = cs_ctr.additions == static_cast<std::uint64_t>(cs_pred.additions) &&
                    cs_ctr.multiplications == static_cast<std::uint64_t>(cs_pred.multiplications) &&
                    sn_ctr.additions == static_cast<std::uint64_t>(sn_pred.additions) &&
                    sn_ctr.multiplications == static_cast<std::uint64_t>(sn_pred.multiplications);
    all_ok = all_ok && ok;
    char cs_add[32], cs_mul[32], sn_add[32], sn_mul[32];
    std::snprintf(cs_add, sizeof cs_add, "%" PRIu64 "/%lld", cs_ctr.additions,
                  static_cast<long long>(cs_pred.additions));
    std::snprintf(cs_mul, sizeof cs_mul, "%" PRIu64 "/%lld", cs_ctr.multiplications,
                  static_cast<long long>(cs_pred.multiplications));
    std::snprintf(sn_add, sizeof sn_add, "%" PRIu64 "/%lld", sn_ctr.additions,
                  static_cast<long long>(sn_pred.additions));
    std::snprintf(sn_mul, sizeof sn_mul, "%" PRIu64 "/%lld", sn_ctr.multiplications,
                  static_cast<long long>(sn_pred.multiplications));
    std::printf("%6d  %22s  %22s  %22s  %22s  %s\n", n, cs_add, cs_mul, sn_add, sn_mul,
                ok ? "ok" : "MISMATCH");
  }
  return all_ok ? kExitOk : kExitCountMismatch;
}

int run_precond(const std::string& toeplitz_path, const std::string& out_path,
                bool oracle_check) {
  const auto t0 = std::chrono::steady_clock::now();
  const gmat::SymToeplitz T =
      gmat::SymToeplitz::from_first_column(read_vector_file(toeplitz_path));
  Json doc;
  doc["command"] = "precond";
  doc["n"] = T.n;
  int code = kExitOk;
  try {
    const gmat::GammaMatrix G = gmat::gamma_approx(T);
    doc["c"] = G.circulant_first_row();
    doc["b"] = G.reverse_first_row();
    if (oracle_check) {
      if (T.n > 128) {
        std::cerr << "gamma: --oracle-check is limited to n <= 128\n";
        return kExitInvalid;
      }
      const gmat::GammaMatrix oracle = gmat::frobenius_projection_oracle(T);
      double worst = 0.0;
      for (int j = 0; j < T.n; ++j) {
        worst = std::max(worst, std::abs(G.circulant_first_row()[static_cast<std::size_t>(j)] -
                                         oracle.circulant_first_row()[static_cast<std::size_t>(j)]));
        worst = std::max(worst, std::abs(G.reverse_first_row()[static_cast<std::size_t>(j)] -
                                         oracle.reverse_first_row()[static_cast<std::size_t>(j)]));
      }
      doc["oracle_check"]["max_component_deviation"] = worst;
      if (worst > 1e-8) {
        doc["oracle_check"]["oracle_c"] = oracle.circulant_first_row();
        doc["oracle_check"]["oracle_b"] = oracle.reverse_first_row();
        std::cerr << "gamma: formula/oracle deviation " << worst << " exceeds 1e-8\n";
        code = kExitOracle;
      }
    }
  } catch (const gmat::FormulaDiscrepancyError& e) {
    doc["formula_discrepancy"]["message"] = e.what();
    doc["formula_discrepancy"]["formula_c"] = e.formula_c();
    doc["formula_discrepancy"]["formula_b"] = e.formula_b();
    doc["formula_discrepancy"]["oracle_c"] = e.oracle_c();
    doc["formula_discrepancy"]["oracle_b"] = e.oracle_b();
    std::cerr << "gamma: " << e.what() << "\n";
    code = kExitOracle;
  }
  doc["timings_ms"] = elapsed_ms(t0);
  write_json_file(out_path, doc);
  return code;
}

int run_spectrum(const std::string& toeplitz_path, double epsilon, const std::string& out_path) {
  if (epsilon <= 0.0) {
    std::cerr << "gamma: --epsilon must be positive\n";
    return kExitInvalid;
  }
  const auto t0 = std::chrono::steady_clock::now();
  const gmat::SymToeplitz T =
      gmat::SymToeplitz::from_first_column(read_vector_file(toeplitz_path));
  const gmat::GammaMatrix G = gmat::gamma_approx(T);
  const gmat::ClusterReport report = gmat::preconditioned_spectrum(T, G, epsilon);
  Json doc;
  doc["command"] = "spectrum";
  doc["n"] = report.n;
  doc["epsilon"] = report.epsilon;
  doc["outliers"] = report.outliers;
  doc["spectrum"] = report.spectrum;
  doc["timings_ms"] = elapsed_ms(t0);
  write_json_file(out_path, doc);
  return kExitOk;
}

int run_solve(const std::string& toeplitz_path, const std::string& rhs_path, bool no_precond,
              double tol, int maxit, const std::string& out_path) {
  const auto t0 = std::chrono::steady_clock::now();
  const gmat::SymToeplitz T =
      gmat::SymToeplitz::from_first_column(read_vector_file(toeplitz_path));
  const std::vector<double> rhs = read_vector_file(rhs_path);
  if (static_cast<int>(rhs.size()) != T.n) {
    std::cerr << "gamma: rhs length " << rhs.size() << " does not match order " << T.n << "\n";
    return kExitInvalid;
  }
  std::optional<gmat::GammaMatrix> G;
  if (!no_precond) G = gmat::gamma_approx(T);
  const gmat::SolveOutcome outcome =
      gmat::pcg(T, rhs, G ? &*G : nullptr, tol, maxit);
  Json doc;
  doc["command"] = "solve";
  doc["n"] = T.n;
  doc["preconditioned"] = !no_precond;
  doc["tol"] = tol;
  doc["maxit"] = maxit;
  doc["converged"] = outcome.converged;
  doc["iterations"] = outcome.iterations;
  doc["residual_history"] = outcome.residual_history;
  doc["solution"] = outcome.solution;
  doc["timings_ms"] = elapsed_ms(t0);
  write_json_file(out_path, doc);
  return outcome.converged ? kExitOk : kExitNoConvergence;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gamma-matrix algebra toolkit"};
  app.require_subcommand(1);

  std::uint64_t seed = default_seed();
  app.add_option("--seed", seed, "seed for random inputs (default: GAMMA_SEED or 0)");

  auto* transform = app.add_subcommand("transform", "apply idsct or dsct to a vector file");
  transform->fallthrough();
  std::string op, in_path, out_path;
  bool with_counts = false;
  transform->add_option("--op", op, "idsct or dsct")
      ->required()
      ->check(CLI::IsMember({"idsct", "dsct"}));
  transform->add_option("--in", in_path, "input vector file")->required();
  transform->add_option("--out", out_path, "output vector file")->required();
  transform->add_flag("--counts", with_counts, "append measured vs predicted operation counts");

  auto* verify = app.add_subcommand("verify-counts", "check kernel operation counts against the closed forms");
  verify->fallthrough();
  int max_n = 0;
  verify->add_option("--max-n", max_n, "largest size to verify (power of two)")->required();

  auto* precond = app.add_subcommand("precond", "optimal gamma approximation of a symmetric Toeplitz matrix");
  precond->fallthrough();
  std::string toeplitz_path;
  bool oracle_check = false;
  precond->add_option("--toeplitz", toeplitz_path, "first-column vector file")->required();
  precond->add_option("--out", out_path, "output report (JSON)")->required();
  precond->add_flag("--oracle-check", oracle_check, "compare against the dense projection oracle");

  auto* spectrum = app.add_subcommand("spectrum", "preconditioned spectrum and outlier census");
  spectrum->fallthrough();
  double epsilon = 0.0;
  spectrum->add_option("--toeplitz", toeplitz_path, "first-column vector file")->required();
  spectrum->add_option("--epsilon", epsilon, "cluster window half-width")->required();
  spectrum->add_option("--out", out_path, "output report (JSON)")->required();

  auto* solve = app.add_subcommand("solve", "preconditioned conjugate gradient run");
  solve->fallthrough();
  std::string rhs_path;
  bool no_precond = false;
  double tol = 1e-10;
  int maxit = 1000;
  solve->add_option("--toeplitz", toeplitz_path, "first-column vector file")->required();
  solve->add_option("--rhs", rhs_path, "right-hand-side vector file")->required();
  solve->add_flag("--no-precond", no_precond, "run unpreconditioned CG");
  solve->add_option("--tol", tol, "relative residual tolerance");
  solve->add_option("--maxit", maxit, "iteration cap");
  solve->add_option("--out", out_path, "output report (JSON)")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*transform) return run_transform(op, in_path, out_path, with_counts);
    if (*verify) return run_verify_counts(max_n, seed);
    if (*precond) return run_precond(toeplitz_path, out_path, oracle_check);
    if (*spectrum) return run_spectrum(toeplitz_path, epsilon, out_path);
    if (*solve) return run_solve(toeplitz_path, rhs_path, no_precond, tol, maxit, out_path);
  } catch (const FileError& e) {
    std::cerr << "gamma: " << e.what() << "\n";
    return kExitFile;
  } catch (const gmat::InvalidOrderError& e) {
    std::cerr << "gamma: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const gmat::DimensionError& e) {
    std::cerr << "gamma: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const gmat::SingularMatrixError& e) {
    std::cerr << "gamma: " << e.what() << "\n";
    return kExitOracle;
  } catch (const gmat::IndefiniteMatrixError& e) {
    std::cerr << "gamma: " << e.what() << "\n";
    return kExitOracle;
  } catch (const gmat::FormulaDiscrepancyError& e) {
    std::cerr << "gamma: " << e.what() << "\n";
    return kExitOracle;
  } catch (const gmat::Error& e) {
    std::cerr << "gamma: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitOk;
}
