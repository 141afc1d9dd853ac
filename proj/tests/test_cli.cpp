#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout only
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(GAMMA_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    result.output.append(buf.data(), got);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

fs::path scratch_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "gmat_cli_tests";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string path_of(const std::string& name) { return (scratch_dir() / name).string(); }

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  out << content;
}

void write_vector(const std::string& path, const std::vector<double>& v) {
  std::ostringstream os;
  for (double x : v) os << x << "\n";
  write_file(path, os.str());
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string strip_timings(const std::string& text) {
  std::istringstream in(text);
  std::ostringstream out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find("timings_ms") == std::string::npos) out << line << "\n";
  }
  return out.str();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("transform round trip with counts") {
  write_vector(path_of("ones8.txt"), std::vector<double>(8, 1.0));
  const RunResult fwd = run_cli("transform --op idsct --in " + path_of("ones8.txt") +
                                " --out " + path_of("fwd8.txt") + " --counts");
  CHECK(fwd.exit_code == 0);
  const std::string body = read_file(path_of("fwd8.txt"));
  CHECK(body.find("2.8284271247461898") != std::string::npos);  // sqrt(8) in slot 0
  CHECK(body.find("cs_additions measured=15 predicted=15") != std::string::npos);
  CHECK(body.find("sn_multiplications measured=4 predicted=4") != std::string::npos);

  const RunResult bwd = run_cli("transform --op dsct --in " + path_of("fwd8.txt") + " --out " +
                                path_of("back8.txt"));
  CHECK(bwd.exit_code == 0);
  std::istringstream in(read_file(path_of("back8.txt")));
  std::string line;
  std::getline(in, line);  // header
  for (int i = 0; i < 8; ++i) {
    std::getline(in, line);
    CHECK(std::abs(std::stod(line) - 1.0) <= 1e-10);
  }
}

TEST_CASE("transform count report at order 64 matches the closed form") {
  write_vector(path_of("v64.txt"), std::vector<double>(64, 0.25));
  const RunResult r = run_cli("transform --op dsct --in " + path_of("v64.txt") + " --out " +
                              path_of("v64out.txt") + " --counts");
  CHECK(r.exit_code == 0);
  const std::string body = read_file(path_of("v64out.txt"));
  CHECK(body.find("cs_additions measured=257 predicted=257") != std::string::npos);
  CHECK(body.find("sn_additions measured=211 predicted=211") != std::string::npos);
}

TEST_CASE("transform rejects bad lengths with exit 2") {
  write_vector(path_of("six.txt"), std::vector<double>(6, 1.0));
  CHECK(run_cli("transform --op idsct --in " + path_of("six.txt") + " --out " +
                path_of("junk.txt"))
            .exit_code == 2);
}

TEST_CASE("missing and malformed files exit 1") {
  CHECK(run_cli("transform --op idsct --in " + path_of("nope.txt") + " --out " +
                path_of("junk.txt"))
            .exit_code == 1);
  write_file(path_of("bad.txt"), "1.0\nnot-a-number\n");
  CHECK(run_cli("precond --toeplitz " + path_of("bad.txt") + " --out " + path_of("junk.json"))
            .exit_code == 1);
  write_file(path_of("badheader.txt"), "# n=5\n1\n2\n");
  CHECK(run_cli("transform --op idsct --in " + path_of("badheader.txt") + " --out " +
                path_of("junk.txt"))
            .exit_code == 1);
}

TEST_CASE("verify-counts") {
  const RunResult small = run_cli("verify-counts --max-n 4");
  CHECK(small.exit_code == 0);
  CHECK(small.output.find("5/5") != std::string::npos);
  CHECK(small.output.find("ok") != std::string::npos);
  CHECK(run_cli("verify-counts --max-n 48").exit_code == 2);
}

TEST_CASE("precond on the identity") {
  write_vector(path_of("id8.txt"), {1, 0, 0, 0, 0, 0, 0, 0});
  const RunResult r =
      run_cli("precond --toeplitz " + path_of("id8.txt") + " --out " + path_of("id8.json") +
              " --oracle-check");
  CHECK(r.exit_code == 0);
  const nlohmann::json doc = nlohmann::json::parse(read_file(path_of("id8.json")));
  CHECK(doc["n"] == 8);
  CHECK(doc["c"][0] == 1.0);
  for (const auto& v : doc["b"]) CHECK(std::abs(v.get<double>()) <= 1e-14);
  CHECK(doc["oracle_check"]["max_component_deviation"].get<double>() <= 1e-9);
}

TEST_CASE("precond oracle check on the geometric family at order 32") {
  std::vector<double> t(32, 0.0);
  double v = 1.0;
  for (int j = 0; j < 31; ++j) {
    t[static_cast<std::size_t>(j)] = v;
    v /= 2.0;
  }
  write_vector(path_of("geo32.txt"), t);
  const RunResult r = run_cli("precond --toeplitz " + path_of("geo32.txt") + " --out " +
                              path_of("geo32.json") + " --oracle-check");
  CHECK(r.exit_code == 0);
  const nlohmann::json doc = nlohmann::json::parse(read_file(path_of("geo32.json")));
  CHECK(doc["oracle_check"]["max_component_deviation"].get<double>() <= 1e-9);
}

TEST_CASE("singular and indefinite inputs exit 4") {
  write_vector(path_of("zero8.txt"), std::vector<double>(8, 0.0));
  CHECK(run_cli("spectrum --toeplitz " + path_of("zero8.txt") + " --epsilon 0.1 --out " +
                path_of("junk.json"))
            .exit_code == 4);
  write_vector(path_of("negid.txt"), {-1, 0, 0, 0, 0, 0, 0, 0});
  write_vector(path_of("rhs8.txt"), std::vector<double>(8, 1.0));
  CHECK(run_cli("solve --toeplitz " + path_of("negid.txt") + " --rhs " + path_of("rhs8.txt") +
                " --tol 1e-10 --maxit 10 --out " + path_of("junk.json"))
            .exit_code == 4);
}

TEST_CASE("spectrum accepts odd orders through the dense path") {
  write_vector(path_of("odd9.txt"), {5, 1, 0.5, 0.25, 0.125, 0.125, 0.25, 0.5, 1});
  const RunResult r = run_cli("spectrum --toeplitz " + path_of("odd9.txt") +
                              " --epsilon 0.5 --out " + path_of("odd9.json"));
  CHECK(r.exit_code == 0);
  const nlohmann::json doc = nlohmann::json::parse(read_file(path_of("odd9.json")));
  CHECK(doc["n"] == 9);
  CHECK(doc["spectrum"].size() == 9);
}

TEST_CASE("spectrum of a class member has no outliers") {
  // symmetric circulant first column -> the approximation is exact
  write_vector(path_of("circ8.txt"), {9, 1, 2, 0.5, 3, 0.5, 2, 1});
  const RunResult r = run_cli("spectrum --toeplitz " + path_of("circ8.txt") +
                              " --epsilon 0.1 --out " + path_of("spec8.json"));
  CHECK(r.exit_code == 0);
  const nlohmann::json doc = nlohmann::json::parse(read_file(path_of("spec8.json")));
  CHECK(doc["outliers"] == 0);
  CHECK(run_cli("spectrum --toeplitz " + path_of("circ8.txt") + " --epsilon 0 --out " +
                path_of("junk.json"))
            .exit_code == 2);
  CHECK(run_cli("spectrum --toeplitz " + path_of("circ8.txt") + " --epsilon -1 --out " +
                path_of("junk.json"))
            .exit_code == 2);
}

TEST_CASE("solve") {
  write_vector(path_of("idT.txt"), {1, 0, 0, 0, 0, 0, 0, 0});
  write_vector(path_of("rhs.txt"), {1, 2, 3, 4, 4, 3, 2, 1});
  const RunResult ok = run_cli("solve --toeplitz " + path_of("idT.txt") + " --rhs " +
                               path_of("rhs.txt") + " --tol 1e-10 --maxit 20 --out " +
                               path_of("sol.json"));
  CHECK(ok.exit_code == 0);
  const nlohmann::json doc = nlohmann::json::parse(read_file(path_of("sol.json")));
  CHECK(doc["converged"] == true);
  CHECK(doc["iterations"] == 1);
  CHECK(doc["solution"][3] == 4.0);

  const RunResult capped = run_cli("solve --toeplitz " + path_of("idT.txt") + " --rhs " +
                                   path_of("rhs.txt") + " --tol 1e-10 --maxit 0 --out " +
                                   path_of("solcap.json"));
  CHECK(capped.exit_code == 5);
}

TEST_CASE("reports are byte-identical across runs modulo timing fields") {
  write_vector(path_of("geo16.txt"), {1, 0.5, 0.25, 0.125, 0.0625, 0.03125, 0.015625, 0.0078125,
                                      0.00390625, 0.001953125, 0.0009765625, 0.00048828125,
                                      0.000244140625, 0.0001220703125, 6.103515625e-05,
                                      3.0517578125e-05});
  const std::string cmd = "spectrum --toeplitz " + path_of("geo16.txt") + " --epsilon 0.1 --out ";
  CHECK(run_cli(cmd + path_of("s_a.json")).exit_code == 0);
  CHECK(run_cli(cmd + path_of("s_b.json")).exit_code == 0);
  CHECK(strip_timings(read_file(path_of("s_a.json"))) ==
        strip_timings(read_file(path_of("s_b.json"))));
  CHECK(strip_timings(read_file(path_of("s_a.json"))).find("timings") == std::string::npos);

  // seeded stdout is reproducible too
  const RunResult a = run_cli("verify-counts --max-n 64 --seed 7");
  const RunResult b = run_cli("verify-counts --max-n 64 --seed 7");
  CHECK(a.output == b.output);
}

TEST_CASE("GAMMA_SEED provides the default seed") {
  const std::string cmd = std::string("GAMMA_SEED=7 ") + GAMMA_CLI_PATH +
                          " verify-counts --max-n 16 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string env_output;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) env_output.append(buf.data(), got);
  const int status = pclose(pipe);
  CHECK(WEXITSTATUS(status) == 0);
  CHECK(env_output == run_cli("verify-counts --max-n 16 --seed 7").output);
}

}  // TEST_SUITE
