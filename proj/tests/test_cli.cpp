#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(LIESPEC_BIN) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf{};
  RunResult r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("spectrum spot values") {
  RunResult r = run("spectrum --group SO --n 3 --lambda 2");
  CHECK(r.code == 0);
  CHECK(r.out.find("lambda,count,leading,remainder") != std::string::npos);
  CHECK(r.out.find("2,10,3.7712361663282534,6.2287638336717466") != std::string::npos);

  RunResult z = run("spectrum --group SO --n 3 --lambda 0");
  CHECK(z.out.find("0,1,0,1") != std::string::npos);

  RunResult q = run("spectrum --group SO --n 4 --lambda 3");
  CHECK(q.out.find("3,17,") != std::string::npos);

  RunResult f = run("spectrum --group Spin --n 5 --lambda 10 --full-lattice");
  RunResult c = run("spectrum --group Spin --n 5 --lambda 10");
  CHECK(f.out == c.out);

  RunResult w = run("spectrum --group SO --n 5 --lambda 60 --workers 3");
  RunResult s = run("spectrum --group SO --n 5 --lambda 60");
  CHECK(w.out == s.out);
}

TEST_CASE("arith jacobi row") {
  RunResult r = run("arith --check jacobi --m 0 --t 4");
  CHECK(r.code == 0);
  CHECK(r.out.find("4,88,88,true") != std::string::npos);
}

TEST_CASE("geodesics row") {
  RunResult r = run("geodesics --n 2 --x 39.4784176043574");
  CHECK(r.code == 0);
  CHECK(r.out.find(",5,") != std::string::npos);
  CHECK(r.out.find("131/416,0") != std::string::npos);
}

TEST_CASE("geodesics length spectrum") {
  RunResult r = run("geodesics --n 4 --length-max 7");
  CHECK(r.code == 0);
  CHECK(r.out.find("k,length_sq,count") != std::string::npos);
  CHECK(r.out.find("0,0,1") != std::string::npos);
  CHECK(r.out.find("1,") != std::string::npos);
  CHECK(r.out.find(",8") != std::string::npos);  // r_4(1) = 8
}

TEST_CASE("bessel at z = 0") {
  RunResult r = run("bessel --alpha 2 --beta 0.5 --z 0");
  CHECK(r.code == 0);
  CHECK(r.out.find("0,0,0") != std::string::npos);
}

TEST_CASE("lattice defaults to Z^n") {
  RunResult r = run("lattice --dim 2 --r 2");
  CHECK(r.code == 0);
  CHECK(r.out.find("2,13,") != std::string::npos);
}

TEST_CASE("exit codes: config = 2, budget = 3, io = 4") {
  CHECK(run("spectrum --group XX --n 3 --lambda 1").code == 2);
  CHECK(run("spectrum --group SO --n 3").code == 2);       // no lambda
  CHECK(run("nonsense").code == 2);                        // unknown subcommand
  CHECK(run("spectrum --group SO --n 6 --lambda 100000 --budget 100").code == 3);
  // /dev/null is not a directory: the output path cannot be created
  CHECK(run("spectrum --group SO --n 3 --lambda 1 --out /dev/null/sub/y.csv").code == 4);
}

TEST_CASE("json dump and cache reuse") {
  fs::path dir = fs::temp_directory_path() / "liespec_cli_cache";
  fs::remove_all(dir);
  fs::create_directories(dir);
  fs::path dump = dir / "dump.json";

  std::string base = "spectrum --group SO --n 3 --lambda 2 --dump-json " + dump.string() +
                     " --cache-dir " + dir.string();
  RunResult first = run(base);
  CHECK(first.code == 0);
  std::ifstream in(dump);
  std::ostringstream os;
  os << in.rdbuf();
  std::string text = os.str();
  CHECK(text.find("\"family\": \"SO\"") != std::string::npos);
  CHECK(text.find("\"mult\": \"9\"") != std::string::npos);
  CHECK(text.find("\"lambda\": \"2\"") != std::string::npos);

  // second run must hit the cache and produce the identical dump
  RunResult second = run(base);
  CHECK(second.code == 0);
  std::ifstream in2(dump);
  std::ostringstream os2;
  os2 << in2.rdbuf();
  CHECK(os2.str() == text);
  fs::remove_all(dir);
}

TEST_CASE("config file supplies options") {
  fs::path dir = fs::temp_directory_path() / "liespec_cli_cfg";
  fs::remove_all(dir);
  fs::create_directories(dir);
  fs::path cfg = dir / "run.ini";
  {
    std::ofstream out(cfg);
    out << "[spectrum]\ngroup=SO\nn=3\nlambda=2\n";
  }
  RunResult r = run("--config " + cfg.string() + " spectrum");
  CHECK(r.code == 0);
  CHECK(r.out.find("2,10,") != std::string::npos);
  fs::remove_all(dir);
}
