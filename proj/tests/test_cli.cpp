#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "casimir/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "casimir");
  std::ostringstream out, err;
  const int code = casimir::cli::cli_main(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t lines(const std::string& s) {
  std::size_t n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() / ("casimir-cli-test-" + std::to_string(std::rand()) + "-" +
                                         std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  fs::path file(const std::string& name, const std::string& contents = {}) const {
    const fs::path p = path_ / name;
    if (!contents.empty()) std::ofstream(p, std::ios::binary) << contents;
    return p;
  }

 private:
  fs::path path_;
};

void expect_one_error_line(const Run& r, int code, const std::string& category) {
  CHECK(r.code == code);
  CHECK(lines(r.err) == 1);
  CHECK(r.err.rfind("error: " + category + ":", 0) == 0);
}

const char* kSmallSweep =
    "[scenario]\nkind = porosity_sweep\nthickness_nm = 500\n"
    "[sweep]\ngrid = 200, 600, 1500\nseries_axis = porosity\nseries_values = 0.8, 0.85, 0.9, 0.95\n"
    "[output]\ntitle = porosity family\n";

}  // namespace

TEST_CASE("usage errors exit 2 with help and one diagnostic") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {}, {"frobnicate"}, {"force"}, {"force", "--config"}, {"kk", "--bogus"}, {"solve", "--axis", "width"}}) {
    const auto r = run(args);
    expect_one_error_line(r, 2, "usage");
    CHECK(r.out.find("Usage") != std::string::npos);
  }
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("force prints pressures and the reduction factor") {
  TempDir dir;
  const auto cfg = dir.file("backed.cfg", "[scenario]\nkind = aerogel_on_au_symmetric\n");
  const auto r = run({"force", "--config", cfg.string(), "--gap-nm", "100"});
  CHECK(r.code == 0);
  CHECK(r.err.empty());
  CHECK(r.out.find("pressure_Pa = -") != std::string::npos);
  CHECK(r.out.find("ideal_pressure_Pa = -1.30012") != std::string::npos);
  CHECK(r.out.find("reduction_factor = ") != std::string::npos);

  const auto bad = run({"force", "--config", cfg.string(), "--gap-nm", "-5"});
  expect_one_error_line(bad, 1, "domain");
  const auto phi = run({"force", "--config", cfg.string(), "--gap-nm", "100", "--porosity", "1.5"});
  expect_one_error_line(phi, 1, "domain");
}

TEST_CASE("config errors are computation errors with one line") {
  TempDir dir;
  const auto cfg = dir.file("bad.cfg", "[scenario]\nporosity = 1.2\n");
  expect_one_error_line(run({"force", "--config", cfg.string(), "--gap-nm", "100"}), 1, "config");
  const auto table = dir.file("missing_table.cfg",
                              "[material.t]\nmodel = tabulated\nfile = nowhere.csv\n"
                              "[scenario]\nkind = aerogel_on_au_symmetric\nsilica = t\n");
  expect_one_error_line(run({"force", "--config", table.string(), "--gap-nm", "100"}), 1, "io");
  expect_one_error_line(run({"force", "--config", (dir.file("absent.cfg")).string(), "--gap-nm", "1"}), 2, "usage");
}

TEST_CASE("kk writes a default 200-point table") {
  TempDir dir;
  const auto in = dir.file("silica.csv", "# test\nenergy_eV,eps2\n0.1,0.5\n1,1.0\n10,0.2\n");
  const auto out = dir.file("silica_ixi.csv");
  const auto r = run({"kk", "--in", in.string(), "--out", out.string()});
  CHECK(r.code == 0);
  const auto text = slurp(out);
  CHECK(lines(text) == 201);
  CHECK(text.rfind("xi_eV,eps\n1.00000000e-03,", 0) == 0);
  CHECK(text.find("\n1.00000000e+03,") != std::string::npos);

  const auto unsorted = dir.file("unsorted.csv", "energy_eV,eps2\n1,0.5\n0.5,0.1\n");
  const auto bad = run({"kk", "--in", unsorted.string()});
  expect_one_error_line(bad, 1, "format");
  CHECK(bad.err.find("line 3") != std::string::npos);
  const auto negative = dir.file("neg.csv", "energy_eV,eps2\n1,-0.5\n");
  expect_one_error_line(run({"kk", "--in", negative.string()}), 1, "passivity");
}

TEST_CASE("material tabulates a configured model") {
  TempDir dir;
  const auto cfg = dir.file("m.cfg", "[material.au]\nmodel = drude\nplasma_eV = 9\ndamping_eV = 0.035\n");
  const auto r = run({"material", "--config", cfg.string(), "--name", "au", "--points", "5"});
  CHECK(r.code == 0);
  CHECK(lines(r.out) == 6);
  expect_one_error_line(run({"material", "--config", cfg.string(), "--name", "ag"}), 1, "config");
}

TEST_CASE("sweep writes per-series CSV files and one SVG") {
  TempDir dir;
  const auto cfg = dir.file("family.cfg", kSmallSweep);
  const auto csv = dir.file("family.csv");
  const auto svg = dir.file("family.svg");
  const auto r = run({"sweep", "--config", cfg.string(), "--csv", csv.string(), "--svg", svg.string()});
  REQUIRE(r.code == 0);
  for (const char* tag : {"0.8", "0.85", "0.9", "0.95"}) {
    const auto p = dir.file(std::string("family.porosity-") + tag + ".csv");
    CHECK(fs::exists(p));
    CHECK(lines(slurp(p)) == 4);
  }
  const auto text = slurp(svg);
  std::size_t polylines = 0;
  for (auto pos = text.find("<polyline"); pos != std::string::npos; pos = text.find("<polyline", pos + 1)) ++polylines;
  CHECK(polylines == 4);
  CHECK(text.find("porosity=0.85") != std::string::npos);
}

TEST_CASE("sweep CSV is byte-identical across runs and worker counts") {
  TempDir dir;
  const auto cfg = dir.file("s.cfg",
                            "[scenario]\nkind = au_vs_aerogel_on_au\n[sweep]\ngrid = log(100, 2000, 6)\n");
  setenv("CASIMIR_WORKERS", "1", 1);
  const auto one = run({"sweep", "--config", cfg.string()});
  setenv("CASIMIR_WORKERS", "4", 1);
  const auto four = run({"sweep", "--config", cfg.string()});
  const auto again = run({"sweep", "--config", cfg.string()});
  unsetenv("CASIMIR_WORKERS");
  REQUIRE(one.code == 0);
  CHECK(lines(one.out) == 7);
  CHECK(one.out == four.out);
  CHECK(four.out == again.out);
}

TEST_CASE("sweep to stdout needs a single series") {
  TempDir dir;
  const auto single = dir.file("one.cfg", "[scenario]\nkind = freestanding_slabs\n[sweep]\ngrid = 300\n");
  const auto r = run({"sweep", "--config", single.string(), "--csv", "-"});
  CHECK(r.code == 0);
  CHECK(lines(r.out) == 2);
  const auto family = dir.file("many.cfg", kSmallSweep);
  expect_one_error_line(run({"sweep", "--config", family.string(), "--csv", "-"}), 1, "input");
}

TEST_CASE("solve reports a bracketed value or an infeasible target") {
  TempDir dir;
  const auto cfg = dir.file("s.cfg", "[scenario]\nkind = freestanding_slabs\nthickness_nm = 500\n");
  const auto ok = run({"solve", "--config", cfg.string(), "--target", "0.002", "--lo", "0.5", "--hi", "0.99",
                       "--gap-nm", "1000"});
  CHECK(ok.code == 0);
  CHECK(ok.out.rfind("porosity = ", 0) == 0);
  const auto infeasible = run({"solve", "--config", cfg.string(), "--target", "0.999", "--lo", "0.5", "--hi",
                               "0.99", "--gap-nm", "1000"});
  expect_one_error_line(infeasible, 1, "infeasible-target");
}
