#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

// Runs the CLI with stdout and stderr merged.
Run run(const std::string& args) {
  const std::string cmd = std::string(TRIMLAB_CLI) + " " + args + " 2>&1";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

class Scratch {
 public:
  Scratch() {
    dir_ = fs::temp_directory_path() / ("trimlab_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
  }
  ~Scratch() {
    std::error_code ec;
    fs::remove_all(dir_, ec);
  }
  std::string write(const std::string& name, const std::string& text) const {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

 private:
  fs::path dir_;
};

bool contains(const std::string& text, const std::string& needle) {
  return text.find(needle) != std::string::npos;
}

int count(const std::string& text, const std::string& needle) {
  int c = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++c;
  return c;
}

const char* kTriple = "instance 3\npt 0 0 3 1\npt 1 0 3 5\npt 2 0 3 1\n";

}  // namespace

TEST_CASE("trim") {
  Scratch s;
  const auto g = s.write("p5.g", "graph 5\ne 0 1\ne 1 2\ne 2 3\ne 3 4\n");
  const auto d = s.write("p5.td",
                         "td 4\nbag 0 0 1\nbag 1 1 2\nbag 2 2 3\nbag 3 3 4\n"
                         "te 0 1\nte 1 2\nte 2 3\nroot 0\n");
  auto r = run("trim " + g + " " + d + " --t 2");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "\ng 10\n"));
  CHECK(contains(r.out, "\nweight(U) 2\n"));
  CHECK(contains(r.out, "\nU 0 1\n"));
  CHECK(contains(r.out, "verified yes"));

  const auto e = s.write("e.g", "graph 4\n");
  r = run("trim " + e + " --auto --t 2");
  CHECK(r.status == 0);
  // One residue class of levels always goes; here that is the hub alone.
  CHECK(contains(r.out, "\nweight(U) 1\n"));
  CHECK(contains(r.out, "verified yes"));

  const auto grid = s.write("grid.g",
                            "graph 9\ne 0 1\ne 1 2\ne 3 4\ne 4 5\ne 6 7\ne 7 8\n"
                            "e 0 3\ne 3 6\ne 1 4\ne 4 7\ne 2 5\ne 5 8\n");
  r = run("trim " + grid + " --planar --t 2");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "verified yes"));

  const auto bad = s.write("bad.g", "graph 2\ne 0 1\ne 0 9\n");
  r = run("trim " + bad + " --auto");
  CHECK(r.status == 2);
  CHECK(contains(r.out, "line 3"));

  r = run("trim " + s.path("missing.g") + " --auto");
  CHECK(r.status == 2);
}

TEST_CASE("decompose") {
  Scratch s;
  const auto g = s.write("k4.g", "graph 4\ne 0 1\ne 0 2\ne 0 3\ne 1 2\ne 1 3\ne 2 3\n");
  const auto r = run("decompose " + g);
  CHECK(r.status == 0);
  CHECK(contains(r.out, "# width 3"));
  CHECK(contains(r.out, "bag 0 0 1 2 3"));
}

TEST_CASE("label and oracle") {
  Scratch s;
  const auto inst = s.write("tri.inst", kTriple);
  auto r = run("label " + inst + " --model 1sh --g-mode exhaustive --verify-oracle");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "# weight 6\n"));
  CHECK(contains(r.out, "# ratio 1\n"));

  r = run("label " + inst + " --model 4s");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "# weight 7\n"));

  r = run("oracle " + inst);
  CHECK(r.status == 0);
  CHECK(contains(r.out, "# weight 6"));

  const auto empty = s.write("empty.inst", "instance 0\n");
  r = run("label " + empty);
  CHECK(r.status == 0);
  CHECK(contains(r.out, "# weight 0\n"));

  r = run("label " + inst + " --epsilon 2");
  CHECK(r.status == 2);
  r = run("label " + inst + " --g-mode fixed:x");
  CHECK(r.status == 2);

  // A budget too small for the exact solve is a refusal, not an answer.
  r = run("label " + inst + " --budget 1");
  CHECK(r.status == 3);
}

TEST_CASE("deps and candidates") {
  Scratch s;
  const auto one = s.write("one.inst", "instance 1\npt 0 0 1 1\n");
  auto r = run("candidates " + one + " --g 1");
  CHECK(r.status == 0);
  CHECK(r.out == "-1\n0\n1\n");

  const auto two = s.write("two.inst", "instance 2\npt 0 0 2 1\npt 1 1/2 2 1\n");
  const auto lab = s.write("two.lab", "lab 0 -19/10\nlab 1 9/10\n");
  r = run("deps " + two + " " + lab);
  CHECK(r.status == 0);
  CHECK(contains(r.out, "e 0 1\n"));
  CHECK(contains(r.out, "# arc 0 1 length 2"));
  CHECK(contains(r.out, "# structure ok"));

  const auto bad = s.write("bad.lab", "lab 0 0\nlab 1 0\n");
  r = run("deps " + two + " " + bad);
  CHECK(r.status != 0);
}

TEST_CASE("render") {
  Scratch s;
  const auto inst = s.write("tri.inst", kTriple);
  const auto lab = s.path("tri.lab");
  REQUIRE(run("label " + inst + " --out " + lab).status == 0);
  const auto a = run("render " + inst + " " + lab);
  CHECK(a.status == 0);
  CHECK(count(a.out, "<rect id=\"label") == 2);
  CHECK(count(a.out, "fill=\"none\"") == 1);
  CHECK(count(a.out, "<circle") == 3);
  CHECK(run("render " + inst + " " + lab).out == a.out);

  const auto one = s.write("one.inst", "instance 1\npt 0 0 1 1\n");
  const auto one_lab = s.write("one.lab", "lab 0 -1/2\n");
  const auto b = run("render " + one + " " + one_lab);
  CHECK(count(b.out, "<rect id=\"label") == 1);
  CHECK(count(b.out, "<circle") == 1);

  const auto bad = s.write("bad.lab", "lab 0 0\nlab 1 0\n");
  const auto refused = run("render " + inst + " " + bad);
  CHECK(refused.status == 2);
  CHECK(contains(refused.out, "labels of p0 and p1 overlap"));
  CHECK(count(refused.out, "<svg") == 0);
}

TEST_CASE("selftest") {
  auto r = run("selftest --seed 1");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "selftest pass"));

  r = run("selftest --seed 1 --mutant open-interval");
  CHECK(r.status == 1);
  CHECK(contains(r.out, "selftest FAIL"));

  r = run("selftest --max-n 0");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "selftest pass"));
}

TEST_CASE("deterministic output") {
  Scratch s;
  const auto inst = s.write("tri.inst", kTriple);
  const auto one = run("label " + inst + " --model 2sh --downstream shifting --threads 1");
  const auto four = run("label " + inst + " --model 2sh --downstream shifting --threads 4");
  CHECK(one.status == 0);
  CHECK(one.out == four.out);
  CHECK(run("bench --seed 3 --threads 1").out == run("bench --seed 3 --threads 4").out);
  CHECK(run("selftest --seed 2 --trials 20 --threads 2").out ==
        run("selftest --seed 2 --trials 20 --threads 1").out);
}
