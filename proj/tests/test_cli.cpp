#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "subreg/cli.hpp"
#include "subreg/extract.hpp"
#include "subreg/families.hpp"
#include "subreg/multigraph.hpp"

using namespace subreg;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / "subreg_cli_test";
    fs::create_directories(path);
  }
  std::string file(const std::string& name) { return (path / name).string(); }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  return std::string(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>());
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

}  // namespace

TEST_CASE("cli: extract with dot and certificate outputs") {
  TempDir dir;
  std::string mg = dir.file("k4.mg");
  spit(mg, serialize_multigraph(complete_k4()));
  std::string dot = dir.file("out.dot");
  std::string cert = dir.file("out.cert");

  CommandResult res = run_command({"extract", mg, "--dot", dot, "--cert",
                                   cert});
  CHECK(res.exit_code == 0);
  CHECK(res.output.substr(0, 19) == "omitted 0 / bound 0");

  std::string dot_text = slurp(dot);
  CHECK(dot_text.find("graph {") == 0);
  CHECK(dot_text.find("penwidth=2") != std::string::npos);

  std::string cert_text = slurp(cert);
  CHECK(cert_text.find("n: 4\n") != std::string::npos);
  CHECK(cert_text.find("bound: 0\n") != std::string::npos);
  CHECK(cert_text.find("classes: non-extremal\n") != std::string::npos);
}

TEST_CASE("cli: generate gfamily matches the library construction") {
  CommandResult res =
      run_command({"generate", "gfamily", "--base", "k33", "--yhat", "3"});
  CHECK(res.exit_code == 0);
  GFamilySpec spec;
  spec.h = complete_bipartite_k33();
  spec.y_hat = 3;
  CHECK(res.output == serialize_multigraph(build_g_family(spec).graph));
  Multigraph g = parse_multigraph(res.output);
  CHECK(g.vertex_count == 5);
}

TEST_CASE("cli: generate balloon and tree") {
  CommandResult balloon = run_command({"generate", "balloon", "--girth", "2"});
  CHECK(balloon.exit_code == 0);
  CHECK(balloon.output == serialize_multigraph(smallest_balloon(2)));

  CommandResult tree = run_command(
      {"generate", "tree", "--internal", "1", "--girth", "3"});
  CHECK(tree.exit_code == 0);
  Multigraph g = parse_multigraph(tree.output);
  CHECK(g.vertex_count == 16);
}

TEST_CASE("cli: generate gfamily with an explosion") {
  CommandResult res = run_command({"generate", "gfamily", "--base", "k33",
                                   "--yhat", "5", "--explode", "3=k4:0"});
  CHECK(res.exit_code == 0);
  Multigraph g = parse_multigraph(res.output);
  CHECK(g.vertex_count == 7);
}

TEST_CASE("cli: verify a file and the small enumeration") {
  TempDir dir;
  std::string mg = dir.file("k4v.mg");
  spit(mg, serialize_multigraph(complete_k4()));
  CommandResult res = run_command({"verify", mg, "--oracle"});
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("exact f2 4") != std::string::npos);
  CHECK(res.output.find("ok") != std::string::npos);

  CommandResult enum4 = run_command({"verify", "--enumerate", "4"});
  CHECK(enum4.exit_code == 0);
  CHECK(enum4.output.find("checked 300 graphs, failures 0") !=
        std::string::npos);
}

TEST_CASE("cli: casestudy badgraph") {
  CommandResult res = run_command({"casestudy", "badgraph"});
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("pass: X is a Tutte set") != std::string::npos);
  CHECK(res.output.find("pass: X minus x is a Tutte set") !=
        std::string::npos);
  CHECK(res.output.find("FAIL") == std::string::npos);
}

TEST_CASE("cli: usage and IO errors exit with 2") {
  CHECK(run_command({"frobnicate"}).exit_code == 2);
  CHECK(run_command({}).exit_code == 2);
  CHECK(run_command({"extract", "/nonexistent/x.mg"}).exit_code == 2);
  CHECK(run_command({"casestudy", "unknown"}).exit_code == 2);
  CHECK(run_command({"verify"}).exit_code == 2);
  CHECK(run_command({"--help"}).exit_code == 0);
}

TEST_CASE("cli: identical invocations give identical bytes") {
  TempDir dir;
  std::string mg = dir.file("tree.mg");
  spit(mg, serialize_multigraph(build_tree_with_balloons(2, 2)));
  CommandResult a = run_command({"extract", mg});
  CommandResult b = run_command({"extract", mg});
  CHECK(a.output == b.output);
  CHECK(a.exit_code == 0);
}
