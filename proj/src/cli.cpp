#include "subreg/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "subreg/dot.hpp"
#include "subreg/families.hpp"
#include "subreg/matching.hpp"
#include "subreg/oracle.hpp"
#include "subreg/structure.hpp"

namespace subreg {

namespace {

constexpr uint64_t kDefaultSeed = 0x5eed2de9u;

std::string join_vertices(const VertexSet& vs) {
  std::string out = "{";
  for (size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(vs[i]);
  }
  return out + "}";
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

Multigraph named_or_file_graph(const std::string& name) {
  if (name == "k33") return complete_bipartite_k33();
  if (name == "q3") return cube_q3();
  if (name == "k4") return complete_k4();
  if (name == "dc4") return doubled_four_cycle();
  if (name == "petersen") return petersen();
  if (name == "triple") return triple_edge();
  return read_multigraph_file(name);
}

std::string cmd_analyze(const Multigraph& g, std::ostringstream& out) {
  StructureReport rep = analyze_structure(g);
  out << "n: " << g.vertex_count << "\n";
  out << "m: " << g.edge_count() << "\n";
  out << "c: " << rep.cut_edge_count << "\n";
  out << "d: " << rep.deficit << "\n";
  auto gi = girth(g);
  out << "girth: " << (gi ? std::to_string(*gi) : std::string("infinity"))
      << "\n";
  for (size_t i = 0; i < rep.two_edge_connected_components.size(); ++i) {
    out << "component " << i << ": vertices="
        << join_vertices(rep.two_edge_connected_components[i])
        << " balloon=" << (rep.is_balloon_flags[i] ? "yes" : "no") << "\n";
  }
  GallaiEdmondsDecomposition ge = gallai_edmonds(g);
  out << "gallai-edmonds A: " << join_vertices(ge.a) << "\n";
  out << "gallai-edmonds C: " << join_vertices(ge.c) << "\n";
  out << "gallai-edmonds D: " << join_vertices(ge.d) << "\n";
  out << "deficiency: " << ge.deficiency << "\n";
  return out.str();
}

int cmd_casestudy(std::ostringstream& out) {
  bool ok = true;
  auto check = [&](bool cond, const std::string& what) {
    out << (cond ? "pass" : "FAIL") << ": " << what << "\n";
    ok = ok && cond;
  };
  Multigraph g = k23_doubled_thread();
  out << serialize_multigraph(g);
  Bipartition parts;
  check(bipartition(g, &parts), "graph is bipartite");
  check(one_deficit(g) == 3, "1-deficit is 3");
  check(find_cut_edges(g).empty(), "no cut-edge");

  OracleReport oracle = brute_force_f2(g);
  check(oracle.f2_exact == g.vertex_count - 1,
        "largest 2-regular subgraph misses exactly one vertex");
  bool has_two_factor = false;
  // a 2-factor would be a witness covering everything
  has_two_factor = oracle.f2_exact == g.vertex_count;
  check(!has_two_factor, "no 2-factor");

  BalloonAugmentation aug = augment_two_vertices_with_balloons(g);
  check(!perfect_matching(aug.graph), "augmented graph has no 1-factor");

  // X is the side holding the three 2-vertices; x its doubled-edge vertex.
  VertexSet x_side = {2, 3, 4, 5};
  VertexSet x_minus = {2, 3, 4};
  int o_full = count_odd_components(aug.graph, x_side);
  int o_minus = count_odd_components(aug.graph, x_minus);
  out << "o(G'-X) = " << o_full << " with |X| = " << x_side.size() << "\n";
  out << "o(G'-(X-x)) = " << o_minus << " with |X-x| = " << x_minus.size()
      << "\n";
  check(o_full >= static_cast<int>(x_side.size()) + 2, "X is a Tutte set");
  check(o_minus >= static_cast<int>(x_minus.size()) + 2,
        "X minus x is a Tutte set");

  GallaiEdmondsDecomposition ge = gallai_edmonds(aug.graph);
  bool x_covered = true;
  for (int v : x_side)
    if (std::binary_search(ge.d.begin(), ge.d.end(), v)) x_covered = false;
  check(x_covered, "every maximum matching of the augmentation covers X");
  return ok ? 0 : 1;
}

}  // namespace

CommandResult run_command(const std::vector<std::string>& args) {
  CLI::App app{"2-regular subgraphs of subcubic multigraphs, with "
               "certificates"};
  app.require_subcommand(1);

  uint64_t seed = kDefaultSeed;
  if (const char* env = std::getenv("SUBREG_SEED"))
    seed = std::strtoull(env, nullptr, 10);
  app.add_option("--seed", seed,
                 "seed for randomized operations (SUBREG_SEED overrides the "
                 "built-in default)");

  std::string file;
  auto* analyze = app.add_subcommand("analyze", "structural report");
  analyze->add_option("file", file, ".mg input")->required();

  auto* bound = app.add_subcommand("bound", "print the omission bound");
  bound->add_option("file", file, ".mg input")->required();

  std::string dot_path, cert_path;
  auto* extract_cmd =
      app.add_subcommand("extract", "construct a 2-regular subgraph");
  extract_cmd->add_option("file", file, ".mg input")->required();
  extract_cmd->add_option("--dot", dot_path, "write a DOT rendering");
  extract_cmd->add_option("--cert", cert_path, "write the certificate");

  auto* generate = app.add_subcommand("generate", "extremal families");
  generate->require_subcommand(1);
  std::string out_path;
  int gen_girth = 3;
  int gen_internal = 1;
  auto* gen_balloon = generate->add_subcommand(
      "balloon", "smallest balloon of a given girth");
  gen_balloon->add_option("--girth", gen_girth, "girth, 2..8")->required();
  gen_balloon->add_option("--out", out_path, "output file (default stdout)");
  auto* gen_tree = generate->add_subcommand(
      "tree", "tree of 3-vertices with balloons on the leaves");
  gen_tree->add_option("--internal", gen_internal, "internal vertices")
      ->required();
  gen_tree->add_option("--girth", gen_girth, "balloon girth, 2..8");
  gen_tree->add_option("--out", out_path, "output file (default stdout)");
  std::string base_name = "k33";
  int y_hat = -1;
  std::vector<std::string> explode_specs;
  auto* gen_gfamily = generate->add_subcommand(
      "gfamily", "bipartite-deletion family member");
  gen_gfamily->add_option("--base", base_name,
                          "k33 | q3 | path to a cubic bipartite .mg");
  gen_gfamily->add_option("--yhat", y_hat,
                          "vertex to delete (default: last vertex)");
  gen_gfamily->add_option(
      "--explode", explode_specs,
      "y=F:z with F one of k4|dc4 or a .mg path, repeatable");
  gen_gfamily->add_option("--out", out_path, "output file (default stdout)");

  bool with_oracle = false;
  int enumerate_n = 0;
  int threads = 0;
  auto* verify = app.add_subcommand("verify", "check the omission theorem");
  verify->add_option("file", file, ".mg input");
  verify->add_flag("--oracle", with_oracle,
                   "also confirm against the brute-force maximum");
  verify->add_option("--enumerate", enumerate_n,
                     "exhaustive check of every connected subcubic "
                     "multigraph up to this order");
  verify->add_option("--threads", threads,
                     "worker threads for --enumerate (0 = all)");

  auto* casestudy = app.add_subcommand(
      "casestudy", "scripted reconstructions of reference examples");
  std::string case_name;
  casestudy->add_option("name", case_name, "badgraph")->required();

  std::vector<const char*> argv;
  argv.push_back("subreg");
  for (const auto& a : args) argv.push_back(a.c_str());

  CommandResult result;
  std::ostringstream out;
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream help;
    if (e.get_exit_code() == 0) {  // --help
      result.output = app.help();
      result.exit_code = 0;
    } else {
      result.output = std::string(e.what()) + "\n" + app.help();
      result.exit_code = 2;
    }
    return result;
  }
  (void)seed;  // reserved for randomized subcommands

  try {
    if (*analyze) {
      result.output = cmd_analyze(read_multigraph_file(file), out);
    } else if (*bound) {
      Multigraph g = read_multigraph_file(file);
      StructureReport rep = analyze_structure(g);
      out << "bound "
          << bound_omitted(g.vertex_count, g.edge_count(),
                           rep.cut_edge_count)
          << " (n=" << g.vertex_count << " m=" << g.edge_count()
          << " c=" << rep.cut_edge_count << " d=" << rep.deficit << ")\n";
      result.output = out.str();
    } else if (*extract_cmd) {
      Multigraph g = read_multigraph_file(file);
      ExtractResult ext = extract(g);
      out << "omitted " << ext.certificate.achieved_omitted << " / bound "
          << ext.certificate.bound_omitted << "\n";
      out << "cycles " << ext.subgraph.cycles.size() << "\n";
      for (const auto& cycle : ext.subgraph.cycles) {
        out << " ";
        for (int e : cycle) out << " " << e;
        out << "\n";
      }
      auto comps = connected_components(g);
      if (comps.size() == 1) {
        BoundCertificate cert = classify_equality(g, ext.certificate);
        out << "equality " << (cert.equality ? "yes" : "no") << "\n";
      } else {
        // classification is defined per connected graph
        for (size_t i = 0; i < comps.size(); ++i) {
          auto sub = induced_subgraph(g, comps[i]);
          ExtractResult part = extract(sub.graph);
          BoundCertificate cert =
              classify_equality(sub.graph, part.certificate);
          out << "component " << i << ": equality "
              << (cert.equality ? "yes" : "no") << "\n";
        }
      }
      if (!dot_path.empty()) write_file(dot_path, to_dot(g, ext.subgraph));
      if (!cert_path.empty())
        write_file(cert_path, certificate_to_text(ext.certificate));
      result.output = out.str();
    } else if (*gen_balloon) {
      std::string text = serialize_multigraph(smallest_balloon(gen_girth));
      if (out_path.empty())
        result.output = text;
      else
        write_file(out_path, text);
    } else if (*gen_tree) {
      std::string text = serialize_multigraph(
          build_tree_with_balloons(gen_internal, gen_girth));
      if (out_path.empty())
        result.output = text;
      else
        write_file(out_path, text);
    } else if (*gen_gfamily) {
      GFamilySpec spec;
      spec.h = named_or_file_graph(base_name);
      spec.y_hat = y_hat >= 0 ? y_hat : spec.h.vertex_count - 1;
      for (const auto& raw : explode_specs) {
        auto eq = raw.find('=');
        auto colon = raw.rfind(':');
        if (eq == std::string::npos || colon == std::string::npos ||
            colon < eq)
          throw std::runtime_error("--explode expects y=F:z, got " + raw);
        Explosion ex;
        int y = std::stoi(raw.substr(0, eq));
        ex.f = named_or_file_graph(raw.substr(eq + 1, colon - eq - 1));
        ex.z = std::stoi(raw.substr(colon + 1));
        spec.explosions.emplace(y, std::move(ex));
      }
      std::string text = serialize_multigraph(build_g_family(spec).graph);
      if (out_path.empty())
        result.output = text;
      else
        write_file(out_path, text);
    } else if (*verify) {
      if (enumerate_n > 0) {
        EnumerationOptions opts;
        opts.connected_only = true;
        VerifySummary sum =
            verify_enumeration(enumerate_n, opts, true, threads);
        out << "checked " << sum.graphs_checked << " graphs, failures "
            << sum.failures << "\n";
        for (const auto& r : sum.failure_reports) out << r << "\n";
        result.output = out.str();
        result.exit_code = sum.failures == 0 ? 0 : 1;
      } else if (!file.empty()) {
        Multigraph g = read_multigraph_file(file);
        TheoremReport rep = check_theorem(g, with_oracle);
        out << "omitted " << rep.certificate.achieved_omitted << " / bound "
            << rep.certificate.bound_omitted << "\n";
        if (rep.oracle_f2)
          out << "exact f2 " << *rep.oracle_f2 << "\n";
        out << (rep.pass ? "ok" : "FAILED: " + rep.failure) << "\n";
        result.output = out.str();
        result.exit_code = rep.pass ? 0 : 1;
      } else {
        result.output = "verify needs a file or --enumerate\n" + app.help();
        result.exit_code = 2;
      }
    } else if (*casestudy) {
      if (case_name != "badgraph") {
        result.output = "unknown case study: " + case_name + "\n";
        result.exit_code = 2;
      } else {
        result.exit_code = cmd_casestudy(out);
        result.output = out.str();
      }
    }
  } catch (const std::exception& e) {
    result.output = std::string("error: ") + e.what() + "\n";
    result.exit_code = 2;
  }
  return result;
}

}  // namespace subreg
