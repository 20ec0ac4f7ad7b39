// boxlab: batch experiment runner for finite free-product quotients.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "boxlab/bass_serre.hpp"
#include "boxlab/baumslag.hpp"
#include "boxlab/expansion.hpp"
#include "boxlab/extension.hpp"
#include "boxlab/free_product.hpp"
#include "boxlab/graph.hpp"
#include "boxlab/group.hpp"
#include "boxlab/metric.hpp"
#include "boxlab/tower.hpp"
#include "boxlab/tree_partition.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;
using namespace boxlab;

namespace {

constexpr int kSchemaVersion = 1;

std::size_t size_cap() {
  if (const char* env = std::getenv("BOXLAB_CAP")) {
    const long long v = std::atoll(env);
    if (v > 0) return static_cast<std::size_t>(v);
  }
  return 1000000;
}

// "cyclic:N", "product:N1xN2", or "file:PATH"
FiniteGroupTable parse_group(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (kind == "cyclic") return FiniteGroupTable::cyclic(std::stoi(arg));
  if (kind == "file") return FiniteGroupTable::from_file(arg);
  if (kind == "product") {
    const auto x = arg.find('x');
    if (x == std::string::npos) throw CLI::ValidationError("product spec needs N1xN2");
    return FiniteGroupTable::direct_product(
        FiniteGroupTable::cyclic(std::stoi(arg.substr(0, x))),
        FiniteGroupTable::cyclic(std::stoi(arg.substr(x + 1))));
  }
  throw CLI::ValidationError("unknown group spec: " + spec);
}

std::ofstream open_report(const std::string& dir, const std::string& name) {
  fs::create_directories(dir);
  std::ofstream out(fs::path(dir) / name, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + name + " under " + dir);
  return out;
}

void write_json(const std::string& dir, const std::string& name, json j) {
  j["schema_version"] = kSchemaVersion;
  auto out = open_report(dir, name);
  out << j.dump(2) << '\n';
}

int run_group(const std::string& spec, const std::string& out_path) {
  FiniteGroupTable g = parse_group(spec);
  g.validate();
  std::cout << "order " << g.order() << " identity " << g.identity() << " valid\n";
  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    g.write(out);
  }
  return 0;
}

int run_baumslag(const std::string& a_spec, const std::string& b_spec, int k,
                 bool with_cheeger, const std::string& report) {
  FreeProduct fp(parse_group(a_spec), parse_group(b_spec));
  const std::size_t cap = size_cap();
  const auto uk = build_truncated_words(fp, k, cap);
  const auto faith = faithfulness_report(fp, k, k, cap);
  const GeneratingSet s = GeneratingSet::full(fp.a(), fp.b());
  bool ok = faith.all_pass();

  json j{{"k", k}, {"word_count", uk.size()}, {"faithful", faith.all_pass()}};
  std::ostringstream csv;
  csv << "side,member_count,boundary,ratio,generator_count,half_or_less\n";
  for (Factor side : {Factor::A, Factor::B}) {
    const FolnerWitness w = folner_witness(fp, k, side, s, cap);
    ok = ok && w.boundary <= w.generator_count;
    csv << (side == Factor::A ? 'A' : 'B') << ',' << w.members.size() << ','
        << w.boundary << ',' << w.ratio.to_double() << ',' << w.generator_count
        << ',' << (w.is_half_or_less ? 1 : 0) << '\n';
  }
  if (with_cheeger && uk.size() <= kCheegerExactMaxVertices) {
    const auto rep = sigma(fp, k, cap);
    const auto h = cheeger_exact(schreier_graph(fp, rep, s));
    j["cheeger_num"] = h.value.num;
    j["cheeger_den"] = h.value.den;
  }
  std::cout << csv.str();
  if (!report.empty()) {
    open_report(report, "folner.csv") << csv.str();
    write_json(report, "baumslag.json", j);
  }
  std::cout << (ok ? "all checks pass\n" : "CHECK FAILED\n");
  return ok ? 0 : 1;
}

int run_tower(int rank, int depth, const std::string& report) {
  const Tower tower = build_tower(rank, depth, size_cap());
  std::ostringstream levels;
  levels << "level,vertices,edges,girth,walls\n";
  for (std::size_t i = 0; i < tower.levels.size(); ++i) {
    const TowerLevel& lv = tower.levels[i];
    levels << i + 1 << ',' << lv.vertex_count() << ',' << lv.graph.edges.size() << ','
           << (lv.girth ? std::to_string(*lv.girth) : "inf") << ','
           << lv.base_edge_count << '\n';
  }
  std::cout << levels.str();
  if (tower.truncated) std::cout << "truncated at cap\n";

  bool ok = !tower.levels.empty();
  const TowerLevel& top = tower.levels.back();
  if (top.has_walls() && !report.empty()) {
    auto wall_csv = open_report(report, "wall_metric.csv");
    wall_csv << "x,y,wall_distance,graph_distance\n";
    for (int x = 0; x < top.vertex_count(); ++x) {
      const auto d = top.graph.bfs_distances(x);
      for (int y = x + 1; y < top.vertex_count(); ++y) {
        const int dw = wall_metric(top, x, y);
        if (dw > d[y]) ok = false;
        wall_csv << x << ',' << y << ',' << dw << ',' << d[y] << '\n';
      }
    }
    const auto prof =
        profile(EmbeddingTable::single(wall_embedding(top)),
                MetricComponent::from_graph(top.graph));
    auto prof_csv = open_report(report, "profile.csv");
    prof_csv << "t,rho_minus,rho_plus\n";
    for (std::size_t i = 0; i < prof.t.size(); ++i)
      prof_csv << prof.t[i] << ',' << prof.rho_minus[i] << ',' << prof.rho_plus[i] << '\n';
  }
  if (!report.empty()) {
    open_report(report, "levels.csv") << levels.str();
    write_json(report, "tower.json",
               json{{"rank", rank},
                    {"depth_requested", depth},
                    {"depth_built", tower.levels.size()},
                    {"truncated", tower.truncated}});
  }
  return ok ? 0 : 1;
}

int run_bassserre(const std::string& a_spec, const std::string& b_spec, int radius,
                  const std::string& report) {
  FreeProduct fp(parse_group(a_spec), parse_group(b_spec));
  const QiReport qi = qi_report(fp, radius, size_cap());
  json j{{"radius", qi.radius},
         {"checked", qi.checked},
         {"violations", qi.violations},
         {"max_ratio_dt_over_len", qi.max_ratio_dt_over_len},
         {"max_len_minus_dt", qi.max_len_minus_dt},
         {"basis_distance_four", qi.basis_distance_four}};
  std::cout << j.dump(2) << '\n';
  if (!report.empty()) write_json(report, "bassserre.json", j);
  return (qi.violations == 0 && qi.basis_distance_four) ? 0 : 1;
}

int run_cheeger(const std::string& graph_path, bool spectral) {
  std::ifstream in(graph_path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + graph_path);
  const LabeledMultigraph g = LabeledMultigraph::read(in);
  if (g.vertex_count <= kCheegerExactMaxVertices) {
    const CheegerResult h = cheeger_exact(g);
    std::cout << "h = " << h.value << " witness size " << h.witness_set.size() << '\n';
  }
  if (spectral) {
    const CheegerResult s = cheeger_spectral(g);
    std::cout << "spectral interval [" << s.lower << ", " << s.upper << "]\n";
  }
  return 0;
}

int run_embed(int rank, int depth, int lmax, const std::string& report) {
  const Tower tower = build_tower(rank, depth, size_cap());
  const TowerLevel& top = tower.levels.back();
  if (!top.has_walls()) throw std::runtime_error("need depth >= 2 for wall data");
  const MetricComponent space = MetricComponent::from_graph(top.graph);
  const EmbeddingTable walls = EmbeddingTable::single(wall_embedding(top));

  std::vector<UnitVectorFamily> families;
  bool psd = true;
  for (int l = 1; l <= lmax; ++l) {
    const double t = 0.5 / std::pow(static_cast<double>(l), 2.5);
    GaussianFamily fam = gaussian_family(walls, t);
    psd = psd && fam.psd;
    families.push_back({l, std::move(fam.unit_vectors)});
  }
  const DirectSumResult sum = assemble_direct_sum(families, space);
  json j{{"rank", rank},
         {"depth", depth},
         {"l_max", lmax},
         {"gram_psd", psd},
         {"upper_bound_holds", sum.upper_bound_holds},
         {"staircase_holds", sum.staircase_holds},
         {"m_thresholds", sum.m_thresholds}};
  std::cout << j.dump(2) << '\n';
  if (!report.empty()) {
    write_json(report, "embed.json", j);
    const auto prof = profile(sum.embedding, space);
    auto csv = open_report(report, "embed_profile.csv");
    csv << "t,rho_minus,rho_plus\n";
    for (std::size_t i = 0; i < prof.t.size(); ++i)
      csv << prof.t[i] << ',' << prof.rho_minus[i] << ',' << prof.rho_plus[i] << '\n';
  }
  return (psd && sum.upper_bound_holds && sum.staircase_holds) ? 0 : 1;
}

int run_union(int rank, int levels, const std::string& report) {
  const Tower tower = build_tower(rank, levels, size_cap());
  std::vector<MetricComponent> comps;
  for (std::size_t i = 0; i < tower.levels.size(); ++i)
    comps.push_back(MetricComponent::from_graph(tower.levels[i].graph, 0,
                                                "level" + std::to_string(i + 1)));
  const CoarseUnion u = coarse_union(std::move(comps));
  const auto axioms = verify_coarse_union_axioms(u, {1, 10, 100});
  json j{{"components", u.components.size()},
         {"points", u.total_points()},
         {"axiom1", axioms.axiom1},
         {"axiom2", axioms.axiom2},
         {"max_cross_set_diameter", axioms.max_cross_set_diameter}};
  std::cout << j.dump(2) << '\n';
  if (!report.empty()) write_json(report, "union.json", j);
  return (axioms.axiom1 && axioms.axiom2) ? 0 : 1;
}

int run_treepartition(int trees, int vertices, int degree, unsigned seed, double r,
                      double eps, const std::string& report) {
  std::vector<LabeledMultigraph> corpus;
  for (int i = 0; i < trees; ++i)
    corpus.push_back(random_tree(vertices, degree, seed + static_cast<unsigned>(i)));
  const EquiExactCertificate cert = equi_exact_certificate(corpus, r, eps);
  json j{{"trees", trees},
         {"L", cert.L},
         {"C", cert.C},
         {"R", cert.R},
         {"eps", cert.eps},
         {"verified", cert.verified}};
  json per = json::array();
  for (const TreeCertificate& tc : cert.per_tree)
    per.push_back(json{{"L", tc.L},
                       {"C", tc.C},
                       {"max_l1_ratio", tc.max_l1_r_pairs},
                       {"verified_pairs", tc.verified_pairs}});
  j["per_tree"] = per;
  std::cout << "L=" << cert.L << " C=" << cert.C
            << (cert.verified ? " verified\n" : " REFUSED\n");
  if (!report.empty()) write_json(report, "treepartition.json", j);
  return cert.verified ? 0 : 1;
}

int run_extension(const std::string& a_spec, const std::string& b_spec, int k,
                  const std::string& report) {
  FreeProduct fp(parse_group(a_spec), parse_group(b_spec));
  const ExtensionExperiment ex = extension_experiment(fp, k, size_cap());
  json j{{"k", ex.k},
         {"tau", ex.tau},
         {"group_order", ex.group_order},
         {"fiber_order", ex.fiber_order},
         {"order_consistent", ex.order_consistent},
         {"relations_hold", ex.relations_hold},
         {"lower_holds", ex.lower_holds},
         {"upper_holds", ex.upper_holds},
         {"two_length_controls", ex.two_length_controls}};
  std::cout << j.dump(2) << '\n';
  if (!report.empty()) {
    write_json(report, "extension.json", j);
    auto csv = open_report(report, "extension_lengths.csv");
    csv << "fiber_vertex,comb_length,quotient_length\n";
    for (std::size_t v = 0; v < ex.fiber_comb_length.size(); ++v)
      csv << v << ',' << ex.fiber_comb_length[v] << ',' << ex.fiber_quotient_length[v]
          << '\n';
  }
  const bool ok = ex.order_consistent && ex.relations_hold && ex.lower_holds &&
                  ex.upper_holds && ex.two_length_controls;
  std::cout << (ok ? "all inequalities hold\n" : "CHECK FAILED\n");
  return ok ? 0 : 1;
}

int run_verify() {
  int failures = 0;
  auto check = [&](const std::string& name, bool pass) {
    std::cout << (pass ? "pass" : "FAIL") << "  " << name << '\n';
    if (!pass) ++failures;
  };
  const std::size_t cap = size_cap();
  FreeProduct fp(FiniteGroupTable::cyclic(2), FiniteGroupTable::cyclic(3));

  {
    const Tower t = build_tower(2, 2, cap);
    check("tower sizes 4/128",
          t.levels.size() == 2 && t.levels[0].vertex_count() == 4 &&
              t.levels[1].vertex_count() == 128);
    bool waller = true;
    const TowerLevel& top = t.levels[1];
    for (int x = 0; x < top.vertex_count() && waller; ++x) {
      const auto d = top.graph.bfs_distances(x);
      for (int y = x + 1; y < top.vertex_count(); ++y)
        if (wall_metric(top, x, y) > d[y]) waller = false;
    }
    check("wall metric below graph metric", waller);
  }
  check("cheeger C8 = 1/2", cheeger_exact(cycle_graph(8)).value == Rational(1, 2));
  check("faithfulness k<=4", [&] {
    for (int k = 1; k <= 4; ++k)
      if (!faithfulness_report(fp, k, k, cap).all_pass()) return false;
    return true;
  }());
  {
    const GeneratingSet s = GeneratingSet::full(fp.a(), fp.b());
    const FolnerWitness w = folner_witness(fp, 6, Factor::A, s, cap);
    check("folner boundary <= |S|", w.boundary <= w.generator_count);
  }
  {
    const QiReport qi = qi_report(fp, 3, cap);
    check("tree metric vs basis length", qi.violations == 0 && qi.basis_distance_four);
  }
  {
    const ExtensionExperiment ex = extension_experiment(fp, 1, cap);
    check("extension k=1", ex.order_consistent && ex.relations_hold && ex.lower_holds &&
                               ex.upper_holds);
  }
  {
    const auto cert = equi_exact_certificate({random_tree(300, 4, 7)}, 2.0, 1.0);
    check("tree partition certificate", cert.verified);
  }
  std::cout << (failures == 0 ? "verify: all pass\n"
                              : "verify: " + std::to_string(failures) + " failures\n");
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite quotients of free products: metrics, walls, expansion"};
  app.set_config("--config", "", "key=value config file; flags override");
  app.require_subcommand(1);

  std::string a_spec = "cyclic:2", b_spec = "cyclic:3", report, graph_path, out_path;
  std::string group_spec = "cyclic:2";
  int k = 2, rank = 2, depth = 2, radius = 3, lmax = 4, trees = 5, vertices = 300,
      degree = 4, levels = 4;
  unsigned seed = 1;
  double r_param = 2.0, eps = 1.0;
  bool with_cheeger = false, spectral = false;

  auto* group = app.add_subcommand("group", "validate and write a group table");
  group->add_option("--spec", group_spec, "cyclic:N | product:N1xN2 | file:PATH");
  group->add_option("--out", out_path, "write the table here");

  auto* baumslag = app.add_subcommand("baumslag", "permutation quotient and Folner report");
  baumslag->add_option("--a", a_spec);
  baumslag->add_option("--b", b_spec);
  baumslag->add_option("--k", k);
  baumslag->add_flag("--cheeger", with_cheeger, "exact Cheeger of the Schreier graph");
  baumslag->add_option("--report", report, "report directory");

  auto* tower = app.add_subcommand("tower", "square-quotient tower levels and walls");
  tower->add_option("--rank", rank);
  tower->add_option("--depth", depth);
  tower->add_option("--report", report);

  auto* bassserre = app.add_subcommand("bassserre", "tree distance vs basis length");
  bassserre->add_option("--a", a_spec);
  bassserre->add_option("--b", b_spec);
  bassserre->add_option("--radius", radius);
  bassserre->add_option("--report", report);

  auto* cheeger = app.add_subcommand("cheeger", "Cheeger constant of a graph file");
  cheeger->add_option("--graph", graph_path)->required();
  cheeger->add_flag("--spectral", spectral);

  auto* embed = app.add_subcommand("embed", "wall embedding and direct-sum assembly");
  embed->add_option("--rank", rank);
  embed->add_option("--depth", depth);
  embed->add_option("--lmax", lmax);
  embed->add_option("--report", report);

  auto* union_cmd = app.add_subcommand("union", "coarse disjoint union axioms");
  union_cmd->add_option("--rank", rank);
  union_cmd->add_option("--levels", levels);
  union_cmd->add_option("--report", report);

  auto* treepart = app.add_subcommand("treepartition", "equi-exactness certificates");
  treepart->add_option("--trees", trees);
  treepart->add_option("--vertices", vertices);
  treepart->add_option("--degree", degree);
  treepart->add_option("--seed", seed);
  treepart->add_option("--R", r_param);
  treepart->add_option("--eps", eps);
  treepart->add_option("--report", report);

  auto* extension = app.add_subcommand("extension", "extension quotient length comparison");
  extension->add_option("--a", a_spec);
  extension->add_option("--b", b_spec);
  extension->add_option("--k", k);
  extension->add_option("--report", report);

  auto* verify = app.add_subcommand("verify", "run the built-in invariant suite");

  CLI11_PARSE(app, argc, argv);
  try {
    if (group->parsed()) return run_group(group_spec, out_path);
    if (baumslag->parsed()) return run_baumslag(a_spec, b_spec, k, with_cheeger, report);
    if (tower->parsed()) return run_tower(rank, depth, report);
    if (bassserre->parsed()) return run_bassserre(a_spec, b_spec, radius, report);
    if (cheeger->parsed()) return run_cheeger(graph_path, spectral);
    if (embed->parsed()) return run_embed(rank, depth, lmax, report);
    if (union_cmd->parsed()) return run_union(rank, levels, report);
    if (treepart->parsed())
      return run_treepartition(trees, vertices, degree, seed, r_param, eps, report);
    if (extension->parsed()) return run_extension(a_spec, b_spec, k, report);
    if (verify->parsed()) return run_verify();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
