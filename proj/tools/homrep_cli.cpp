// homrep: homology representation of graph automorphism groups.
//
//   homrep info     --input g.txt
//   homrep rep      --family cycle 4 [--tree rand --seed 3] [--mod-p 3] [--kernel-only]
//   homrep classify --g6 'D?{'
//   homrep verify   --n-max 6 [--sample 200] [--seeds 1,2,3,4,5]
//   homrep gen      --n 4 --k 2 --spec '[-1,0]' --spec '[-1,0,1]'
//
// Exit codes: 0 success / faithful, 2 input error, 3 not faithful,
// 4 automorphism cap exceeded, 5 verification disagreement.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "homrep/automorphism.hpp"
#include "homrep/blocks.hpp"
#include "homrep/classifier.hpp"
#include "homrep/cycle_space.hpp"
#include "homrep/errors.hpp"
#include "homrep/families.hpp"
#include "homrep/graph.hpp"
#include "homrep/representation.hpp"
#include "homrep/verify.hpp"

namespace {

using namespace homrep;
using nlohmann::json;

enum Exit : int {
  kOk = 0,
  kInternal = 1,
  kInputError = 2,
  kNotFaithful = 3,
  kCapacity = 4,
  kDisagreement = 5,
};

struct RunConfig {
  std::string input;
  std::vector<std::string> family;
  std::string g6;
  std::string tree = "det";
  std::uint64_t seed = 1;
  std::size_t cap = kDefaultAutomorphismCap;
  std::optional<std::int64_t> mod_p;
  bool json = false;
  bool kernel_only = false;
};

void add_input_options(CLI::App* cmd, RunConfig& cfg) {
  auto* in = cmd->add_option("--input", cfg.input, "Edge-list file");
  auto* fam = cmd->add_option("--family", cfg.family, "Named family and size, e.g. --family cycle 5")->expected(2);
  auto* g6 = cmd->add_option("--g6", cfg.g6, "graph6 string");
  in->excludes(fam, g6);
  fam->excludes(g6);
  cmd->add_flag("--json", cfg.json, "Emit JSON");
}

Graph load_graph(const RunConfig& cfg) {
  if (!cfg.input.empty()) {
    std::ifstream file(cfg.input);
    if (!file) throw PreconditionError("cannot open " + cfg.input);
    std::stringstream buf;
    buf << file.rdbuf();
    return parse_edge_list(buf.str());
  }
  if (!cfg.family.empty()) {
    int size = 0;
    try {
      size = std::stoi(cfg.family[1]);
    } catch (const std::exception&) {
      throw ParseError("family size must be an integer");
    }
    return named_family(cfg.family[0], size);
  }
  if (!cfg.g6.empty()) return parse_graph6(cfg.g6);
  throw PreconditionError("no input: use --input, --family or --g6");
}

Graph load_connected(const RunConfig& cfg) {
  Graph g = load_graph(cfg);
  require_connected(g);
  return g;
}

SpanningTreeBasis choose_basis(const Graph& g, const RunConfig& cfg) {
  if (cfg.tree == "det") return spanning_tree_basis(g);
  if (cfg.tree == "rand") return random_spanning_tree_basis(g, cfg.seed);
  throw PreconditionError("--tree must be det or rand");
}

std::string perm_text(const Automorphism& f) {
  std::string s = "[";
  for (int v = 0; v < f.size(); ++v) s += (v ? " " : "") + std::to_string(f(v));
  return s + "]";
}

std::string set_text(const std::vector<Vertex>& vs) {
  std::string s = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? "," : "") + std::to_string(vs[i]);
  return s + "}";
}

json edges_json(std::span<const Edge> edges) {
  json out = json::array();
  for (const Edge& e : edges) out.push_back({e.u, e.v});
  return out;
}

int cmd_info(const RunConfig& cfg) {
  const Graph g = load_connected(cfg);
  const int b = betti(g);
  const auto d = block_decomposition(g);
  const auto t = block_tree(d);
  const auto pendants = b >= 1 ? pendant_trees(g) : std::vector<PendantTree>{};
  const auto per = is_periodic_unicyclic(g);

  if (cfg.json) {
    json pend = json::array();
    for (const auto& s : pendants) {
      pend.push_back({{"root", s.root}, {"vertices", s.vertices}, {"rigid", is_rigid_pendant_tree(s)}});
    }
    json out = {{"n", g.order()},
                {"e", g.size()},
                {"betti", b},
                {"blocks", d.blocks},
                {"cutvertices", d.cutvertices},
                {"bridges", edges_json(d.bridges)},
                {"block_tree", block_tree_to_json(d, t)},
                {"pendant_trees", pend},
                {"unicyclic", b == 1},
                {"periodic", per.periodic}};
    if (per.period) out["period"] = *per.period;
    std::cout << out.dump(2) << '\n';
    return kOk;
  }

  std::cout << "n " << g.order() << "\ne " << g.size() << "\nbetti " << b << '\n';
  std::cout << "blocks " << d.blocks.size() << ':';
  for (const auto& blk : d.blocks) std::cout << ' ' << set_text(blk);
  std::cout << "\ncutvertices:";
  for (Vertex c : d.cutvertices) std::cout << ' ' << c;
  std::cout << "\nbridges:";
  for (const Edge& e : d.bridges) std::cout << ' ' << e.u << '-' << e.v;
  std::cout << "\nblock tree centre: ";
  if (t.centre >= 0) {
    const auto& node = t.nodes[t.centre];
    if (node.kind == BlockTree::Node::Kind::kBlock) {
      std::cout << "block " << set_text(d.blocks[node.id]);
    } else {
      std::cout << "cutvertex " << node.id;
    }
  }
  std::cout << "\npendant trees: " << pendants.size() << '\n';
  for (const auto& s : pendants) {
    std::cout << "  root " << s.root << ' ' << set_text(s.vertices)
              << (is_rigid_pendant_tree(s) ? " rigid" : " symmetric") << '\n';
  }
  std::cout << "unicyclic " << (b == 1 ? "yes" : "no") << '\n';
  std::cout << "periodic " << (per.periodic ? "yes period " + std::to_string(*per.period) : "no") << '\n';
  return kOk;
}

int cmd_rep(const RunConfig& cfg) {
  const Graph g = load_connected(cfg);
  const auto basis = choose_basis(g, cfg);
  const auto rep = representation(g, basis, cfg.cap);
  std::vector<Automorphism> group;
  for (const auto& [f, m] : rep.matrices) group.push_back(f);
  std::optional<std::vector<Automorphism>> kernel_p;
  if (cfg.mod_p) kernel_p = kernel_mod_p(basis, group, *cfg.mod_p);

  auto shown = [&](const Automorphism& f, const IntMatrix& m) { return !cfg.kernel_only || is_identity(m); };

  if (cfg.json) {
    json mats = json::array();
    for (const auto& [f, m] : rep.matrices) {
      if (!shown(f, m)) continue;
      json entry = {{"automorphism", f.perm()}, {"matrix", matrix_to_json(m)}};
      if (cfg.mod_p) entry["matrix_mod_p"] = matrix_to_json(matrix_mod_p(m, *cfg.mod_p));
      mats.push_back(std::move(entry));
    }
    json kernel = json::array();
    for (const auto& f : rep.kernel) kernel.push_back(f.perm());
    json out = {{"tree", cfg.tree},
                {"basis", basis_to_json(basis)},
                {"group_order", rep.group_order()},
                {"matrices", std::move(mats)},
                {"kernel", std::move(kernel)},
                {"faithful", rep.faithful}};
    if (cfg.tree == "rand") out["seed"] = cfg.seed;
    if (cfg.mod_p) {
      json kp = json::array();
      for (const auto& f : *kernel_p) kp.push_back(f.perm());
      out["p"] = *cfg.mod_p;
      out["kernel_mod_p"] = std::move(kp);
    }
    std::cout << out.dump(2) << '\n';
    return kOk;
  }

  std::cout << "# spanning tree: " << (cfg.tree == "rand" ? "random seed " + std::to_string(cfg.seed) : "deterministic")
            << ", root " << basis.root() << '\n';
  std::cout << "tree edges:";
  for (const Edge& e : basis.tree_edges()) std::cout << ' ' << e.u << '-' << e.v;
  std::cout << "\ncotree darts:";
  for (const Dart& x : basis.cotree()) std::cout << " (" << x.tail << ',' << x.head << ')';
  std::cout << "\ngroup order " << rep.group_order() << '\n';
  for (const auto& [f, m] : rep.matrices) {
    if (!shown(f, m)) continue;
    std::cout << "automorphism " << perm_text(f) << '\n' << to_text(m);
    if (cfg.mod_p) std::cout << "mod " << *cfg.mod_p << ":\n" << to_text(matrix_mod_p(m, *cfg.mod_p));
  }
  std::cout << "kernel " << rep.kernel.size() << ':';
  for (const auto& f : rep.kernel) std::cout << ' ' << perm_text(f);
  std::cout << '\n';
  if (cfg.mod_p) {
    std::cout << "kernel mod " << *cfg.mod_p << ' ' << kernel_p->size() << ':';
    for (const auto& f : *kernel_p) std::cout << ' ' << perm_text(f);
    std::cout << '\n';
  }
  std::cout << "faithful " << (rep.faithful ? "yes" : "no") << '\n';
  return kOk;
}

int cmd_classify(const RunConfig& cfg) {
  const Graph g = load_connected(cfg);
  const Verdict v = classify(g);
  if (cfg.json) {
    std::cout << verdict_to_json(v).dump() << '\n';
  } else if (v.faithful) {
    std::cout << "faithful\n";
  } else {
    std::cout << "not faithful: " << to_string(v.reason);
    if (v.root) std::cout << " root " << *v.root;
    if (v.period) std::cout << " period " << *v.period;
    std::cout << '\n';
  }
  return v.faithful ? kOk : kNotFaithful;
}

struct VerifyOptions {
  int n_max = 6;
  std::size_t sample = 200;
  std::string seeds = "1,2,3,4,5";
  std::size_t cap = kDefaultAutomorphismCap;
  bool json = false;
};

int cmd_verify(const VerifyOptions& opt) {
  VerifyConfig cfg;
  if (opt.n_max < 2 || opt.n_max > 6) {
    throw PreconditionError("--n-max must satisfy 2 <= n <= 6, got " + std::to_string(opt.n_max));
  }
  cfg.n_max = opt.n_max;
  cfg.pair_samples = opt.sample;
  cfg.cap = opt.cap;
  cfg.basis_seeds.clear();
  std::stringstream ss(opt.seeds);
  for (std::string tok; std::getline(ss, tok, ',');) {
    try {
      cfg.basis_seeds.push_back(std::stoull(tok));
    } catch (const std::exception&) {
      throw ParseError("bad seed '" + tok + "'");
    }
  }

  std::ostream& log = opt.json ? std::cerr : std::cout;
  log << "# verify n_max=" << cfg.n_max << " sample=" << cfg.pair_samples << " seeds=" << opt.seeds
      << " sample_seed=" << cfg.sample_seed << " family_seed=" << cfg.family_seed << '\n';
  const auto results = run_verification(cfg, [&](const std::string& s) { log << s << std::endl; });

  bool ok = true;
  json out = json::array();
  for (const auto& r : results) {
    ok = ok && r.passed;
    if (opt.json) {
      json entry = {{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"checked", r.checked},
                    {"violations", r.violations}, {"notes", r.notes}};
      if (r.reproducer) {
        entry["reproducer"] = *r.reproducer;
        entry["detail"] = r.detail;
      }
      out.push_back(std::move(entry));
      continue;
    }
    std::cout << (r.passed ? "PASS" : "FAIL") << " [" << r.id << "] " << r.title << " (" << r.checked
              << " checked, " << r.violations << " violations)\n";
    for (const auto& note : r.notes) std::cout << "  note: " << note << '\n';
    if (r.reproducer) std::cout << "  first disagreement: " << r.detail << '\n' << *r.reproducer;
  }
  if (opt.json) std::cout << out.dump(2) << '\n';
  return ok ? kOk : kDisagreement;
}

struct GenOptions {
  int n = 0;
  int k = 0;
  std::vector<std::string> specs;
  bool json = false;
};

int cmd_gen(const GenOptions& opt) {
  std::vector<RootedTreeSpec> specs;
  for (const auto& s : opt.specs) specs.push_back(RootedTreeSpec::parse(s));
  const auto inst = build_periodic_unicyclic(opt.n, opt.k, specs);
  if (opt.json) {
    json out = {{"n", inst.graph.order()},
                {"edges", edges_json(inst.graph.edges())},
                {"edge_list", to_edge_list(inst.graph)},
                {"rotation", inst.rotation.perm()},
                {"rotation_order", inst.rotation.order()}};
    std::cout << out.dump(2) << '\n';
    return kOk;
  }
  std::cout << to_edge_list(inst.graph) << "# rotation:";
  for (Vertex v : inst.rotation.perm()) std::cout << ' ' << v;
  std::cout << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Automorphism groups acting on the cycle space of a graph"};
  app.require_subcommand(1);

  RunConfig run;
  auto* info = app.add_subcommand("info", "Betti number, blocks, block tree, pendant trees, periodicity");
  add_input_options(info, run);

  auto* rep = app.add_subcommand("rep", "Matrices of every automorphism, kernel and faithfulness");
  add_input_options(rep, run);
  rep->add_option("--tree", run.tree, "Spanning tree: det or rand")->check(CLI::IsMember({"det", "rand"}));
  rep->add_option("--seed", run.seed, "Seed for --tree rand");
  rep->add_option("--cap", run.cap, "Automorphism group order limit")->check(CLI::PositiveNumber);
  rep->add_option("--mod-p", run.mod_p, "Also reduce matrices modulo this prime");
  rep->add_flag("--kernel-only", run.kernel_only, "Only print kernel matrices");

  auto* cls = app.add_subcommand("classify", "Structural faithfulness verdict (exit 0 faithful, 3 not)");
  add_input_options(cls, run);

  VerifyOptions vopt;
  auto* ver = app.add_subcommand("verify", "Exhaustive cross-check on all small connected graphs");
  ver->add_option("--n-max", vopt.n_max, "Largest order to enumerate (2..6)");
  ver->add_option("--sample", vopt.sample, "Random automorphism pairs per graph at n = 6");
  ver->add_option("--seeds", vopt.seeds, "Comma-separated random spanning tree seeds");
  ver->add_option("--cap", vopt.cap, "Automorphism group order limit")->check(CLI::PositiveNumber);
  ver->add_flag("--json", vopt.json, "Emit JSON summary");

  GenOptions gopt;
  auto* gen = app.add_subcommand("gen", "Build a periodic unicyclic graph and its rotation");
  gen->add_option("--n", gopt.n, "Cycle length")->required();
  gen->add_option("--k", gopt.k, "Period")->required();
  gen->add_option("--spec", gopt.specs, "Rooted tree parent list, one per residue class, e.g. [-1,0,0]")
      ->allow_extra_args(false);
  gen->add_flag("--json", gopt.json, "Emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*info) return cmd_info(run);
    if (*rep) {
      if (run.mod_p && !is_prime(*run.mod_p)) throw PreconditionError("--mod-p must be prime");
      return cmd_rep(run);
    }
    if (*cls) return cmd_classify(run);
    if (*ver) return cmd_verify(vopt);
    if (*gen) return cmd_gen(gopt);
  } catch (const CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << '\n';
    return kCapacity;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kInternal;
}
