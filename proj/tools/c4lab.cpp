#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "c4lab/acceptance.hpp"
#include "c4lab/extremal.hpp"
#include "c4lab/geometry.hpp"
#include "c4lab/graph.hpp"
#include "c4lab/polarity.hpp"
#include "c4lab/report.hpp"
#include "c4lab/supersat.hpp"

namespace {

using namespace c4lab;
using graph::Edge;
using graph::Graph;

enum Exit { kOk = 0, kVerdict = 1, kUsage = 2, kIo = 3 };

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string subcommand;
  std::uint32_t q = 0;
  std::uint64_t t = 0;
  std::uint32_t n = 0;
  double delta = 0.25;
  std::optional<std::uint64_t> seed;
  std::uint32_t trials = 1;
  std::string in;
  std::string out;
  std::string format;
  unsigned threads = 0;
  bool timing = true;

  // Thread count stays out: reports must not depend on it.
  Json to_json() const {
    Json j{{"subcommand", subcommand}, {"q", q}, {"t", t}, {"n", n}, {"delta", delta},
           {"seed", seed ? Json(*seed) : Json(nullptr)}, {"trials", trials}, {"in", in}, {"out", out},
           {"format", format}};
    return j;
  }
};

std::string read_file(const std::string& path) {
  if (path.empty()) throw IoError("missing --in");
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open " + path);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty() || cfg.out == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw IoError("cannot write " + cfg.out);
  f << text;
  if (!f) throw IoError("write failed for " + cfg.out);
}

int emit_report(const RunConfig& cfg, ExperimentReport rep) {
  rep.set_config(cfg.to_json());
  if (cfg.format == "csv") {
    emit(cfg, ExperimentReport::csv_header() + rep.csv_row());
  } else {
    emit(cfg, rep.dump(cfg.timing));
  }
  if (!rep.passed()) {
    for (const auto& f : rep.failures()) std::cerr << "violated: " << f << '\n';
    return kVerdict;
  }
  return kOk;
}

Edge parse_edge(const std::string& s) {
  const auto dash = s.find_first_of("-:");
  if (dash == std::string::npos) throw CLI::ValidationError("edge", "expected u-v, got " + s);
  try {
    return {static_cast<graph::Vertex>(std::stoul(s.substr(0, dash))),
            static_cast<graph::Vertex>(std::stoul(s.substr(dash + 1)))};
  } catch (const std::exception&) {
    throw CLI::ValidationError("edge", "expected u-v, got " + s);
  }
}

std::vector<Edge> parse_edges(const std::vector<std::string>& items) {
  std::vector<Edge> out;
  for (const auto& s : items) out.push_back(parse_edge(s));
  return out;
}

Graph load_graph(const RunConfig& cfg) {
  try {
    return Graph::from_edge_list(read_file(cfg.in));
  } catch (const geometry::ParseError& e) {
    throw IoError(cfg.in + ": " + e.what());
  }
}

std::shared_ptr<const geometry::ProjectivePlane> plane_of(std::uint32_t q) {
  return std::make_shared<const geometry::ProjectivePlane>(geometry::build_pg2(field::FieldSpec::of_order(q)));
}

// Reads a polarity file (order on the first row) against PG(2, q).
polarity::Polarity load_polarity(const RunConfig& cfg) {
  const std::string text = read_file(cfg.in);
  std::istringstream is(text);
  std::string tok;
  while (is >> tok && tok.starts_with("#")) std::getline(is, tok);
  std::uint32_t q = 0;
  try {
    q = static_cast<std::uint32_t>(std::stoul(tok));
  } catch (const std::exception&) {
    throw IoError(cfg.in + ": missing order on the first row");
  }
  try {
    return polarity::Polarity::from_text(text, plane_of(q));
  } catch (const geometry::ParseError& e) {
    throw IoError(cfg.in + ": " + e.what());
  }
}

Json stats_json(const graph::GraphStats& s) {
  return Json{{"q", s.q},
              {"degree_histogram", s.degree_histogram},
              {"small_vertices", s.small.size()},
              {"total_deficiency", s.total_deficiency},
              {"two_paths", s.two_paths},
              {"uncovered_pairs", s.uncovered_pairs}};
}

int run_verify_all(const RunConfig& cfg, acceptance::Mode mode) {
  acceptance::Options opts;
  opts.mode = mode;
  opts.threads = cfg.threads;
  if (cfg.seed) opts.seed = *cfg.seed;
  bool ok = true;
  Json rows = Json::array();
  for (int id = 1; id <= acceptance::kCriterionCount; ++id) {
    const auto r = acceptance::run_criterion(id, opts);
    std::cerr << acceptance::format_line(r) << '\n';
    ok = ok && r.passed;
    rows.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}});
  }
  Json j{{"experiment", "verify_all"}, {"config", cfg.to_json()}, {"criteria", rows}, {"passed", ok}};
  emit(cfg, j.dump(2) + "\n");
  return ok ? kOk : kVerdict;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"c4lab: projective planes, polarity graphs and 4-cycle experiments"};
  app.require_subcommand(1);
  RunConfig cfg;
  app.add_option("--threads", cfg.threads, "worker threads (0: C4LAB_THREADS or hardware)");
  app.add_flag("!--no-timing", cfg.timing, "omit wall time from reports");

  std::function<int()> action;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help) {
    auto* sub = parent->add_subcommand(name, help);
    sub->add_option("--out,-o", cfg.out, "output path (default stdout)");
    return sub;
  };
  auto group = [&](const std::string& name, const std::string& help) {
    auto* g = app.add_subcommand(name, help);
    g->require_subcommand(1);
    return g;
  };

  // plane
  auto* plane = group("plane", "projective planes");
  auto* plane_build = leaf(plane, "build", "write PG(2,q) in incidence format");
  plane_build->add_option("--q", cfg.q, "order (prime power)")->required();
  plane_build->add_option("--format", cfg.format, "incidence|json")->check(CLI::IsMember({"incidence", "json"}));
  plane_build->callback([&] {
    action = [&] {
      const auto p = geometry::build_pg2(field::FieldSpec::of_order(cfg.q));
      if (cfg.format == "json") {
        ExperimentReport rep("plane_build");
        rep.params() = {{"q", cfg.q}};
        rep.measured() = {{"points", p.structure.n_points()}, {"lines", p.structure.n_lines()}};
        return emit_report(cfg, rep);
      }
      emit(cfg, p.structure.to_text());
      return int{kOk};
    };
  });
  auto* plane_verify = leaf(plane, "verify", "check the projective plane axioms");
  plane_verify->add_option("--in,-i", cfg.in, "incidence file")->required();
  plane_verify->callback([&] {
    action = [&] {
      geometry::IncidenceStructure s;
      try {
        s = geometry::IncidenceStructure::from_text(read_file(cfg.in));
      } catch (const geometry::ParseError& e) {
        throw IoError(cfg.in + ": " + e.what());
      }
      const auto v = geometry::verify_projective_plane(s);
      ExperimentReport rep("plane_verify");
      const auto order = geometry::plane_order_for(s.n_points());
      rep.params() = {{"q", order ? Json(*order) : Json(nullptr)}};
      rep.measured() = {{"points", s.n_points()}, {"lines", s.n_lines()}};
      for (auto a : {geometry::Axiom::Counts, geometry::Axiom::Uniformity, geometry::Axiom::Regularity,
                     geometry::Axiom::LineIntersection, geometry::Axiom::PointPairCoverage}) {
        const auto* bad = v.find(a);
        rep.verdict(std::string(geometry::to_string(a)), bad ? bad->message : "holds", bad == nullptr);
      }
      return emit_report(cfg, rep);
    };
  });

  // polarity
  auto* pol = group("polarity", "polarities and polarity graphs");
  auto* pol_build = leaf(pol, "build", "write the orthogonal polarity of PG(2,q)");
  pol_build->add_option("--q", cfg.q, "order")->required();
  pol_build->callback([&] {
    action = [&] {
      emit(cfg, polarity::orthogonal_polarity(field::FieldSpec::of_order(cfg.q)).to_text());
      return int{kOk};
    };
  });
  auto* pol_verify = leaf(pol, "verify", "check a polarity file against PG(2,q)");
  pol_verify->add_option("--in,-i", cfg.in, "polarity file")->required();
  pol_verify->callback([&] {
    action = [&] {
      const auto pi = load_polarity(cfg);
      const auto v = polarity::verify_polarity(pi);
      ExperimentReport rep("polarity_verify");
      rep.params() = {{"q", pi.q()}};
      rep.verdict("symmetric_incidence", v.ok ? "holds" : v.message, v.ok);
      return emit_report(cfg, rep);
    };
  });
  auto* pol_graph = leaf(pol, "graph", "polarity graph of a polarity file or of ER_q");
  pol_graph->add_option("--q", cfg.q, "order, for the orthogonal polarity");
  pol_graph->add_option("--in,-i", cfg.in, "polarity file");
  pol_graph->add_option("--format", cfg.format, "edge-list|json")->check(CLI::IsMember({"edge-list", "json"}));
  pol_graph->callback([&] {
    action = [&] {
      if (cfg.in.empty() && cfg.q == 0) throw CLI::ValidationError("polarity graph", "need --q or --in");
      const auto pg = cfg.in.empty() ? polarity::er_graph(cfg.q) : polarity::polarity_graph(load_polarity(cfg));
      if (cfg.format == "json") {
        ExperimentReport rep("polarity_graph");
        rep.params() = {{"q", pg.q}};
        rep.measured() = {{"vertices", pg.graph.n()}, {"edges", pg.graph.m()},
                          {"absolute_points", pg.absolute_count()}, {"m_pi", pg.m_pi}};
        rep.bounds() = {{"edges", polarity::polarity_edge_count(pg.q, pg.m_pi)}};
        rep.verdict("c4_free", "max codegree <= 1", true);
        return emit_report(cfg, rep);
      }
      emit(cfg, pg.graph.to_edge_list());
      return int{kOk};
    };
  });

  // graph
  auto* gr = group("graph", "edge-list graph tools");
  auto* g_count = leaf(gr, "count-c4", "exact 4-cycle count");
  g_count->add_option("--in,-i", cfg.in, "edge list")->required();
  g_count->callback([&] {
    action = [&] {
      const Graph g = load_graph(cfg);
      ExperimentReport rep("count_c4");
      rep.measured() = {{"vertices", g.n()}, {"edges", g.m()}, {"c4_count", graph::count_c4(g, cfg.threads)}};
      return emit_report(cfg, rep);
    };
  });
  auto* g_stats = leaf(gr, "stats", "degree, deficiency and 2-path statistics");
  g_stats->add_option("--in,-i", cfg.in, "edge list")->required();
  g_stats->add_option("--q", cfg.q, "target order")->required();
  g_stats->callback([&] {
    action = [&] {
      const Graph g = load_graph(cfg);
      const auto s = graph::up_p2_stats(g, cfg.q, cfg.threads);
      ExperimentReport rep("graph_stats");
      rep.params() = {{"q", cfg.q}};
      rep.measured() = stats_json(s);
      const std::uint64_t n = g.n();
      const bool c4_free = graph::is_c4_free(g);
      rep.measured()["c4_free"] = c4_free;
      if (c4_free) {
        rep.verdict("p2_plus_up", "|P2| + |UP| == C(n,2)", s.two_paths + s.uncovered_pairs == n * (n - 1) / 2);
      }
      return emit_report(cfg, rep);
    };
  });
  auto* g_family = leaf(gr, "family", "neighborhood family of low-degree-contact vertices");
  g_family->add_option("--in,-i", cfg.in, "edge list")->required();
  g_family->add_option("--q", cfg.q, "target order")->required();
  g_family->add_option("--delta", cfg.delta, "threshold in (0,1)");
  g_family->add_option("--format", cfg.format, "json|incidence")->check(CLI::IsMember({"json", "incidence"}));
  g_family->callback([&] {
    action = [&] {
      const Graph g = load_graph(cfg);
      const auto f = graph::neighborhood_family(g, cfg.q, cfg.delta);
      if (cfg.format == "incidence") {
        emit(cfg, f.family.to_text());
        return int{kOk};
      }
      ExperimentReport rep("neighborhood_family");
      rep.params() = {{"q", cfg.q}, {"delta", cfg.delta}};
      rep.measured() = {{"small", f.small.size()}, {"heavy", f.heavy.size()}, {"light", f.light.size()},
                        {"family_size", f.size()}, {"one_intersecting", f.one_intersecting}};
      return emit_report(cfg, rep);
    };
  });

  // turan
  auto* tu = group("turan", "Turan numbers");
  auto* tu_brute = leaf(tu, "brute", "exact ex(n,C4), or h(n,t) with --t");
  tu_brute->add_option("--n", cfg.n, "vertices")->required();
  std::optional<std::uint64_t> brute_t;
  tu_brute->add_option("--t", brute_t, "extra edges beyond ex(n,C4)");
  tu_brute->callback([&] {
    action = [&] {
      Json j;
      auto wit = [](const std::vector<Edge>& w) {
        Json a = Json::array();
        for (const auto& e : w) a.push_back({e.u, e.v});
        return a;
      };
      if (brute_t) {
        const auto r = extremal::h_bruteforce(cfg.n, *brute_t);
        j = {{"n", r.n}, {"t", r.t}, {"edges", r.edges}, {"value", r.min_c4}, {"method", "bruteforce"},
             {"witnesses", wit(r.witness)}};
      } else {
        const auto r = extremal::turan_bruteforce(cfg.n);
        j = {{"n", r.n}, {"value", r.ex_value}, {"method", r.method}, {"witnesses", wit(r.witness)}};
      }
      j["config"] = cfg.to_json();
      emit(cfg, j.dump(2) + "\n");
      return int{kOk};
    };
  });
  auto* tu_bounds = leaf(tu, "bounds", "Reiman bound, plane value and the even-q case split");
  tu_bounds->add_option("--n", cfg.n, "vertices");
  tu_bounds->add_option("--q", cfg.q, "plane order");
  std::optional<std::uint64_t> lambda;
  std::int64_t slack = 0;
  tu_bounds->add_option("--lambda", lambda, "certified lower bound on the largest polarity graph");
  tu_bounds->add_option("--slack", slack, "stand-in for the o(q) term");
  tu_bounds->callback([&] {
    action = [&] {
      Json j{{"config", cfg.to_json()}};
      if (cfg.n) j["reiman_bound"] = extremal::reiman_bound(cfg.n);
      if (cfg.q) {
        const auto f = extremal::furedi_value(cfg.q);
        j["plane_value"] = {{"q", cfg.q}, {"value", f.value}, {"excluded_q", f.excluded_q},
                            {"n", static_cast<std::uint64_t>(cfg.q) * cfg.q + cfg.q + 1}};
        if (lambda) {
          const auto d = extremal::corollary_turan_decision(cfg.q, *lambda, slack);
          j["decision"] = {{"threshold", d.threshold}, {"branch", d.branch}, {"bound", d.bound},
                           {"statement", d.statement}};
        }
      }
      if (!cfg.n && !cfg.q) throw CLI::ValidationError("turan bounds", "need --n or --q");
      emit(cfg, j.dump(2) + "\n");
      return int{kOk};
    };
  });
  auto* tu_lower = leaf(tu, "lower", "prime-window lower bound for general n");
  tu_lower->add_option("--n", cfg.n, "vertices")->required();
  tu_lower->callback([&] {
    action = [&] {
      const auto c = extremal::turan_lower_bound(cfg.n);
      auto cert = [](exact::Certainty x) {
        return x == exact::Certainty::True ? "true" : x == exact::Certainty::False ? "false" : "undecided";
      };
      ExperimentReport rep("turan_lower");
      rep.params() = {{"n", c.n}};
      rep.measured() = {{"x_floor", c.x_floor}, {"p", c.p}, {"bound", c.bound.str()}};
      rep.bounds() = {{"formula_approx", c.formula_approx}};
      rep.verdict("prime_in_window", "x - p <= x^0.525", c.window.in_window);
      rep.verdict("p_large", std::string("p >= sqrt(n) - n^0.2625 - 1: ") + cert(c.p_check),
                  c.p_check == exact::Certainty::True);
      rep.verdict("bound_vs_formula", std::string("p(p+1)^2/2 >= (n^1.5 - 3n^1.2625 + n)/2: ") + cert(c.bound_check),
                  c.bound_check == exact::Certainty::True);
      return emit_report(cfg, rep);
    };
  });

  // supersat
  auto* ss = group("supersat", "supersaturation experiments");
  std::vector<std::string> add_items, remove_items;
  graph::Vertex eu = 0, ev = 0;
  auto* ss_add = leaf(ss, "add-edge", "add one non-edge to ER_q");
  ss_add->add_option("--q", cfg.q, "order")->required();
  ss_add->add_option("--u", eu, "first endpoint")->required();
  ss_add->add_option("--v", ev, "second endpoint")->required();
  ss_add->callback([&] {
    action = [&] { return emit_report(cfg, supersat::add_edge_experiment(polarity::er_graph(cfg.q), eu, ev)); };
  });
  auto* ss_match = leaf(ss, "matching", "t-edge matching among degree-q vertices of ER_q");
  ss_match->add_option("--q", cfg.q, "even order")->required();
  ss_match->add_option("--t", cfg.t, "matching size")->required();
  ss_match->add_option("--seed", cfg.seed, "0 keeps index order");
  ss_match->callback([&] {
    action = [&] {
      return emit_report(cfg, supersat::matching_experiment(cfg.q, static_cast<std::uint32_t>(cfg.t), cfg.seed.value_or(0)));
    };
  });
  auto* ss_random = leaf(ss, "random", "ER_q plus random pairs with probability 4t/(q^3(q+1))");
  ss_random->add_option("--q", cfg.q, "order")->required();
  ss_random->add_option("--t", cfg.t, "target surplus")->required();
  ss_random->add_option("--trials", cfg.trials, "independent trials")->required();
  ss_random->add_option("--seed", cfg.seed, "stream seed")->required();
  ss_random->add_option("--format", cfg.format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
  ss_random->callback([&] {
    action = [&] { return emit_report(cfg, supersat::random_supersat(cfg.q, cfg.t, cfg.trials, *cfg.seed, cfg.threads)); };
  });
  auto* ss_half = leaf(ss, "halfway", "lower bound check for an edge-list graph");
  ss_half->add_option("--in,-i", cfg.in, "edge list on q^2+q+1 vertices")->required();
  ss_half->add_option("--q", cfg.q, "even order")->required();
  ss_half->add_option("--format", cfg.format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
  ss_half->callback([&] {
    action = [&] { return emit_report(cfg, supersat::halfway_bound_check(load_graph(cfg), cfg.q, cfg.threads)); };
  });
  auto* ss_class = leaf(ss, "classify", "ER_q + add - remove against sq +- s^2");
  ss_class->add_option("--q", cfg.q, "order")->required();
  ss_class->add_option("--add", add_items, "edges u-v")->delimiter(',')->required();
  ss_class->add_option("--remove", remove_items, "edges u-v")->delimiter(',');
  ss_class->callback([&] {
    action = [&] {
      const auto add = parse_edges(add_items);
      const auto rem = parse_edges(remove_items);
      return emit_report(cfg, supersat::classify_perturbation(polarity::er_graph(cfg.q), add, rem));
    };
  });
  auto* ss_audit = leaf(ss, "audit", "split the new 4-cycles of ER_q + add by added edges used");
  ss_audit->add_option("--q", cfg.q, "order")->required();
  ss_audit->add_option("--add", add_items, "edges u-v")->delimiter(',')->required();
  ss_audit->callback([&] {
    action = [&] {
      const auto add = parse_edges(add_items);
      return emit_report(cfg, supersat::upper_count_audit(polarity::er_graph(cfg.q), add).to_report(cfg.q));
    };
  });

  // verify
  auto* ver = group("verify", "acceptance suite");
  auto* ver_all = leaf(ver, "all", "run all acceptance criteria");
  bool quick = false, full = false;
  ver_all->add_flag("--quick", quick, "reduced sweeps");
  ver_all->add_flag("--full", full, "widened sweeps");
  ver_all->add_option("--seed", cfg.seed, "base seed");
  ver_all->callback([&] {
    action = [&] {
      if (quick && full) throw CLI::ValidationError("verify all", "--quick and --full are exclusive");
      return run_verify_all(cfg, quick ? acceptance::Mode::Quick : full ? acceptance::Mode::Full : acceptance::Mode::Standard);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  for (auto* g : app.get_subcommands()) {
    cfg.subcommand = g->get_name();
    for (auto* s : g->get_subcommands()) cfg.subcommand += " " + s->get_name();
  }

  try {
    return action ? action() : int{kUsage};
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kVerdict;
  }
}
