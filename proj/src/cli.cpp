#include "geohull/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>

#include "geohull/chordal.hpp"
#include "geohull/convexity.hpp"
#include "geohull/error.hpp"
#include "geohull/fixtures.hpp"
#include "geohull/hull_solver.hpp"
#include "geohull/io.hpp"
#include "geohull/reduction.hpp"

namespace geohull::cli {

namespace {

struct Flags {
  std::string graph;
  std::string set;
  std::string cnf;
  std::string out_graph;
  std::string out_labels;
  std::string fixture;
  std::uint64_t seed = 0;
  std::size_t n = 0;
  std::size_t budget = 0;
  bool oracle = false;
};

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::IoError:
    case ErrorCode::ParseError:
    case ErrorCode::InvalidEdge:
      return kInputError;
    default:
      return kPrecondition;
  }
}

void write_text_file(const std::string& path, const std::function<void(std::ostream&)>& body) {
  std::ofstream file(path);
  if (!file) throw Error(ErrorCode::IoError, "cannot write '" + path + "'");
  body(file);
  if (!file) throw Error(ErrorCode::IoError, "write to '" + path + "' failed");
}

std::optional<std::size_t> budget_of(const CLI::App& sub, const Flags& flags) {
  if (sub.count("--budget") == 0) return std::nullopt;
  return flags.budget;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Geodetic convexity toolkit: intervals, hulls, hull numbers, chordality, and the "
               "SAT-to-hull-number reduction.",
               "geohull"};
  app.require_subcommand(1);
  Flags flags;

  // Each subcommand sets `action`; it runs after a successful parse.
  std::function<int()> action;

  auto add_graph = [&](CLI::App* sub) {
    sub->add_option("--graph", flags.graph, "Graph file")->required();
  };
  auto add_set = [&](CLI::App* sub) {
    sub->add_option("--set", flags.set, "Comma-separated 0-based vertex indices")->required();
  };
  auto add_cnf = [&](CLI::App* sub) {
    sub->add_option("--cnf", flags.cnf, "DIMACS CNF file")->required();
  };

  auto set_command = [&](const char* name, const char* help,
                         std::function<VertexSet(const Geodesics&, const VertexSet&)> op) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_graph(sub);
    add_set(sub);
    sub->callback([&, op] {
      action = [&, op] {
        const Geodesics geo(read_graph_file(flags.graph));
        out << format_vertex_set(op(geo, parse_vertex_set(flags.set, geo.order()))) << '\n';
        return kOk;
      };
    });
  };
  auto predicate_command = [&](const char* name, const char* help,
                               std::function<bool(const Geodesics&, const VertexSet&)> op) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_graph(sub);
    add_set(sub);
    sub->callback([&, op] {
      action = [&, op] {
        const Geodesics geo(read_graph_file(flags.graph));
        out << (op(geo, parse_vertex_set(flags.set, geo.order())) ? "true" : "false") << '\n';
        return kOk;
      };
    });
  };

  set_command("interval", "Vertices on shortest paths between members of the set",
              [](const Geodesics& g, const VertexSet& s) { return interval(g, s); });
  set_command("hull", "Smallest convex superset of the set",
              [](const Geodesics& g, const VertexSet& s) { return hull(g, s); });
  predicate_command("convex", "Whether the set is convex",
                    [](const Geodesics& g, const VertexSet& s) { return is_convex(g, s); });
  predicate_command("concave", "Whether the complement of the set is convex",
                    [](const Geodesics& g, const VertexSet& s) { return is_concave(g, s); });

  CLI::App* hullnum = app.add_subcommand("hullnum", "Hull number with a minimum hull set");
  add_graph(hullnum);
  hullnum->add_flag("--oracle", flags.oracle, "Use exhaustive subset enumeration");
  hullnum->add_option("--budget", flags.budget, "Maximum number of hull evaluations");
  hullnum->callback([&] {
    action = [&] {
      const Geodesics geo(read_graph_file(flags.graph));
      const HullNumberResult r = flags.oracle ? hull_number_bruteforce(geo)
                                              : hull_number_exact(geo, budget_of(*hullnum, flags));
      out << "h=" << r.hull_number << '\n' << "witness=" << format_vertex_set(r.witness) << '\n';
      return kOk;
    };
  });

  CLI::App* simplicial = app.add_subcommand("simplicial", "Vertices whose neighborhood is a clique");
  add_graph(simplicial);
  simplicial->callback([&] {
    action = [&] {
      out << format_vertex_set(simplicial_vertices(read_graph_file(flags.graph))) << '\n';
      return kOk;
    };
  });

  CLI::App* chordal = app.add_subcommand("chordal", "Chordality test with a perfect elimination ordering");
  add_graph(chordal);
  chordal->callback([&] {
    action = [&] {
      const auto peo = chordality(read_graph_file(flags.graph));
      out << "chordal=" << (peo ? "true" : "false") << '\n';
      if (peo) {
        for (std::size_t i = 0; i < peo->size(); ++i) out << (i ? " " : "") << (*peo)[i];
        out << '\n';
      }
      return kOk;
    };
  });

  CLI::App* deps = app.add_subcommand("deps", "All interval dependencies {u,v} -> w");
  add_graph(deps);
  deps->callback([&] {
    action = [&] {
      for (const auto& d : interval_dependencies(read_graph_file(flags.graph))) {
        out << '{' << d.u << ',' << d.v << "} -> " << d.w << '\n';
      }
      return kOk;
    };
  });

  CLI::App* reduce = app.add_subcommand("reduce", "Build the reduction graph of a restricted CNF");
  add_cnf(reduce);
  reduce->add_option("--out-graph", flags.out_graph, "Write the graph here instead of stdout");
  reduce->add_option("--out-labels", flags.out_labels, "Write the vertex role labels here");
  reduce->callback([&] {
    action = [&] {
      const ReductionGraph rg = build_reduction(read_dimacs_file(flags.cnf));
      if (flags.out_graph.empty()) {
        write_graph(out, rg.graph);
      } else {
        write_graph_file(flags.out_graph, rg.graph);
      }
      if (!flags.out_labels.empty()) {
        write_text_file(flags.out_labels, [&](std::ostream& f) { write_labels(f, rg); });
      }
      if (!flags.out_graph.empty()) {
        out << "n=" << rg.n << " m=" << rg.m << " k=" << rg.k() << " vertices=" << rg.graph.order()
            << " edges=" << rg.graph.size() << '\n';
      }
      return kOk;
    };
  });

  CLI::App* verify = app.add_subcommand("verify-reduction", "Check the structural claims on a reduction");
  add_cnf(verify);
  verify->callback([&] {
    action = [&] {
      const Report report = verify_structure(build_reduction(read_dimacs_file(flags.cnf)));
      out << report.render();
      return report.passed() ? kOk : kCheckFailed;
    };
  });

  CLI::App* equiv = app.add_subcommand("equiv", "Satisfiability versus hull number <= 4n");
  add_cnf(equiv);
  equiv->add_option("--budget", flags.budget, "Maximum number of hull evaluations");
  equiv->callback([&] {
    action = [&] {
      const EquivalenceReport r = equivalence_check(
          read_dimacs_file(flags.cnf), {.max_variables = 12, .node_budget = budget_of(*equiv, flags)});
      out << r.report.render();
      return r.report.passed() ? kOk : kCheckFailed;
    };
  });

  CLI::App* fixture = app.add_subcommand("fixture", "Emit a built-in fixture");
  fixture->add_option("name", flags.fixture, "fig2 (graph) or sample-cnf (DIMACS)")
      ->required()
      ->check(CLI::IsMember({"fig2", "sample-cnf"}));
  fixture->add_option("--out-graph", flags.out_graph, "Write the graph here instead of stdout");
  fixture->callback([&] {
    action = [&] {
      if (flags.fixture == "sample-cnf") {
        write_dimacs(out, fixture_sample_cnf());
      } else if (flags.out_graph.empty()) {
        write_graph(out, fixture_fig2());
      } else {
        write_graph_file(flags.out_graph, fixture_fig2());
      }
      return kOk;
    };
  });

  CLI::App* gen = app.add_subcommand("gen-cnf", "Random restricted CNF in DIMACS format");
  gen->add_option("--n", flags.n, "Number of variables")->required()->check(CLI::PositiveNumber);
  gen->add_option("--seed", flags.seed, "Random seed");
  gen->callback([&] {
    action = [&] {
      write_dimacs(out, random_restricted_cnf(flags.n, flags.seed));
      return kOk;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  try {
    return action();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
}

}  // namespace geohull::cli
