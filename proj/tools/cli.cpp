#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

#include "bistellar/anneal.hpp"
#include "bistellar/canon.hpp"
#include "bistellar/error.hpp"
#include "bistellar/explorer.hpp"
#include "bistellar/flips.hpp"
#include "bistellar/generators.hpp"
#include "bistellar/homology.hpp"
#include "bistellar/io.hpp"

namespace bistellar::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string hex64(std::uint64_t h) {
  std::ostringstream s;
  s << "0x" << std::hex << std::setw(16) << std::setfill('0') << h;
  return s.str();
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

struct Options {
  std::string input = "-";
  std::string output = "-";
  std::string trace;
  std::string manifest;
  std::string dump;
  std::string kinds;
  std::string objective = "stacked";
  bool relabel = false;
  std::uint64_t seed = 1;
  std::size_t n = 0;
  std::size_t steps = 0;
  std::size_t threads = 1;
  std::size_t max_classes = 0;
  std::size_t max_depth = 0;
  std::size_t max_flips = 100000;
  std::size_t steps_per_temperature = 200;
  double initial_temperature = 0.0;
  double cooling = 0.99;
  std::int64_t weight = 0;
};

class Session {
 public:
  Session(std::istream& in, std::ostream& out, std::ostream& err) : in_(in), out_(out), err_(err) {}

  Triangulation load(const Options& o) {
    auto t = o.input == "-" ? read_triangulation(in_, o.relabel ? Relabel::Contiguous : Relabel::Preserve)
                            : load_triangulation(o.input, o.relabel ? Relabel::Contiguous : Relabel::Preserve);
    inputs_.push_back({{"path", o.input}, {"canonical_hash", hex64(canonical_form(t).hash)}});
    return t;
  }

  // Writes to a path, or to standard output for "-".
  void emit(const std::string& path, const std::string& text) {
    if (path == "-") {
      out_ << text;
      return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot write '" + path + "'");
    f << text;
  }

  void stat(const std::string& key, const std::string& value) { stats_ << key << '=' << value << '\n'; }
  template <typename T>
  void stat(const std::string& key, const T& value) {
    stats_ << key << '=' << value << '\n';
  }

  // Stats go to standard output unless that stream carries facets.
  void flush_stats(bool stdout_taken) {
    (stdout_taken ? err_ : out_) << stats_.str();
    stats_.str({});
  }

  void write_manifest(const std::string& command, const Options& o, const nlohmann::json& params) {
    if (o.manifest.empty()) return;
    nlohmann::json m;
    m["command"] = command;
    m["tool_version"] = kToolVersion;
    m["rng_seed"] = o.seed;
    m["parameters"] = params;
    m["inputs"] = inputs_;
    emit(o.manifest, m.dump(2) + "\n");
  }

 private:
  std::istream& in_;
  std::ostream& out_;
  std::ostream& err_;
  std::ostringstream stats_;
  nlohmann::json inputs_ = nlohmann::json::array();
};

SearchLimits limits_of(const Options& o) {
  SearchLimits l;
  if (o.max_classes) l.max_classes = o.max_classes;
  if (o.max_depth) l.max_depth = o.max_depth;
  return l;
}

std::vector<FlipKind> kinds_of(const Options& o, const std::string& fallback) {
  try {
    return parse_kinds(o.kinds.empty() ? fallback : o.kinds);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

std::string trace_text(std::span<const FlipMove> moves) {
  std::ostringstream s;
  write_trace(s, moves);
  return s.str();
}

AnnealConfig anneal_config(const Options& o) {
  AnnealConfig c;
  c.initial_temperature = o.initial_temperature;
  c.cooling_factor = o.cooling;
  c.steps_per_temperature = o.steps_per_temperature;
  c.max_flips = o.max_flips;
  c.rng_seed = o.seed;
  try {
    c.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return c;
}

void report_anneal(Session& s, const AnnealResult& r) {
  s.stat("success", bool_text(r.success));
  s.stat("best_cost", r.best_cost);
  s.stat("proposals", r.proposals);
  s.stat("accepted", r.accepted);
  s.stat("trace_length", r.trace.size());
  const auto fv = r.final.f_vector();
  s.stat("final_fvector", std::to_string(fv.v) + " " + std::to_string(fv.e) + " " + std::to_string(fv.f) + " " +
                              std::to_string(fv.t));
  s.stat("final_stacked_potential", stacked_potential(r.final));
}

void dump_classes(const std::string& dir, const ComponentReport& report) {
  std::filesystem::create_directories(dir);
  std::ofstream index(std::filesystem::path(dir) / "classes.txt", std::ios::binary);
  index << "# index depth seed hash\n";
  for (std::size_t i = 0; i < report.classes.size(); ++i) {
    const auto& rec = report.classes[i];
    index << i << ' ' << rec.depth << ' ' << (rec.seed ? 1 : 0) << ' ' << hex64(rec.form.hash) << '\n';
    std::ostringstream name;
    name << "class_" << std::setw(6) << std::setfill('0') << i << ".facets";
    std::ofstream f(std::filesystem::path(dir) / name.str(), std::ios::binary);
    write_facets(f, to_triangulation(rec.form));
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bistellar flips on triangulated 3-spheres", "bistellar"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  Options o;
  Session session(in, out, err);
  std::function<void()> action;
  std::string command;

  auto input_cmd = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("input", o.input, "facet file, '-' for standard input")->capture_default_str();
    sub->add_flag("--relabel", o.relabel, "relabel vertices to 1..n on input");
    sub->add_option("--manifest", o.manifest, "write a JSON run manifest here");
    return sub;
  };
  auto output_opt = [&](CLI::App* sub) {
    sub->add_option("-o,--output", o.output, "facet output path, '-' for standard output")->capture_default_str();
  };
  auto search_opts = [&](CLI::App* sub) {
    sub->add_option("--max-classes", o.max_classes, "stop after this many classes (0 = unlimited)");
    sub->add_option("--max-depth", o.max_depth, "BFS radius limit (0 = unlimited)");
    sub->add_option("--threads", o.threads, "worker threads for frontier expansion")->capture_default_str();
  };
  auto anneal_opts = [&](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "RNG seed")->capture_default_str();
    sub->add_option("--max-flips", o.max_flips, "proposal budget")->capture_default_str();
    sub->add_option("--t0", o.initial_temperature, "initial temperature (0 = 3*(n-5))")->capture_default_str();
    sub->add_option("--cooling", o.cooling, "geometric cooling factor")->capture_default_str();
    sub->add_option("--steps-per-temp", o.steps_per_temperature, "proposals per temperature")->capture_default_str();
    sub->add_option("--trace", o.trace, "write the flip trace here ('-' for standard output)");
  };

  auto* validate = input_cmd("validate", "check a facet file");
  validate->callback([&] {
    command = "validate";
    action = [&] {
      auto t = session.load(o);
      session.stat("valid", "true");
      session.stat("n", t.n());
      session.stat("facets", t.facets().size());
      session.stat("neighborly", bool_text(t.is_neighborly()));
      session.flush_stats(false);
    };
  });

  auto* fvector = input_cmd("fvector", "print V E F T");
  fvector->callback([&] {
    command = "fvector";
    action = [&] {
      const auto fv = session.load(o).f_vector();
      out << fv.v << ' ' << fv.e << ' ' << fv.f << ' ' << fv.t << '\n';
    };
  });

  auto* canon = input_cmd("canon", "write the canonical facet file");
  output_opt(canon);
  canon->callback([&] {
    command = "canon";
    action = [&] {
      auto cf = canonical_form(session.load(o));
      session.emit(o.output, facets_to_string(to_triangulation(cf)));
      session.stat("hash", hex64(cf.hash));
      session.flush_stats(o.output == "-");
    };
  });

  auto* homology = input_cmd("homology", "integer homology per dimension");
  homology->callback([&] {
    command = "homology";
    action = [&] { out << homology_profile(session.load(o)).to_string() << '\n'; };
  });

  auto* moves = input_cmd("moves", "list legal moves");
  moves->add_option("--kinds", o.kinds, "comma-separated kinds: 14,23,32,41 or all");
  moves->callback([&] {
    command = "moves";
    action = [&] {
      auto t = session.load(o);
      out << trace_text(enumerate_moves(t, kinds_of(o, "23,32")));
    };
  });

  auto* flip = input_cmd("flip", "apply a trace file");
  output_opt(flip);
  flip->add_option("--trace", o.trace, "trace file to replay")->required();
  flip->callback([&] {
    command = "flip";
    action = [&] {
      auto t = session.load(o);
      std::ifstream tf(o.trace);
      if (!tf) throw UsageError("cannot open trace '" + o.trace + "'");
      const auto ms = read_trace(tf);
      auto result = replay(t, ms);
      session.emit(o.output, facets_to_string(result));
      session.stat("applied", ms.size());
      session.flush_stats(o.output == "-");
    };
  });

  auto* gen = app.add_subcommand("gen", "generate a triangulation");
  gen->require_subcommand(1);
  gen->add_option("--manifest", o.manifest, "write a JSON run manifest here");
  output_opt(gen);
  auto* gen_simplex = gen->add_subcommand("simplex", "boundary of the 4-simplex");
  auto* gen_stacked = gen->add_subcommand("stacked", "stacked sphere");
  gen_stacked->add_option("--n", o.n, "vertex count")->required();
  gen_stacked->add_option("--seed", o.seed, "RNG seed")->capture_default_str();
  auto* gen_cyclic = gen->add_subcommand("cyclic", "boundary of the cyclic polytope C(n,4)");
  gen_cyclic->add_option("--n", o.n, "vertex count")->required();
  auto* gen_walk = gen->add_subcommand("walk", "random walk from the boundary of the 4-simplex");
  gen_walk->add_option("--kinds", o.kinds, "move kinds")->capture_default_str();
  gen_walk->add_option("--steps", o.steps, "walk length")->required();
  gen_walk->add_option("--seed", o.seed, "RNG seed")->capture_default_str();
  for (auto* sub : {gen_simplex, gen_stacked, gen_cyclic, gen_walk}) sub->fallthrough();
  for (auto* sub : {gen_simplex, gen_stacked, gen_cyclic, gen_walk}) {
    sub->callback([&, sub] {
      command = "gen " + sub->get_name();
      action = [&, sub] {
        const std::string which = sub->get_name();
        if ((which == "stacked" || which == "cyclic") && (o.n < 5 || (which == "cyclic" && o.n > 64))) {
          throw UsageError("--n must be at least 5 (and at most 64 for cyclic)");
        }
        std::optional<Triangulation> t;
        if (which == "simplex") t = boundary_simplex();
        if (which == "stacked") t = stacked_sphere(o.n, o.seed);
        if (which == "cyclic") t = cyclic_sphere(o.n);
        if (which == "walk") {
          auto w = random_walk_trace(boundary_simplex(), kinds_of(o, "14,23"), o.steps, o.seed);
          session.stat("steps", w.moves.size());
          session.stat("stalled", bool_text(w.stalled));
          t = w.final;
        }
        if (which == "stacked" || which == "walk") session.stat("seed", o.seed);
        session.emit(o.output, facets_to_string(*t));
        session.flush_stats(o.output == "-");
      };
    });
  }

  auto* walk = input_cmd("walk", "random walk from the input");
  output_opt(walk);
  walk->add_option("--kinds", o.kinds, "move kinds (default 23,32)");
  walk->add_option("--steps", o.steps, "walk length")->required();
  walk->add_option("--seed", o.seed, "RNG seed")->capture_default_str();
  walk->add_option("--trace", o.trace, "write the moves here");
  walk->callback([&] {
    command = "walk";
    action = [&] {
      auto w = random_walk_trace(session.load(o), kinds_of(o, "23,32"), o.steps, o.seed);
      session.emit(o.output, facets_to_string(w.final));
      if (!o.trace.empty()) session.emit(o.trace, trace_text(w.moves));
      session.stat("seed", o.seed);
      session.stat("steps", w.moves.size());
      session.stat("stalled", bool_text(w.stalled));
      session.flush_stats(o.output == "-" || o.trace == "-");
    };
  });

  auto* bfs = input_cmd("bfs", "explore the flip-graph component of the input");
  bfs->add_option("--kinds", o.kinds, "move kinds (default 23,32)");
  bfs->add_option("--dump", o.dump, "write every visited class into this directory");
  search_opts(bfs);
  auto* seeds = input_cmd("seeds", "seed classes (no 3-2 flip) in the input's component");
  seeds->add_option("--kinds", o.kinds, "move kinds (default 23,32)");
  seeds->add_option("--dump", o.dump, "write the seed classes into this directory");
  search_opts(seeds);
  for (auto* sub : {bfs, seeds}) {
    sub->callback([&, sub] {
      command = sub->get_name();
      action = [&, sub] {
        auto t = session.load(o);
        auto report = bfs_component(t, kinds_of(o, "23,32"), limits_of(o), o.threads);
        if (sub->get_name() == "seeds") session.stat("input_is_seed", bool_text(is_seed(t)));
        session.stat("class_count", report.class_count);
        session.stat("seed_count", report.seed_classes.size());
        session.stat("max_depth", report.max_depth);
        session.stat("frontier_exhausted", bool_text(report.frontier_exhausted));
        if (sub->get_name() == "seeds") {
          for (const auto& s : report.seed_classes) session.stat("seed_hash", hex64(s.hash));
        }
        if (!o.dump.empty()) {
          if (sub->get_name() == "seeds") {
            ComponentReport only_seeds;
            for (const auto& rec : report.classes) {
              if (rec.seed) only_seeds.classes.push_back(rec);
            }
            dump_classes(o.dump, only_seeds);
          } else {
            dump_classes(o.dump, report);
          }
        }
        session.flush_stats(false);
      };
    });
  }

  auto* certify = input_cmd("certify", "flip path to a stacked sphere (polytopal-closure certificate)");
  certify->add_option("--trace", o.trace, "write the path here (default: standard output)");
  search_opts(certify);
  certify->callback([&] {
    command = "certify";
    action = [&] {
      auto t = session.load(o);
      auto path = closure_certificate(t, limits_of(o), o.threads);
      session.stat("found", bool_text(path.has_value()));
      if (path) {
        session.stat("path_length", path->moves.size());
        session.stat("end_hash", hex64(path->end.hash));
      }
      const std::string dest = o.trace.empty() ? "-" : o.trace;
      session.flush_stats(dest == "-");
      if (path) session.emit(dest, trace_text(path->moves));
    };
  });

  auto* anneal = input_cmd("anneal", "simulated annealing");
  output_opt(anneal);
  anneal->add_option("--objective", o.objective, "stacked or reduction")
      ->check(CLI::IsMember({"stacked", "reduction"}))
      ->capture_default_str();
  anneal->add_option("--weight", o.weight, "stacked-potential weight W (0 = n-4)");
  anneal_opts(anneal);
  anneal->callback([&] {
    command = "anneal";
    action = [&] {
      auto t = session.load(o);
      Objective obj = o.objective == "stacked" ? Objective::stacked() : Objective::reduction();
      if (o.weight != 0) obj.weight = o.weight;
      if (obj.weight && t.n() >= 5 && *obj.weight < static_cast<std::int64_t>(t.n()) - 4) {
        throw UsageError("--weight must be at least n-4");
      }
      auto r = bistellar::run(t, obj, anneal_config(o));
      session.stat("seed", o.seed);
      report_anneal(session, r);
      if (o.output != "-") session.emit(o.output, facets_to_string(r.final));
      session.flush_stats(false);
      if (!o.trace.empty()) session.emit(o.trace, trace_text(r.trace));
    };
  });

  auto* certify_sphere = input_cmd("certify-sphere", "reduce to the boundary of the 4-simplex");
  anneal_opts(certify_sphere);
  certify_sphere->callback([&] {
    command = "certify-sphere";
    action = [&] {
      auto t = session.load(o);
      auto r = reduce_to_simplex(t, anneal_config(o));
      session.stat("seed", o.seed);
      session.stat("sphere", bool_text(r.success));
      report_anneal(session, r);
      session.flush_stats(false);
      if (!o.trace.empty()) session.emit(o.trace, trace_text(r.trace));
    };
  });

  auto* prepare = input_cmd("prepare", "one 1-4 flip plus link-expanding 2-3 flips");
  output_opt(prepare);
  prepare->add_option("--trace", o.trace, "write the preparation moves here");
  prepare->callback([&] {
    command = "prepare";
    action = [&] {
      auto p = prepare_unflippable(session.load(o));
      session.emit(o.output, facets_to_string(p.result));
      if (!o.trace.empty()) session.emit(o.trace, trace_text(p.moves));
      session.stat("new_vertex", p.new_vertex);
      session.stat("expanding_flips", p.expanding_flips);
      session.stat("link_size", p.link_size);
      session.flush_stats(o.output == "-" || o.trace == "-");
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << '\n';
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  try {
    action();
    nlohmann::json params = {{"input", o.input},       {"output", o.output},        {"kinds", o.kinds},
                             {"n", o.n},               {"steps", o.steps},          {"relabel", o.relabel},
                             {"objective", o.objective}, {"max_classes", o.max_classes}, {"max_depth", o.max_depth},
                             {"max_flips", o.max_flips}, {"t0", o.initial_temperature}, {"cooling", o.cooling},
                             {"steps_per_temp", o.steps_per_temperature}, {"weight", o.weight},
                             {"threads", o.threads}, {"trace", o.trace}};
    session.write_manifest(command, o, params);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace bistellar::cli
