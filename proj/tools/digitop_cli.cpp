#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "digitop/classify.hpp"
#include "digitop/corpus.hpp"
#include "digitop/errors.hpp"
#include "digitop/homotopy.hpp"
#include "digitop/io.hpp"
#include "digitop/recognition.hpp"
#include "digitop/transform.hpp"

namespace {

using namespace digitop;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct Search {
  std::uint64_t node_limit = SearchOptions{}.node_limit;
  bool no_euler_prune = false;

  RecognitionOptions recognition() const {
    RecognitionOptions o;
    o.search.node_limit = node_limit;
    o.search.euler_prune = !no_euler_prune;
    return o;
  }
};

void add_search_flags(CLI::App* cmd, Search& s) {
  cmd->add_option("--node-limit", s.node_limit, "Search nodes per contractibility query")
      ->capture_default_str();
  cmd->add_flag("--no-euler-prune", s.no_euler_prune, "Disable the Euler characteristic prune");
}

// A path, "-" for stdin, or a builtin name such as torus16 or @sphere3.
DigitalSpace load(const std::string& input) {
  if (input == "-") {
    std::string text{std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    return parse_space(text);
  }
  if (std::filesystem::exists(input)) return read_space_file(input);
  const std::string name = !input.empty() && input[0] == '@' ? input.substr(1) : input;
  if (is_builtin_name(name)) return builtin(name);
  throw Error("cannot open '" + input + "' (not a file or builtin space)");
}

std::string join_ids(const std::vector<PointId>& ids) {
  std::string out;
  for (const auto& id : ids) {
    if (!out.empty()) out += ' ';
    out += id;
  }
  return out;
}

std::string step_line(const TransformStep& s) {
  std::string line = std::string(step_kind_name(s.kind)) + ' ' + s.subject;
  if (!s.other.empty()) line += ' ' + s.other;
  if (s.kind == StepKind::kAttachPoint && !s.rim.empty()) line += " rim " + join_ids(s.rim);
  return line;
}

void emit(const std::string& text, const std::string& output) {
  if (output.empty() || output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(output, std::ios::binary);
  if (!out) throw Error("cannot write '" + output + "'");
  out << text;
}

std::string recognition_text(const RecognitionResult& r) {
  std::ostringstream out;
  out << "kind: " << kind_name(r.kind) << '\n';
  if (r.dimension) out << "dimension: " << *r.dimension << '\n';
  if (r.kind == SpaceKind::kDisk || r.kind == SpaceKind::kManifoldWithBoundary) {
    out << "boundary: " << join_ids(r.boundary) << '\n';
    out << "interior: " << join_ids(r.interior) << '\n';
  }
  return out.str();
}

RecognitionResult recognize_as(const DigitalSpace& g, const std::string& expect,
                               const RecognitionOptions& opts) {
  RecognitionResult r;
  if (expect == "sphere") {
    if (auto d = recognize_sphere(g, opts)) {
      r.kind = SpaceKind::kSphere;
      r.dimension = d;
    }
  } else if (expect == "manifold") {
    if (auto d = recognize_closed_manifold(g, opts)) {
      r.kind = SpaceKind::kClosedManifold;
      r.dimension = d;
    }
  } else if (expect == "disk") {
    r = recognize_disk(g, opts);
  } else {
    r = recognize_manifold_with_boundary(g, opts);
  }
  return r;
}

nlohmann::ordered_json report_json(const ClassificationReport& r) {
  nlohmann::ordered_json j;
  j["point_count"] = r.point_count;
  j["dimension"] = r.dimension;
  j["euler"] = r.euler;
  j["complexity"] = r.complexity;
  j["compression"] = {{"points", r.compression.size()}, {"canonical", r.compression_form.hex()}};
  j["punctured"] = {{"point", r.punctured_point},
                    {"reduced_points", r.punctured_reduced.size()},
                    {"euler", r.punctured_euler},
                    {"canonical", r.punctured_form.hex()}};
  return j;
}

std::string report_text(const ClassificationReport& r) {
  std::ostringstream out;
  out << "point_count: " << r.point_count << '\n'
      << "dimension: " << r.dimension << '\n'
      << "euler: " << r.euler << '\n'
      << "complexity: " << r.complexity << '\n'
      << "compression.points: " << r.compression.size() << '\n'
      << "compression.canonical: " << r.compression_form.hex() << '\n'
      << "punctured.point: " << r.punctured_point << '\n'
      << "punctured.reduced_points: " << r.punctured_reduced.size() << '\n'
      << "punctured.euler: " << r.punctured_euler << '\n'
      << "punctured.canonical: " << r.punctured_form.hex() << '\n';
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Digital topology toolkit: spheres, manifolds, compression and classification"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "digitop 1.0");

  int exit_code = kExitOk;
  std::function<void()> action;

  // gen
  std::string gen_kind, gen_out;
  int gen_dim = -1;
  auto* gen = app.add_subcommand("gen", "Write a corpus space as a SpaceFile");
  gen->add_option("kind", gen_kind, "sphere | disk | cycle | torus16 | projplane11")->required();
  gen->add_option("--dim,-n", gen_dim, "Dimension for sphere/disk, length for cycle");
  gen->add_option("-o,--output", gen_out, "Output file (default stdout)");
  gen->callback([&] {
    action = [&] {
      std::string name = gen_kind;
      if (gen_kind == "sphere" || gen_kind == "disk" || gen_kind == "cycle") {
        if (gen_dim < 0) throw PreconditionError("gen " + gen_kind + " needs --dim");
        name += std::to_string(gen_dim);
      } else if (gen_kind != "torus16" && gen_kind != "projplane11") {
        throw PreconditionError("unknown space kind '" + gen_kind + "'");
      }
      emit(serialize_space(builtin(name)), gen_out);
    };
  });

  // contractible
  std::string con_in;
  bool con_witness = false;
  Search con_search;
  auto* con = app.add_subcommand("contractible", "Decide contractibility");
  con->add_option("input", con_in, "SpaceFile, '-' or builtin name")->required();
  con->add_flag("--witness", con_witness, "Print a simple-point deletion sequence");
  add_search_flags(con, con_search);
  con->callback([&] {
    action = [&] {
      const auto g = load(con_in);
      const auto opts = con_search.recognition().search;
      const bool yes = is_contractible(g, opts);
      std::cout << (yes ? "CONTRACTIBLE" : "NOT-CONTRACTIBLE") << '\n';
      if (yes && con_witness) {
        for (const auto& s : contractible_witness(g, opts).steps) std::cout << step_line(s) << '\n';
      }
      exit_code = yes ? kExitOk : kExitNegative;
    };
  });

  // recognize
  std::string rec_in, rec_expect;
  Search rec_search;
  auto* rec = app.add_subcommand("recognize", "Recognize spheres, disks and manifolds");
  rec->add_option("input", rec_in, "SpaceFile, '-' or builtin name")->required();
  rec->add_option("--expect", rec_expect, "Test one kind only")
      ->check(CLI::IsMember({"sphere", "disk", "manifold", "manifold-with-boundary"}));
  add_search_flags(rec, rec_search);
  rec->callback([&] {
    action = [&] {
      const auto g = load(rec_in);
      const auto opts = rec_search.recognition();
      const auto r = rec_expect.empty() ? recognize(g, opts) : recognize_as(g, rec_expect, opts);
      std::cout << recognition_text(r);
      exit_code = r.kind == SpaceKind::kNone ? kExitNegative : kExitOk;
    };
  });

  // euler
  std::string eu_in;
  std::uint64_t eu_budget = kDefaultCliqueBudget;
  auto* eu = app.add_subcommand("euler", "Euler characteristic and clique vector");
  eu->add_option("input", eu_in, "SpaceFile, '-' or builtin name")->required();
  eu->add_option("--clique-budget", eu_budget, "Maximum cliques listed")->capture_default_str();
  eu->callback([&] {
    action = [&] {
      const auto cv = clique_vector(load(eu_in), eu_budget);
      std::cout << "euler: " << cv.euler() << '\n' << "cliques:";
      for (auto f : cv.counts) std::cout << ' ' << f;
      std::cout << '\n';
    };
  });

  // rtransform
  std::string rt_in, rt_edge, rt_fresh, rt_out;
  Search rt_search;
  auto* rt = app.add_subcommand("rtransform", "Apply an R-transformation to one edge");
  rt->add_option("input", rt_in, "SpaceFile, '-' or builtin name")->required();
  rt->add_option("--edge", rt_edge, "Edge as u,v")->required();
  rt->add_option("--fresh", rt_fresh, "Id of the new point (default x<k>)");
  rt->add_option("-o,--output", rt_out, "Output file (default stdout)");
  add_search_flags(rt, rt_search);
  rt->callback([&] {
    action = [&] {
      const auto comma = rt_edge.find(',');
      if (comma == std::string::npos) throw PreconditionError("--edge expects u,v");
      const auto g = load(rt_in);
      const PointId fresh = rt_fresh.empty() ? fresh_id(g, "x") : rt_fresh;
      const auto out = r_transform(g, rt_edge.substr(0, comma), rt_edge.substr(comma + 1), fresh,
                                   rt_search.recognition());
      emit(serialize_space(out), rt_out);
    };
  });

  // compress
  std::string cm_in, cm_out;
  Search cm_search;
  auto* cm = app.add_subcommand("compress", "Contract edge disks until none is left");
  cm->add_option("input", cm_in, "SpaceFile, '-' or builtin name")->required();
  cm->add_option("-o,--output", cm_out, "Output file (default stdout)");
  add_search_flags(cm, cm_search);
  cm->callback([&] {
    action = [&] {
      const auto c = compress(load(cm_in), cm_search.recognition());
      std::string text;
      for (const auto& s : c.steps) {
        text += "# contract " + join_ids(s.interior_removed) + " -> " + s.new_point +
                " boundary " + join_ids(s.boundary) + '\n';
      }
      emit(text + serialize_space(c.space), cm_out);
    };
  });

  // complexity
  std::string cx_in;
  Search cx_search;
  auto* cx = app.add_subcommand("complexity", "Point count of the compression");
  cx->add_option("input", cx_in, "SpaceFile, '-' or builtin name")->required();
  add_search_flags(cx, cx_search);
  cx->callback([&] {
    action = [&] { std::cout << complexity(load(cx_in), cx_search.recognition()) << '\n'; };
  });

  // report
  std::string rp_in;
  bool rp_json = false;
  Search rp_search;
  auto* rp = app.add_subcommand("report", "Classification report of a closed manifold");
  rp->add_option("input", rp_in, "SpaceFile, '-' or builtin name")->required();
  rp->add_flag("--json", rp_json, "Emit JSON");
  add_search_flags(rp, rp_search);
  rp->callback([&] {
    action = [&] {
      const auto r = classification_report(load(rp_in), rp_search.recognition());
      if (rp_json) {
        std::cout << report_json(r).dump(2) << '\n';
      } else {
        std::cout << report_text(r);
      }
    };
  });

  // catalog
  int cat_dim = 0;
  std::size_t cat_points = 0;
  CatalogBudget cat_budget;
  Search cat_search;
  auto* cat = app.add_subcommand("catalog", "Compressed closed n-manifolds up to N points");
  cat->add_option("--dim", cat_dim, "Dimension n")->required();
  cat->add_option("--max-points", cat_points, "Largest point count N")->required();
  cat->add_option("--budget", cat_budget.max_graphs, "Distinct partial graphs kept")
      ->capture_default_str();
  cat->add_option("--max-seconds", cat_budget.max_seconds, "Wall-clock limit, 0 for none")
      ->capture_default_str();
  add_search_flags(cat, cat_search);
  cat->callback([&] {
    action = [&] {
      const auto c = catalog(cat_dim, cat_points, cat_budget, cat_search.recognition());
      std::cout << catalog_listing(c);
      if (!c.exhaustive) {
        std::cerr << "digitop: catalog budget exhausted; listing is partial\n";
        exit_code = kExitBudget;
      }
    };
  });

  // iso
  std::string iso_a, iso_b;
  auto* iso = app.add_subcommand("iso", "Decide whether two spaces are isomorphic");
  iso->add_option("first", iso_a, "SpaceFile or builtin name")->required();
  iso->add_option("second", iso_b, "SpaceFile or builtin name")->required();
  iso->callback([&] {
    action = [&] {
      const bool yes = are_isomorphic(load(iso_a), load(iso_b));
      std::cout << (yes ? "ISOMORPHIC" : "NOT-ISOMORPHIC") << '\n';
      exit_code = yes ? kExitOk : kExitNegative;
    };
  });

  // reduce
  std::string rd_in, rd_point, rd_strategy = "delete-only", rd_out;
  Search rd_search;
  ReductionOptions rd_opts;
  auto* rd = app.add_subcommand("reduce", "Reduce by contractible transformations");
  rd->add_option("input", rd_in, "SpaceFile, '-' or builtin name")->required();
  rd->add_option("--delete-point", rd_point, "Remove this point first");
  rd->add_option("--strategy", rd_strategy, "delete-only | paper")
      ->check(CLI::IsMember({"delete-only", "paper"}))
      ->capture_default_str();
  rd->add_option("--max-steps", rd_opts.max_steps, "Step budget")->capture_default_str();
  rd->add_option("-o,--output", rd_out, "Output file (default stdout)");
  add_search_flags(rd, rd_search);
  rd->callback([&] {
    action = [&] {
      auto g = load(rd_in);
      if (!rd_point.empty()) g = delete_points(g, {rd_point});
      rd_opts.strategy =
          rd_strategy == "paper" ? ReductionStrategy::kGlueThenDelete : ReductionStrategy::kDeleteOnly;
      rd_opts.search = rd_search.recognition().search;
      const auto r = reduce(g, rd_opts);
      std::string text;
      for (const auto& s : r.trace.steps) text += "# " + step_line(s) + '\n';
      text += "# euler " + std::to_string(euler_characteristic(r.space)) + '\n';
      emit(text + serialize_space(r.space), rd_out);
      if (r.budget_hit) {
        std::cerr << "digitop: step budget reached; reduction is partial\n";
        exit_code = kExitBudget;
      }
    };
  });

  // dot
  std::string dot_in, dot_name = "G";
  auto* dot = app.add_subcommand("dot", "Export as Graphviz DOT");
  dot->add_option("input", dot_in, "SpaceFile, '-' or builtin name")->required();
  dot->add_option("--name", dot_name, "Graph name")->capture_default_str();
  dot->callback([&] { action = [&] { std::cout << export_dot(load(dot_in), dot_name); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    action();
  } catch (const BudgetExceeded& e) {
    std::cerr << "digitop: budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "digitop: " << e.what() << '\n';
    return kExitUsage;
  }
  std::cout.flush();
  return exit_code;
}
