#include "cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "smallcover/csv.hpp"
#include "smallcover/error.hpp"
#include "smallcover/gradient.hpp"
#include "smallcover/h_vector.hpp"
#include "smallcover/homology.hpp"
#include "smallcover/polytope.hpp"
#include "smallcover/small_cover.hpp"
#include "smallcover/tower.hpp"

namespace smallcover::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("io", "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("io", "cannot write '" + path + "'");
  out << contents;
}

template <typename Range>
std::string join(const Range& values) {
  std::ostringstream out;
  bool first = true;
  for (const auto& v : values) {
    out << (first ? "" : " ") << v;
    first = false;
  }
  return out.str();
}

// --builtin NAME | --polytope PATH
struct PolytopeSource {
  std::string builtin_name;
  std::string path;

  void attach(CLI::App* cmd) {
    auto* b = cmd->add_option("--builtin", builtin_name, "Builtin polytope: triangle, square, pentagon, <k>-gon, tetrahedron, cube, dodecahedron, <k>-prism");
    auto* p = cmd->add_option("--polytope", path, "Polytope file");
    b->excludes(p);
  }

  Polytope load() const {
    if (!path.empty()) return parse_polytope(read_file(path));
    if (!builtin_name.empty()) return builtin(builtin_name);
    throw CLI::RequiredError("--builtin or --polytope");
  }
};

// A seed is a builtin name when it names one, otherwise a file path.
Polytope load_seed(const std::string& seed) {
  if (!std::filesystem::exists(seed)) return builtin(seed);
  return parse_polytope(read_file(seed));
}

Coloring load_or_pick_coloring(const Polytope& p, const std::string& coloring_path) {
  if (!coloring_path.empty()) return parse_coloring(read_file(coloring_path));
  std::optional<Coloring> first;
  for_each_characteristic(p, [&](const Coloring& c) {
    first = c;
    return false;
  });
  if (!first) throw Error("small_cover", "polytope admits no characteristic coloring");
  return *first;
}

void print_report(std::ostream& out, const std::string& title, const ValidationReport& report) {
  out << title << ": " << (report.ok() ? "ok" : "failed") << '\n';
  for (const auto& v : report.violations) {
    out << "  [" << v.rule << "] " << v.message;
    if (!v.ids.empty()) out << " (" << join(v.ids) << ')';
    out << '\n';
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Small covers of simple polytopes: h-vectors, characteristic colorings, mod-2 homology and doubling towers",
               "smallcover"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  // validate
  PolytopeSource validate_src;
  bool strict = false;
  bool pogorelov = false;
  auto* validate_cmd = app.add_subcommand("validate", "Check the simple-polytope invariants and print the f-vector");
  validate_src.attach(validate_cmd);
  validate_cmd->add_flag("--strict", strict, "Also require a 3-connected vertex graph");
  validate_cmd->add_flag("--pogorelov", pogorelov, "Also run the right-angled realizability check (3-polytopes)");

  // hvector
  PolytopeSource hvector_src;
  auto* hvector_cmd = app.add_subcommand("hvector", "Print h_0 .. h_n");
  hvector_src.attach(hvector_cmd);

  // covers
  auto* covers_cmd = app.add_subcommand("covers", "Characteristic colorings (small covers)");
  covers_cmd->require_subcommand(1);
  PolytopeSource enum_src, classify_src, orient_src;
  bool list = false, show = false, no_pruning = false;
  unsigned threads = 1;
  std::string orient_coloring;
  auto* enum_cmd = covers_cmd->add_subcommand("enumerate", "Count (and optionally list) characteristic colorings");
  enum_src.attach(enum_cmd);
  enum_cmd->add_flag("--list", list, "Print every coloring, one per line");
  enum_cmd->add_option("--threads", threads, "Search shards run concurrently")->check(CLI::Range(1u, 64u));
  auto* classify_cmd = covers_cmd->add_subcommand("classify", "Count colorings up to polytope symmetry and GL(n,2)");
  classify_src.attach(classify_cmd);
  classify_cmd->add_flag("--show", show, "Print the class representatives");
  classify_cmd->add_flag("--no-pruning", no_pruning, "Enumerate every coloring instead of fixing the base vertex");
  auto* orient_cmd = covers_cmd->add_subcommand("orientable", "Find an orientable small cover, or test a given coloring");
  orient_src.attach(orient_cmd);
  orient_cmd->add_option("--coloring", orient_coloring, "Coloring file to test instead of searching");

  // homology
  PolytopeSource homology_src;
  std::string homology_coloring;
  auto* homology_cmd = app.add_subcommand("homology", "Mod-2 Betti numbers of M(lambda) against the h-vector");
  homology_src.attach(homology_cmd);
  homology_cmd->add_option("--coloring", homology_coloring, "Coloring file")->required();

  // tower
  std::string tower_seed, tower_coloring, tower_strategy = "min-face", tower_csv_path;
  int tower_depth = 0;
  auto* tower_cmd = app.add_subcommand("tower", "Build a doubling tower and emit j,V,E,F,k,index,h1");
  tower_cmd->add_option("--seed", tower_seed, "Builtin name or polytope file")->required();
  tower_cmd->add_option("--coloring", tower_coloring, "Coloring file (default: first characteristic coloring)");
  tower_cmd->add_option("--strategy", tower_strategy, "min-face | round-robin | list:<id,id,...>")->capture_default_str();
  tower_cmd->add_option("--depth", tower_depth, "Number of doublings")->required()->check(CLI::NonNegativeNumber);
  tower_cmd->add_option("--csv", tower_csv_path, "Write CSV here instead of stdout");

  // rgr
  std::string rgr_tower, rgr_seed, rgr_coloring, rgr_strategy = "min-face", rgr_rho, rgr_csv_path;
  int rgr_depth = -1;
  std::int64_t base_rank = 0;
  auto* rgr_cmd = app.add_subcommand("rgr", "Rank-gradient lower bounds along a tower");
  auto* tower_opt = rgr_cmd->add_option("--tower", rgr_tower, "Tower CSV written by 'tower'");
  auto* seed_opt = rgr_cmd->add_option("--seed", rgr_seed, "Builtin name or polytope file");
  auto* depth_opt = rgr_cmd->add_option("--depth", rgr_depth, "Number of doublings (with --seed)")->check(CLI::NonNegativeNumber);
  rgr_cmd->add_option("--coloring", rgr_coloring, "Coloring file (with --seed)");
  rgr_cmd->add_option("--strategy", rgr_strategy, "min-face | round-robin | list:<id,id,...>")->capture_default_str();
  rgr_cmd->add_option("--rho", rgr_rho, "Atkinson ratio C/D as P/Q");
  rgr_cmd->add_option("--base-rank", base_rank, "Assumed rank of pi_1(M); adds the Reidemeister-Schreier column")->check(CLI::PositiveNumber);
  rgr_cmd->add_option("--csv", rgr_csv_path, "Write CSV here instead of stdout");
  tower_opt->excludes(seed_opt);
  seed_opt->needs(depth_opt);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*validate_cmd) {
      const Polytope p = validate_src.load();
      const auto report = validate(p, strict);
      print_report(out, "validate", report);
      if (report.ok()) {
        const FVector fv = f_vector(p);
        if (p.dim() == 3)
          out << "f-vector: V=" << fv.vertices << " E=" << fv.edges << " F=" << fv.faces << '\n';
        else
          out << "f-vector: V=" << fv.vertices << " E=" << fv.edges << '\n';
        out << "automorphisms: " << automorphism_group(p).size() << '\n';
        if (pogorelov && p.dim() == 3) print_report(out, "pogorelov", pogorelov_check(p));
      }
      return report.ok() ? 0 : 1;
    }

    if (*hvector_cmd) {
      out << join(h_vector(hvector_src.load())) << '\n';
      return 0;
    }

    if (*enum_cmd) {
      const Polytope p = enum_src.load();
      const auto all = enumerate_characteristic(p, threads);
      out << "count: " << all.size() << '\n';
      if (list)
        for (const auto& c : all) out << to_compact_string(c) << '\n';
      return 0;
    }

    if (*classify_cmd) {
      const Polytope p = classify_src.load();
      const auto cls = equivalence_classes(p, no_pruning ? SymmetryPruning::none : SymmetryPruning::base_vertex);
      out << "total: " << cls.total_count << '\n'
          << "classes: " << cls.class_count << '\n'
          << "group_order: " << cls.group_order_used << '\n';
      if (show)
        for (const auto& c : cls.representatives) out << to_compact_string(c) << (is_orientable(c) ? " orientable" : "") << '\n';
      return 0;
    }

    if (*orient_cmd) {
      const Polytope p = orient_src.load();
      if (!orient_coloring.empty()) {
        const Coloring c = parse_coloring(read_file(orient_coloring));
        require_characteristic(p, c);
        out << "orientable: " << (is_orientable(c) ? "true" : "false") << '\n';
        return 0;
      }
      const auto found = find_orientable(p);
      if (found)
        out << serialize(*found);
      else
        out << "none\n";
      return 0;
    }

    if (*homology_cmd) {
      const Polytope p = homology_src.load();
      const Coloring c = parse_coloring(read_file(homology_coloring));
      const auto qc = build_quotient_complex(p, c);
      const auto betti = betti_mod2(qc);
      const auto h = h_vector(p);
      out << "cells: " << join(qc.cell_counts()) << '\n'
          << "betti: " << join(betti) << '\n'
          << "h-vector: " << join(h) << '\n'
          << "orientable: " << (is_orientable(c) ? "true" : "false") << '\n'
          << "verify_dj: " << (betti == h ? "true" : "false") << '\n';
      return betti == h ? 0 : 1;
    }

    if (*tower_cmd) {
      const Polytope p = load_seed(tower_seed);
      const Coloring c = load_or_pick_coloring(p, tower_coloring);
      const auto tower = build_tower(p, c, Strategy::parse(tower_strategy), tower_depth);
      const auto csv = tower_csv(tower);
      if (tower_csv_path.empty())
        out << csv;
      else
        write_file(tower_csv_path, csv);
      return 0;
    }

    if (*rgr_cmd) {
      TowerProfile prof;
      if (!rgr_tower.empty()) {
        prof = parse_tower_csv(read_file(rgr_tower));
      } else if (!rgr_seed.empty()) {
        const Polytope p = load_seed(rgr_seed);
        const Coloring c = load_or_pick_coloring(p, rgr_coloring);
        prof = profile(build_tower(p, c, Strategy::parse(rgr_strategy), rgr_depth));
      } else {
        err << "usage: rgr needs --tower CSV or --seed with --depth\n";
        return 2;
      }
      const auto report = rgr_ratios(prof);
      RgrOptions options;
      if (!rgr_rho.empty()) {
        const Rational rho = parse_rational(rgr_rho);
        options.atkinson = atkinson_check(prof, rho, Rational(1));
      }
      if (base_rank > 0) options.base_rank = base_rank;

      std::ostringstream summary;
      summary << "# limit_estimate: " << to_decimal(report.limit_estimate) << ' '
              << (report.closed_form ? "(closed form)" : "(last ratio, not converged)") << '\n';
      if (options.atkinson) {
        const auto& a = *options.atkinson;
        if (!a.precondition_ok) {
          summary << "# atkinson: precondition violated: " << a.precondition_message << '\n';
        } else {
          summary << "# atkinson: rho=" << to_decimal(a.rho) << ' ' << (a.all_pass() ? "pass" : "fail")
                  << " max_rho=" << to_decimal(*a.max_rho) << " (conditional on the unknown constants)\n";
        }
      }
      const auto csv = rgr_csv(report, options);
      if (rgr_csv_path.empty()) {
        out << csv << summary.str();
      } else {
        write_file(rgr_csv_path, csv);
        out << summary.str();
      }
      return 0;
    }
  } catch (const CLI::Error& e) {
    err << "usage: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace smallcover::cli
