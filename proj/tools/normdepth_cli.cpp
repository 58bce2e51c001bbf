// normdepth: normalized depth profiles, Betti tables, constructions and
// verification suites from the command line.
//
// Exit codes: 0 success, 1 suite failure, 2 usage or parse error,
// 3 computational cap exceeded.

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "normdepth/betti.hpp"
#include "normdepth/constructions.hpp"
#include "normdepth/io.hpp"
#include "normdepth/suites.hpp"
#include "normdepth/sweep.hpp"

namespace nd = normdepth;

namespace {

enum Exit : int { kOk = 0, kSuiteFailure = 1, kUsage = 2, kCap = 3 };

nd::FieldSpec field_from(std::uint32_t characteristic) {
  return characteristic == 0 ? nd::FieldSpec::rationals() : nd::FieldSpec::prime(characteristic);
}

void print_profile(const nd::GProfile& p, const nd::FieldSpec& field, int n) {
  std::cout << "field " << field.name() << ", n = " << n << ", nu = " << p.nu << '\n';
  std::cout << std::setw(4) << "k" << std::setw(6) << "d_k" << std::setw(8) << "depth"
            << std::setw(5) << "g" << '\n';
  for (int k = 1; k <= p.nu; ++k) {
    const auto i = static_cast<std::size_t>(k - 1);
    std::cout << std::setw(4) << k << std::setw(6) << p.d[i] << std::setw(8) << p.depth[i]
              << std::setw(5) << p.g[i] << '\n';
  }
}

struct ConstructArgs {
  int s = 0;
  int m = 0;
  std::vector<int> profile;
  std::string out;
};

int emit_construction(const nd::ConstructionResult& c, const std::string& out_dir) {
  nd::Json predicted{{"schema_version", nd::kSchemaVersion},
                     {"nu", c.nu},
                     {"g", c.predicted_g},
                     {"variables", c.variable_count()},
                     {"provenance", c.provenance}};
  nd::Json bundle{{"schema_version", nd::kSchemaVersion},
                  {"ideal", nd::ideal_to_json(c.ideal)},
                  {"predicted", predicted},
                  {"provenance", c.provenance}};
  if (c.graph) bundle["graph"] = nd::graph_to_json(*c.graph);
  if (!out_dir.empty()) {
    const std::filesystem::path dir(out_dir);
    std::filesystem::create_directories(dir);
    nd::write_text_file(dir / "ideal.json", nd::ideal_to_json(c.ideal).dump(2) + "\n");
    nd::write_text_file(dir / "predicted.json", predicted.dump(2) + "\n");
    nd::write_text_file(dir / "provenance.txt", c.provenance + "\n");
    if (c.graph) nd::write_text_file(dir / "graph.txt", nd::graph_to_text(*c.graph));
  }
  std::cout << bundle.dump() << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Normalized depth profiles of squarefree powers"};
  app.require_subcommand(1);

  std::uint32_t characteristic = 0;
  unsigned threads = 1;
  auto add_field = [&](CLI::App* cmd) {
    cmd->add_option("--char", characteristic, "Field characteristic: 0 or a prime")
        ->capture_default_str();
  };
  auto add_threads = [&](CLI::App* cmd) {
    cmd->add_option("--threads", threads, "Worker threads (0 = hardware count)")
        ->capture_default_str();
  };

  std::string input;
  auto* gprofile = app.add_subcommand("gprofile", "Normalized depth profile of an ideal or graph");
  gprofile->add_option("file", input, "Ideal JSON, graph JSON or graph text file")->required();
  add_field(gprofile);
  add_threads(gprofile);

  std::string oracle = "hochster";
  auto* betti = app.add_subcommand("betti", "Graded Betti numbers of S/I");
  betti->add_option("file", input, "Ideal JSON, graph JSON or graph text file")->required();
  betti->add_option("--oracle", oracle, "hochster or taylor")
      ->check(CLI::IsMember({"hochster", "taylor"}))
      ->capture_default_str();
  add_field(betti);
  add_threads(betti);

  ConstructArgs cargs;
  auto* construct = app.add_subcommand("construct", "Build a graph or ideal with a known profile");
  construct->require_subcommand(1);
  auto* c_thm38 = construct->add_subcommand("thm38", "Profile (s, s-1, ..., 1, 0, ..., 0)");
  c_thm38->add_option("--s", cargs.s)->required();
  c_thm38->add_option("--m", cargs.m)->required();
  auto* c_thm41 = construct->add_subcommand("thm41", "Any non-increasing profile");
  c_thm41->add_option("--profile", cargs.profile, "Comma separated a1,a2,...")
      ->required()
      ->delimiter(',');
  auto* c_lemma42 = construct->add_subcommand("lemma42", "s ones then m - s zeros");
  c_lemma42->add_option("--s", cargs.s)->required();
  c_lemma42->add_option("--m", cargs.m)->required();
  auto* c_lemma43 = construct->add_subcommand("lemma43", "m ones");
  c_lemma43->add_option("--m", cargs.m)->required();
  auto* c_example36 = construct->add_subcommand("example36", "The six-vertex cut graph");
  for (auto* c : {c_thm38, c_thm41, c_lemma42, c_lemma43, c_example36}) {
    c->add_option("--out", cargs.out, "Directory for the output bundle");
  }

  std::string suite;
  nd::SuiteOptions sopts;
  int max_vertices = -1, trials = -1;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite, "Suite name")->required();
  verify->add_option("--max-vertices", max_vertices);
  verify->add_option("--trials", trials);
  verify->add_option("--seed", sopts.seed)->capture_default_str();
  add_field(verify);
  add_threads(verify);

  nd::SweepOptions wopts;
  int sample = -1;
  bool timing = false;
  auto* sweep = app.add_subcommand("sweep", "Look for increasing profiles among small graphs");
  sweep->add_option("--max-vertices", wopts.max_vertices)->required();
  sweep->add_option("--sample", sample, "Random graphs to draw instead of enumerating");
  sweep->add_option("--seed", wopts.seed)->capture_default_str();
  sweep->add_flag("--profiles", wopts.keep_profiles, "Include every profile in the report");
  sweep->add_flag("--timing", timing, "Include wall-clock seconds");
  add_field(sweep);
  add_threads(sweep);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    const nd::FieldSpec field = field_from(characteristic);
    nd::HochsterOptions hopts;
    hopts.threads = threads;

    if (gprofile->parsed()) {
      const nd::InputIdeal in = nd::read_input(input);
      const nd::GProfile p = nd::g_profile(in.ideal, field, hopts);
      print_profile(p, field, in.ideal.ambient());
      nd::Json j = nd::profile_to_json(p);
      j["schema_version"] = nd::kSchemaVersion;
      j["field"] = field.name();
      j["n"] = in.ideal.ambient();
      std::cout << j.dump() << '\n';
      return kOk;
    }

    if (betti->parsed()) {
      const nd::InputIdeal in = nd::read_input(input);
      const nd::BettiTable table = oracle == "taylor" ? nd::betti_taylor(in.ideal, field)
                                                      : nd::betti_hochster(in.ideal, field, hopts);
      nd::Json j{{"schema_version", nd::kSchemaVersion},
                 {"field", field.name()},
                 {"method", oracle},
                 {"betti", nd::betti_to_json(table)},
                 {"projective_dimension", table.projective_dimension()},
                 {"depth", in.ideal.ambient() - table.projective_dimension()}};
      std::cout << j.dump() << '\n';
      return kOk;
    }

    if (construct->parsed()) {
      if (c_thm38->parsed()) return emit_construction(nd::vanishing_tail_graph(cargs.s, cargs.m), cargs.out);
      if (c_thm41->parsed()) return emit_construction(nd::realize_profile(cargs.profile), cargs.out);
      if (c_lemma42->parsed()) return emit_construction(nd::step_profile_ideal(cargs.s, cargs.m), cargs.out);
      if (c_lemma43->parsed()) return emit_construction(nd::all_ones_profile_ideal(cargs.m), cargs.out);
      nd::ConstructionResult c;
      c.graph = nd::six_vertex_cut_graph();
      c.ideal = nd::edge_ideal(*c.graph);
      c.nu = 3;
      c.predicted_g = {1, 0, 0};
      c.provenance = "example36";
      return emit_construction(c, cargs.out);
    }

    if (verify->parsed()) {
      if (max_vertices >= 0) sopts.max_vertices = max_vertices;
      if (trials >= 0) sopts.trials = trials;
      if (characteristic != 0) sopts.field = field;
      sopts.threads = threads;
      const nd::SuiteReport report = nd::run_suite(suite, sopts);
      std::cout << nd::suite_to_json(report).dump() << '\n';
      return report.passed() ? kOk : kSuiteFailure;
    }

    if (sweep->parsed()) {
      if (sample >= 0) wopts.sample = sample;
      wopts.field = field;
      wopts.threads = threads;
      const nd::SweepReport report = nd::conjecture_sweep(wopts);
      std::cout << nd::sweep_to_json(report, timing).dump() << '\n';
      return kOk;
    }
  } catch (const nd::CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << '\n';
    return kCap;
  } catch (const nd::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kSuiteFailure;
  }
  return kUsage;
}
