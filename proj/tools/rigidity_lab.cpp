#include <iostream>

#include "CLI11.hpp"
#include "rlab/cli/commands.hpp"
#include "rlab/cli/store.hpp"
#include "rlab/repvar/gamma4.hpp"

using namespace rlab::cli;

namespace {

void add_common(CLI::App* app, RunConfig& c) {
  app->add_option("--fixture", c.fixtures, "Fixture name, or NAME:sub=w1,w2 for a subgroup");
  app->add_option("--file", c.files, "Presentation file")->check(CLI::ExistingFile);
  app->add_option("--out", c.out, "Result store directory");
  app->add_option("--workers", c.workers, "Worker threads")->check(CLI::PositiveNumber);
  app->add_option("--limit", c.limit, "Coset limit")->check(CLI::PositiveNumber);
  app->add_option("--max-nodes", c.max_nodes, "Subgroup search node budget")->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig c;
  for (int i = 0; i < argc; ++i) c.argv.emplace_back(argv[i]);

  CLI::App app{"Exact computations around profinite and Galois rigidity of small Kleinian groups", "rigidity-lab"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  auto* rigidity = app.add_subcommand("rigidity", "Character-variety rigidity certificate");
  rigidity->require_subcommand(1);
  auto* gamma4 = rigidity->add_subcommand("gamma4", "Run the elimination pipeline and numeric check");
  add_common(gamma4, c);
  gamma4->add_option("--precision", c.precision, "Decimal digits for the numeric check")->check(CLI::PositiveNumber);
  gamma4->add_flag("--skip-numeric", c.skip_numeric, "Certificate only");

  auto* charvar = app.add_subcommand("charvar", "Specializations of the figure-eight canonical component");
  add_common(charvar, c);
  charvar->add_option("--n", c.n, "Orders n (repeatable)")->required();
  charvar->add_option("--k", c.k, "Only report this k");

  auto* group = app.add_subcommand("group", "Finitely presented group computations");
  group->require_subcommand(1);
  for (const char* name : {"abelianize", "cosets", "subgroups", "rs", "luck"}) {
    auto* sub = group->add_subcommand(name);
    add_common(sub, c);
    std::string n = name;
    if (n == "cosets" || n == "rs") {
      sub->add_option("--subgroup", c.subgroup, "Subgroup generator words")->delimiter(',');
    }
    if (n == "cosets") sub->add_option("--strategy", c.strategy, "hlt or felsch");
    if (n == "subgroups" || n == "luck")
      sub->add_option("--index", c.index, "Maximum index")->check(CLI::PositiveNumber);
    if (n == "subgroups") {
      sub->add_option("--min-index", c.min_index, "Minimum index")->check(CLI::PositiveNumber);
      sub->add_flag("--normal", c.normal, "Normal subgroups only");
    }
  }
  group->description("abelianize | cosets | subgroups | rs | luck");

  auto* fingerprint = app.add_subcommand("fingerprint", "Finite quotients of order <= N; two inputs are compared");
  add_common(fingerprint, c);
  fingerprint->add_option("--bound", c.bound, "N")->check(CLI::PositiveNumber);

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
    return kConfigError;
  }

  for (auto* top : app.get_subcommands()) {
    c.command = top->get_name();
    for (auto* sub : top->get_subcommands()) c.subcommand = sub->get_name();
  }

  try {
    Outcome out = run_command(c);
    std::cout << out.envelope.to_json().dump(2) << "\n";
    if (!c.out.empty()) {
      ResultStore store(c.out);
      std::cerr << "stored " << store.put(out.envelope).string() << "\n";
    }
    for (const auto& p : out.problems) std::cerr << "problem: " << p << "\n";
    return out.exit_code;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfigError;
  } catch (const ResourceOverflow& e) {
    std::cerr << "overflow: " << e.what() << "\n";
    return kOverflow;
  } catch (const rlab::PipelineError& e) {
    std::cerr << "pipeline stage '" << e.stage << "' failed: " << e.what() << "\n";
    return kMismatch;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
