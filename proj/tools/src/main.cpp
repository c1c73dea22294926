#include <CLI11.hpp>
#include <iostream>

#include "commands.hpp"
#include "uakit/formula.hpp"
#include "uakit/io.hpp"
#include "uakit/semantics.hpp"

using namespace uakit::cli;

int main(int argc, char** argv) {
  CLI::App app{"Finite awareness and unawareness models: validation, model checking, transforms and verification"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "uakit 0.1.0");

  ValidateArgs va;
  auto* validate = app.add_subcommand("validate", "Check a model, category or proof file against its well-formedness conditions");
  validate->add_option("file", va.file, "JSON document")->required();
  validate->add_flag("--json", va.json, "Print the report as JSON");

  EvalArgs ea;
  auto* eval = app.add_subcommand("eval", "Evaluate a formula at a state (HMS) or world (FH)");
  eval->add_option("file", ea.file, "Model file")->required();
  eval->add_option("--state", ea.state, "State or world name")->required();
  eval->add_option("--formula", ea.formula, "Formula, e.g. \"K1 p & ~A1 q\"")->required();
  eval->add_flag("--show-event", ea.show_event, "Also print the formula's extension");

  TransformArgs ta;
  auto* transform = app.add_subcommand("transform", "Convert between FH models, categories and HMS models");
  transform->add_option("file", ta.file, "Input model")->required();
  transform->add_option("--to", ta.to, "Target: hms, ikb, fh, fh-star or category")
      ->required()
      ->check(CLI::IsMember({"hms", "ikb", "fh", "fh-star", "category"}));
  transform->add_option("--mode", ta.mode, "Restriction mode for FH inputs")->check(CLI::IsMember({"copy", "quotient"}));
  transform->add_option("--trace", ta.trace, "Write the transform trace to this file");
  transform->add_option("-o,--output", ta.output, "Output file (default: stdout)");
  transform->add_flag("--pretty", ta.pretty, "Indent the JSON output");

  VerifyArgs ra;
  auto* verify = app.add_subcommand("verify", "Run the property and equivalence suites on a model");
  verify->add_option("file", ra.file, "Model or category file")->required();
  verify->add_option("--suite", ra.suite, "Suite to run")
      ->check(CLI::IsMember({"all", "pi", "lambda", "alpha", "operators", "equivalence", "lpa"}));
  verify->add_option("--depth", ra.depth, "Formula depth (default 3 for equivalence, 2 for the lpa pool)")
      ->check(CLI::Range(0, 4));
  verify->add_option("--mode", ra.mode, "Restriction mode for FH inputs")->check(CLI::IsMember({"copy", "quotient"}));
  verify->add_option("--jobs", ra.jobs, "Suites run in parallel")->check(CLI::PositiveNumber);
  verify->add_flag("--json", ra.json, "Print the report as JSON");

  RandomArgs rn;
  auto* random = app.add_subcommand("random", "Generate random models, optionally verifying each");
  random->add_option("--atoms", rn.atoms, "Atoms (1 to 3)")->check(CLI::Range(1, 3));
  random->add_option("--worlds", rn.worlds, "Worlds or top states (1 to 4)")->check(CLI::Range(1, 4));
  random->add_option("--agents", rn.agents, "Agents (1 or 2)")->check(CLI::Range(1, 2));
  random->add_option("--seed", rn.seed, "First seed");
  random->add_option("--count", rn.count, "Number of models; seeds are consecutive")->check(CLI::PositiveNumber);
  random->add_option("--strategy", rn.strategy, "HMS generation strategy")
      ->check(CLI::IsMember({"via-transform", "direct"}));
  random->add_option("--kind", rn.kind, "fh, hms (pi and lambda) or ikb (lambda and alpha)")
      ->check(CLI::IsMember({"fh", "hms", "ikb"}));
  random->add_option("-o,--output-dir", rn.output_dir, "Write model-<seed>.json files here instead of JSON lines on stdout");
  random->add_flag("--verify", rn.verify, "Run the property suite on each model and print a summary instead");
  random->add_option("--jobs", rn.jobs, "Models verified in parallel")->check(CLI::PositiveNumber);
  random->add_flag("--pretty", rn.pretty, "Indent the JSON output");

  ProofArgs pa;
  auto* proof = app.add_subcommand("check-proof", "Check a Hilbert-style proof file line by line");
  proof->add_option("file", pa.file, "Proof file")->required();
  proof->add_flag("--json", pa.json, "Print the diagnostics as JSON");

  CountermodelArgs ca;
  auto* counter = app.add_subcommand("countermodel", "Search small FH models for a world falsifying a formula");
  counter->add_option("--formula", ca.formula, "Formula")->required();
  counter->add_option("--atoms", ca.atoms, "Comma-separated vocabulary (default: atoms of the formula)");
  counter->add_option("--max-worlds", ca.max_worlds, "Largest model size (1 to 4)")->check(CLI::Range(1, 4));
  counter->add_option("--max-atoms", ca.max_atoms, "Largest vocabulary (0 to 2)")->check(CLI::Range(0, 2));
  counter->add_option("--agents", ca.agents, "Agents")->check(CLI::PositiveNumber);
  counter->add_flag("--pretty", ca.pretty, "Indent the JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*validate) return run_validate(va);
    if (*eval) return run_eval(ea);
    if (*transform) return run_transform(ta);
    if (*verify) return run_verify(ra);
    if (*random) return run_random(rn);
    if (*proof) return run_check_proof(pa);
    if (*counter) return run_countermodel(ca);
  } catch (const uakit::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const uakit::FormatError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const uakit::ParseError& e) {
    std::cerr << "error: formula " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const uakit::ModelError& e) {
    std::cerr << "model error: " << e.what() << '\n';
    return kFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
