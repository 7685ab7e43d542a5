#include <CLI11.hpp>

#include "axial/harness.hpp"

int main(int argc, char** argv) {
  CLI::App app{"axial element calculus: audits, lemma suites, complexes"};
  app.require_subcommand(1);

  axial::RunOptions opts;
  bool dot = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", opts.config_path, "scenario config file")
        ->required();
    cmd->add_option("--radius", opts.radius_override,
                    "override the truncation radius");
    cmd->add_option("--out", opts.out_override, "override the output directory");
    cmd->add_flag("--dot", dot, "export graphs as .dot files");
  };

  CLI::App* audit = app.add_subcommand("audit", "audit the axial-pair axioms");
  add_common(audit);

  CLI::App* verify =
      app.add_subcommand("verify", "run one lemma suite (or \"all\")");
  verify->add_option("suite", opts.suite, "suite id")->required();
  add_common(verify);

  CLI::App* complex =
      app.add_subcommand("complex", "build complexes and diagnostics");
  add_common(complex);

  CLI::App* report = app.add_subcommand("report", "run the full pipeline");
  add_common(report);

  CLI11_PARSE(app, argc, argv);

  if (audit->parsed()) opts.command = "audit";
  if (verify->parsed()) opts.command = "verify";
  if (complex->parsed()) opts.command = "complex";
  if (report->parsed()) opts.command = "report";
  opts.dot_override = dot;

  return axial::run_scenario(opts);
}
