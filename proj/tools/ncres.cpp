#include "ncres/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

struct Options {
  std::string pairing = "both";
  std::vector<std::string> set;
  std::string format = "text";
  std::string output;
  bool formal_omega = false;
  unsigned threads = 0;
};

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--set", o.set, "Substitute exact values, e.g. hp=0 or W=0 or dU1_4=1/2,V4=2");
  cmd->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--output,-o", o.output, "Write the report to a file instead of stdout");
  cmd->add_option("--threads", o.threads, "Worker threads for the boundary cases (0: NCRES_THREADS or all cores)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Boundary residue verification engine"};
  app.set_version_flag("--version", ncres::engine_version());
  app.require_subcommand(1);

  Options o;
  auto* phi = app.add_subcommand("phi", "Boundary densities for the two operator pairings");
  phi->add_option("--pairing", o.pairing, "A, B or both")->check(CLI::IsMember({"A", "B", "both"}));
  add_common(phi, o);
  auto* traces = app.add_subcommand("verify-traces", "Boundary trace identities");
  traces->add_flag("--formal-omega", o.formal_omega, "Keep the connection coefficients as formal symbols");
  add_common(traces, o);
  auto* functional = app.add_subcommand("functional", "Closed-manifold density, Tr E and F(U,V)");
  add_common(functional, o);
  auto* all = app.add_subcommand("all", "Every pipeline plus the symbol catalog");
  add_common(all, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  ncres::RunConfig config;
  config.command = app.get_subcommands().front()->get_name();
  if (o.pairing == "A") config.pairings = {ncres::Pairing::A};
  if (o.pairing == "B") config.pairings = {ncres::Pairing::B};
  config.assignments = o.set;
  config.omega = o.formal_omega ? ncres::OmegaModel::formal : ncres::OmegaModel::normal_form;
  config.threads = o.threads;

  try {
    const ncres::RunResult res = ncres::run(config);
    const std::string text = o.format == "json" ? res.document.dump(2) + "\n" : ncres::render_text(res.document);
    if (o.output.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(o.output, std::ios::binary);
      if (!out) throw std::runtime_error("cannot open " + o.output);
      out << text;
    }
    return res.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
