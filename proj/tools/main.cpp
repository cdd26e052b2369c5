#include <fstream>
#include <iostream>
#include <stdexcept>

#include "cli.hpp"
#include "cycram/errors.hpp"

namespace cycram::cli {

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text << '\n';
}

}  // namespace cycram::cli

int main(int argc, char** argv) {
  using namespace cycram::cli;
  CLI::App app{"Cycle-complete Ramsey numbers: witnesses, certificates and exact values"};
  app.require_subcommand(1);
  Action action;
  add_witness(app, action);
  add_search(app, action);
  add_exact(app, action);
  add_lemma(app, action);
  add_bench(app, action);
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  try {
    return action();
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const cycram::GuaranteeUnavailable& e) {
    std::cerr << "hypothesis failed: " << e.hypothesis() << " (" << e.what() << ")\n";
    return kHypothesis;
  } catch (const cycram::CapacityError& e) {
    std::cerr << "capacity: " << e.what() << '\n';
    return kIncomplete;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
}
