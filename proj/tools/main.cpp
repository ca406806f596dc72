#include <iostream>

#include "CLI11.hpp"
#include "cli.hpp"
#include "ssetkit/errors.hpp"

int main(int argc, char** argv) {
  using namespace ssetkit::cli;
  JobSpec job;
  try {
    job = parse_arguments(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << "usage: sset-kit <command> [mode] [options]; see README for the command list\n";
    return exit_ok;
  } catch (const ssetkit::Error& e) {
    std::cerr << "sset-kit: " << e.what() << "\n";
    return exit_malformed;
  }
  return execute(job, std::cout, std::cerr);
}
