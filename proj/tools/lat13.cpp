// Command-line front end. Subcommands are wired up as their modules land.

#include "lat13/vonorm.hpp"

#include <CLI11.hpp>

#include <cstdio>

int main(int argc, char** argv) {
  CLI::App app{"lattice fingerprints in R^13"};
  CLI11_PARSE(app, argc, argv);
  std::puts("lat13: no subcommand given");
  return 2;
}
