#include "powcol/cli.hpp"

int main(int argc, char** argv) {
  return powcol::run_cli(argc, argv);
}
