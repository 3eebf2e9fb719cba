#include <iostream>

#include "ffarank/cli.h"

int main(int argc, char** argv) {
  return ffarank::RunCli(argc, argv, std::cout, std::cerr);
}
