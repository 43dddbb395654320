#include "k3br/cli/commands.hpp"

#include <iostream>

int main(int argc, char** argv) { return k3br::cli::run_cli(argc, argv, std::cout, std::cerr); }
