#include <iostream>

#include "csbc/cli/commands.hpp"

int main(int argc, char** argv) { return csbc::cli::run_cli(argc, argv, std::cout, std::cerr); }
