#include <iostream>

#include "wfh_cli/commands.hpp"

int main(int argc, char** argv) { return wfh::cli::run(argc, argv, std::cout, std::cerr); }
