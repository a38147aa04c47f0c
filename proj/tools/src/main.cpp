#include <iostream>

#include "braidrep_tools/cli.hpp"

int main(int argc, char** argv) { return braidrep::cli::run(argc, argv, std::cout, std::cerr); }
