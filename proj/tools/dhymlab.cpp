#include "dhymlab/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return dhymlab::cli::run(argc, argv, std::cout, std::cerr); }
