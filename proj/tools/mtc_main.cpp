#include <iostream>

#include "mtc/cli.hpp"

int main(int argc, char** argv) { return mtc::cli::main(argc, argv, std::cout, std::cerr); }
