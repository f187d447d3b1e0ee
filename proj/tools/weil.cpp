#include <iostream>

#include "weil/cli.hpp"

int main(int argc, char** argv) { return weil::cli::run(argc, argv, std::cout, std::cerr); }
