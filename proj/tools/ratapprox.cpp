#include <iostream>

#include "ratapprox/cli.hpp"

int main(int argc, char** argv) { return ratapprox::cli::run(argc, argv, std::cout, std::cerr); }
