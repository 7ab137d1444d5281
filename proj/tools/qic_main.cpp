#include "qic/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return qic::cli::run(argc, argv, std::cout, std::cerr); }
