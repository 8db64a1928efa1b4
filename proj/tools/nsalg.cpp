#include <iostream>

#include "nsalg/cli.hpp"

int main(int argc, char** argv) { return nsalg::cli::run(argc, argv, std::cout, std::cerr); }
