#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return zgring::cli::run(argc, argv, std::cout, std::cerr); }
