#include <iostream>

#include "flatwitness/cli.hpp"

int main(int argc, char** argv) { return flatwitness::cli::run(argc, argv, std::cout, std::cerr); }
