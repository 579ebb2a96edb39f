#include <iostream>

#include "efdkit/cli.hpp"

int main(int argc, char** argv) { return efdkit::run_cli(argc, argv, std::cout, std::cerr); }
