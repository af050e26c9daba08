#include <iostream>

#include "dickson4/cli.hpp"

int main(int argc, char** argv) { return dickson4::cli_main(argc, argv, std::cout, std::cerr); }
