#include "bandcol/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return bandcol::cli_main(argc, argv, std::cout, std::cerr); }
