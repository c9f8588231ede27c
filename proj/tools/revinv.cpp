#include <iostream>

#include "revinv/cli.hpp"

int main(int argc, char** argv) { return revinv::run_cli(argc, argv, std::cout, std::cerr); }
