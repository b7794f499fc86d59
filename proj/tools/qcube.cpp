#include <iostream>

#include "qcube/cli.hpp"

int main(int argc, char** argv) { return qcube::run_cli(argc, argv, std::cout, std::cerr); }
