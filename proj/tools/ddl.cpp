#include <iostream>

#include "ddl/cli.hpp"

int main(int argc, char** argv) { return ddl::cli::run(argc, argv, std::cout, std::cerr); }
