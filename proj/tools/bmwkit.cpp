// Command-line entry point; see bmwkit/cli/app.hpp.

#include <iostream>

#include "bmwkit/cli/app.hpp"

int main(int argc, char** argv) { return bmwkit::cli::run(argc, argv, std::cout, std::cerr); }
