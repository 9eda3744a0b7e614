#include <iostream>

#include "ck/cli.hpp"

int main(int argc, char** argv) { return ck::cli::run(argc, argv, std::cout, std::cerr); }
