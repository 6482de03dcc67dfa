#include <iostream>

#include "unigamma/cli.hpp"

int main(int argc, char** argv) { return unigamma::cli::run(argc, argv, std::cout, std::cerr); }
