#include "fracineq/cli/app.hpp"

#include <iostream>

int main(int argc, char** argv) { return fracineq::cli::run_app(argc, argv, std::cout, std::cerr); }
