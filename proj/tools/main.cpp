#include <iostream>
#include <vector>

#include "poisson/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return poisson::cli::run(args, std::cout, std::cerr);
}
