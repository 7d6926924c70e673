#include <iostream>
#include <string>
#include <vector>

#include "stiefel/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return stiefel::cli::run(args, std::cout, std::cerr);
}
