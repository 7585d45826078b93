#include <iostream>
#include <string>
#include <vector>

#include "semilin/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return semilin::cli::run(args, std::cout, std::cerr);
}
