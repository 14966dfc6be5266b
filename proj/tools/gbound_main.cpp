#include <iostream>
#include <string>
#include <vector>

#include "gbound/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return gbound::cli::run(args, std::cout, std::cerr);
}
