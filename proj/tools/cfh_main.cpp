#include <iostream>
#include <vector>

#include "cfh/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return cfh::cli_main(args, std::cout, std::cerr);
}
