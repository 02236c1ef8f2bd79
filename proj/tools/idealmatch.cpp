#include <iostream>

#include "idealmatch/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return idealmatch::run_cli(args, std::cin, std::cout, std::cerr);
}
