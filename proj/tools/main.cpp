#include <iostream>
#include <string>
#include <vector>

#include "svcfc/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return svcfc::run_cli(args, std::cout, std::cerr);
}
