#include <iostream>
#include <string>
#include <vector>

#include "qdm/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return qdm::run_cli(args, std::cout, std::cerr);
}
