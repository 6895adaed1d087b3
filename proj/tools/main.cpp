#include <iostream>
#include <string>
#include <vector>

#include "tensortopsis/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return tensortopsis::run_command(args, std::cout, std::cerr);
}
