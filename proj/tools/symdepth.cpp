#include <iostream>

#include "symdepth/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return symdepth::run_cli(args, std::cout, std::cerr);
}
