#include <iostream>
#include <string>
#include <vector>

#include "twalg/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return twalg::run_cli(args, std::cout, std::cerr);
}
