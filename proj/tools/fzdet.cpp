#include <iostream>
#include <string>
#include <vector>

#include "fzdet/io.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return fzdet::run_cli(args, std::cout, std::cerr);
}
