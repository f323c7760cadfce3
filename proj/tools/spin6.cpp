#include <iostream>
#include <string>
#include <vector>

#include "spin6/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return spin6::cli::run(args, std::cout, std::cerr);
}
