#include <iostream>
#include <string>
#include <vector>

#include "resfield/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return resfield::cli::run(args, std::cout, std::cerr);
}
