#include <iostream>
#include <string>
#include <vector>

#include "circleroots/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv, argv + argc);
    return circleroots::cli::run(args, std::cout, std::cerr);
}
