#include <iostream>
#include <string>
#include <vector>

#include "levelone/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return levelone::run(args, std::cout, std::cerr);
}
