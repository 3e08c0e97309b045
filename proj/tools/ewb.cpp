#include <iostream>
#include <string>
#include <vector>

#include "ewb/io.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return ewb::run_cli(args, std::cout);
}
