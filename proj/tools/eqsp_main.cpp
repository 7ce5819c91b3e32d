#include <iostream>
#include <string>
#include <vector>

#include "eqsp/io.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return eqsp::run_command(args, std::cout, std::cerr);
}
