#include <unistd.h>

#include <iostream>
#include <string>
#include <vector>

#include "citax/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    return citax::run_cli(args, std::cout, std::cerr, isatty(STDOUT_FILENO) == 1);
}
