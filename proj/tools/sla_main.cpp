#include <iostream>
#include <string>
#include <vector>

#include "sla/tool.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return sla::run_cli(args, std::cout, std::cerr);
}
