#include <iostream>
#include <string>
#include <vector>

#include <lvcox/cli.hpp>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return lvcox::run(args, std::cout, std::cerr);
}
