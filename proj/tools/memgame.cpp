#include <iostream>
#include <string>
#include <vector>

#include "memgame/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return memgame::cli::main_entry(args, std::cout, std::cerr);
}
