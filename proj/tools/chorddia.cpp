#include <iostream>
#include <string>
#include <vector>

#include "chorddia/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return chorddia::run(args, std::cout, std::cerr);
}
