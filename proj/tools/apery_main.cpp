#include "apery/cli.hpp"

#include <iostream>
#include <locale>

int main(int argc, char** argv)
{
    std::locale::global(std::locale::classic());
    std::vector<std::string> args(argv + 1, argv + argc);
    return apery::run_cli(args, std::cout, std::cerr);
}
