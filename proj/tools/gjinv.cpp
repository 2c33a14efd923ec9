#include "gjinv/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return gjinv::cli::main_entry(argc, argv, std::cin, std::cout, std::cerr);
}
