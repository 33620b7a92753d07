#include <iostream>
#include <string>
#include <vector>

#include "phytobase/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return phytobase::cli_dispatch(args, std::cout, std::cerr);
}
