#include <iostream>
#include <string>
#include <vector>

#include "ucover/cli/app.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return ucover::cli::run(args, std::cout, std::cerr);
}
