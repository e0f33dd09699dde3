#include <iostream>

#include "groewalk/cli.hpp"

int main(int argc, char** argv) {
    return groewalk::run_cli(argc, argv, std::cout, std::cerr);
}
