#include <iostream>
#include <vector>

#include "sro/cli.hpp"

int main(int argc, char** argv) {
    return sro::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr,
                    std::cin);
}
