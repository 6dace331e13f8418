#include <iostream>

#include "steinerlab/acceptance.hpp"

int main(int argc, char** argv) {
    std::string filter = argc > 1 ? argv[1] : "";
    return steinerlab::acceptance_main(filter, std::cout);
}
