#include <digideal/cli.hpp>

#include <iostream>
#include <string>
#include <vector>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    auto r = digideal::cli::run(args);
    std::cout << r.out;
    std::cerr << r.err;
    return r.code;
}
