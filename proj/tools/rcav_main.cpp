#include <string>
#include <vector>

#include "rcav/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return rcav::cli::run(std::move(args));
}
