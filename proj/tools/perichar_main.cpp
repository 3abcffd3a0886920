#include <csignal>
#include <iostream>
#include <string>
#include <vector>

#include "perichar/cli.hpp"

namespace {

extern "C" void handle_interrupt(int) { perichar::cli::global_cancel().cancel(); }

} // namespace

int main(int argc, char** argv) {
    std::signal(SIGINT, handle_interrupt);
    std::signal(SIGTERM, handle_interrupt);
    std::vector<std::string> args(argv + 1, argv + argc);
    return perichar::cli::run(args, std::cin, std::cout, std::cerr);
}
