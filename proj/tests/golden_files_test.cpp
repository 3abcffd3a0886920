// Bytewise comparison of the checked-in golden files against regenerated
// artifacts. Run with --update to rewrite them after a reviewed change.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "perichar/goldens.hpp"

#ifndef PERICHAR_GOLDEN_DIR
#define PERICHAR_GOLDEN_DIR "tests/golden"
#endif

namespace {

std::string golden_dir() {
    if (const char* env = std::getenv("PERICHAR_GOLDEN_DIR")) return env;
    return PERICHAR_GOLDEN_DIR;
}

} // namespace

int main(int argc, char** argv) {
    const bool update = argc > 1 && std::string(argv[1]) == "--update";
    const std::string dir = golden_dir();
    int failures = 0;

    for (const auto& artifact : perichar::goldens::generate()) {
        const std::string path = dir + "/" + artifact.filename;
        if (update) {
            std::ofstream out(path, std::ios::binary);
            out << artifact.content;
            std::cout << "wrote " << path << "\n";
            continue;
        }
        std::ifstream in(path, std::ios::binary);
        if (!in) {
            std::cout << "[FAIL] " << artifact.filename << ": missing golden file " << path << "\n";
            ++failures;
            continue;
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        if (buf.str() != artifact.content) {
            std::cout << "[FAIL] " << artifact.filename << ": regenerated bytes differ\n";
            ++failures;
        } else {
            std::cout << "[PASS] " << artifact.filename << "\n";
        }
    }
    return failures == 0 ? 0 : 1;
}
