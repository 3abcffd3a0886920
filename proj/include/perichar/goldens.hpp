#pragma once

#include <string>
#include <vector>

#include "perichar/cancel.hpp"

namespace perichar::goldens {

struct Artifact {
    std::string filename;
    std::string content;
};

/// Regenerate every golden artifact (translation sign tables and the four
/// surjectivity probe reports). CI compares these bytewise against the files
/// under tests/golden/.
std::vector<Artifact> generate(const CancelToken* cancel = nullptr);

} // namespace perichar::goldens
