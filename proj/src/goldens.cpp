#include "perichar/goldens.hpp"

#include <map>

#include "perichar/euler.hpp"
#include "perichar/serialize.hpp"
#include "perichar/superchar.hpp"

namespace perichar::goldens {

namespace {

nlohmann::ordered_json sign_table_entry(const Weight& lambda) {
    nlohmann::ordered_json entry;
    entry["n"] = static_cast<int>(lambda.size());
    entry["lambda"] = lambda;
    std::map<std::int64_t, bool> sources;
    for (const auto& move : ball_moves(lambda)) sources[move.source] = true;
    nlohmann::ordered_json moves = nlohmann::ordered_json::array();
    for (const auto& [k, unused] : sources) {
        nlohmann::ordered_json m;
        m["k"] = k;
        m["terms"] = combo_to_json(translate_thin_kac(lambda, k))["terms"];
        moves.push_back(std::move(m));
    }
    entry["moves"] = std::move(moves);
    return entry;
}

} // namespace

std::vector<Artifact> generate(const CancelToken* cancel) {
    std::vector<Artifact> artifacts;

    nlohmann::ordered_json tables = nlohmann::ordered_json::array();
    for (const Weight& lambda : std::vector<Weight>{{0}, {0, 0}, {1, 0}, {0, 0, 0}}) {
        if (cancel) cancel->check();
        tables.push_back(sign_table_entry(lambda));
    }
    artifacts.push_back({"sign_tables.json", tables.dump(2) + "\n"});

    for (const auto& [n, k] : std::vector<std::pair<int, int>>{{3, 1}, {4, 1}, {5, 1}, {5, 2}}) {
        if (cancel) cancel->check();
        const ProbeReport report = surjectivity_probe(n, k, -4, 4, cancel);
        artifacts.push_back({"probe_n" + std::to_string(n) + "_k" + std::to_string(k) + ".json",
                             probe_to_json(report).dump(2) + "\n"});
    }
    return artifacts;
}

} // namespace perichar::goldens
