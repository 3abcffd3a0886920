#include "perichar/weights.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace perichar {

namespace testing {

namespace {
std::atomic<bool>& fault_flag() {
    static std::atomic<bool> flag{[] {
        const char* env = std::getenv("PERICHAR_MUTATE_PARITY");
        return env != nullptr && env[0] == '1';
    }()};
    return flag;
}
} // namespace

void set_parity_fault(bool enabled) { fault_flag().store(enabled); }
bool parity_fault() { return fault_flag().load(); }

} // namespace testing

bool is_dominant(const Weight& lambda) {
    for (std::size_t i = 1; i < lambda.size(); ++i)
        if (lambda[i - 1] < lambda[i]) return false;
    return true;
}

int parity(const Weight& lambda) {
    const std::int64_t s = std::accumulate(lambda.begin(), lambda.end(), std::int64_t{0});
    const std::int64_t h = (s % 2 == 0) ? s / 2 : (s + 1) / 2;
    const int p = static_cast<int>(((h % 2) + 2) % 2);
    return testing::parity_fault() ? 1 - p : p;
}

Weight rho(int n) {
    if (n < 0) throw DomainError("rank too small");
    Weight r(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) r[static_cast<std::size_t>(i)] = n - 1 - i;
    return r;
}

WeightDiagram to_diagram(const Weight& lambda) {
    if (!is_dominant(lambda)) throw DomainError("weight not dominant");
    const std::int64_t n = static_cast<std::int64_t>(lambda.size());
    WeightDiagram d;
    d.bullets.reserve(lambda.size());
    for (std::int64_t i = 0; i < n; ++i)
        d.bullets.push_back(lambda[static_cast<std::size_t>(i)] + n - 1 - i);
    return d; // strictly decreasing because lambda is weakly decreasing
}

Weight from_diagram(const WeightDiagram& d) {
    for (std::size_t i = 1; i < d.bullets.size(); ++i)
        if (d.bullets[i - 1] <= d.bullets[i])
            throw DomainError("diagram positions not strictly decreasing");
    const std::int64_t n = static_cast<std::int64_t>(d.bullets.size());
    Weight lambda(d.bullets.size());
    for (std::int64_t i = 0; i < n; ++i)
        lambda[static_cast<std::size_t>(i)] = d.bullets[static_cast<std::size_t>(i)] - (n - 1 - i);
    return lambda;
}

bool dominance_leq(const Weight& lambda, const Weight& mu) {
    if (lambda.size() != mu.size()) throw DomainError("rank mismatch");
    for (std::size_t i = 0; i < lambda.size(); ++i)
        if (lambda[i] < mu[i]) return false;
    return true;
}

std::vector<BallMove> ball_moves(const Weight& lambda) {
    if (!is_dominant(lambda)) throw DomainError("weight not dominant");
    const std::int64_t n = static_cast<std::int64_t>(lambda.size());
    std::vector<BallMove> moves;
    for (std::int64_t i = 0; i < n; ++i) {
        const std::int64_t pos = lambda[static_cast<std::size_t>(i)] + n - 1 - i;
        for (int dir : {+1, -1}) {
            Weight target = lambda;
            target[static_cast<std::size_t>(i)] += dir;
            if (is_dominant(target)) moves.push_back({pos, dir, std::move(target)});
        }
    }
    return moves;
}

std::string render_diagram(const Weight& lambda, std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw DomainError("empty diagram window");
    const WeightDiagram d = to_diagram(lambda);
    std::size_t width = 1;
    for (std::int64_t p = lo; p <= hi; ++p)
        width = std::max(width, std::to_string(p).size());
    std::ostringstream labels, beads;
    for (std::int64_t p = lo; p <= hi; ++p) {
        std::string lab = std::to_string(p);
        labels << std::string(width - lab.size() + (p == lo ? 0 : 1), ' ') << lab;
        const bool bead = std::find(d.bullets.begin(), d.bullets.end(), p) != d.bullets.end();
        beads << std::string(width - 1 + (p == lo ? 0 : 1), ' ') << (bead ? 'b' : 'o');
    }
    return labels.str() + "\n" + beads.str() + "\n";
}

} // namespace perichar
