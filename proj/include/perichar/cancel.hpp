#pragma once

#include <atomic>
#include <stdexcept>

namespace perichar {

/// Thrown when a cooperative cancellation token fires mid-computation.
struct OperationCancelled : std::runtime_error {
    OperationCancelled() : std::runtime_error("operation cancelled") {}
};

/// Cooperative cancellation flag. Long-running loops poll check().
class CancelToken {
public:
    void cancel() noexcept { flag_.store(true, std::memory_order_relaxed); }
    bool cancelled() const noexcept { return flag_.load(std::memory_order_relaxed); }

    void check() const {
        if (cancelled()) throw OperationCancelled{};
    }

private:
    std::atomic<bool> flag_{false};
};

} // namespace perichar
