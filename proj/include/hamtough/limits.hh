/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef HAMTOUGH_GUARD_LIMITS_HH
#define HAMTOUGH_GUARD_LIMITS_HH 1

#include <atomic>
#include <chrono>
#include <cstdint>
#include <optional>

namespace hamtough
{
    /**
     * Cooperative cancellation shared between a caller and a long-running
     * search. The deadline must be set before the token is handed out.
     */
    class CancellationToken
    {
    public:
        CancellationToken() = default;
        explicit CancellationToken(std::chrono::steady_clock::time_point deadline) : _deadline(deadline) {}

        CancellationToken(const CancellationToken &) = delete;
        auto operator=(const CancellationToken &) -> CancellationToken & = delete;

        auto cancel() noexcept -> void { _cancelled.store(true, std::memory_order_relaxed); }

        auto cancelled() const noexcept -> bool
        {
            if (_cancelled.load(std::memory_order_relaxed))
                return true;
            return _deadline && std::chrono::steady_clock::now() >= *_deadline;
        }

    private:
        std::atomic<bool> _cancelled{false};
        std::optional<std::chrono::steady_clock::time_point> _deadline;
    };

    struct SearchLimits
    {
        const CancellationToken * cancel = nullptr;

        /// Maximum search nodes before giving up; 0 means unlimited.
        std::uint64_t node_limit = 0;
    };

    /// Counts search nodes and throws ResourceLimitExceeded once a limit trips.
    class SearchBudget
    {
    public:
        explicit SearchBudget(const SearchLimits & limits) : _limits(limits) {}

        auto tick() -> void
        {
            ++_nodes;
            if (_limits.node_limit != 0 && _nodes > _limits.node_limit)
                exceeded("node limit reached");
            if (_limits.cancel && 0 == (_nodes & 0x3ff) && _limits.cancel->cancelled())
                exceeded("cancelled or out of time");
        }

        auto nodes() const noexcept -> std::uint64_t { return _nodes; }

    private:
        [[noreturn]] static auto exceeded(const char * why) -> void;

        SearchLimits _limits;
        std::uint64_t _nodes = 0;
    };
}

#endif
