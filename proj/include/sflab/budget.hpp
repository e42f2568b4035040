#pragma once

#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>

#include "sflab/errors.hpp"

namespace sflab {

/// Node and wall-clock limit shared by the exponential searches.
///
/// `tick()` throws BudgetExceeded once either limit is passed. The clock is
/// only consulted every 4096 nodes.
class Budget
{
public:
    static constexpr std::uint64_t unlimited = std::numeric_limits<std::uint64_t>::max();

    Budget() = default;
    explicit Budget(std::uint64_t node_limit, std::optional<std::chrono::milliseconds> time_limit = std::nullopt)
        : _node_limit(node_limit)
    {
        if (time_limit)
            _deadline = std::chrono::steady_clock::now() + *time_limit;
    }

    void tick()
    {
        if (++_nodes > _node_limit)
            throw BudgetExceeded("node budget of " + std::to_string(_node_limit) + " exhausted");
        if (_deadline && (_nodes & 4095U) == 0 && std::chrono::steady_clock::now() > *_deadline)
            throw BudgetExceeded("time budget exhausted");
    }

    std::uint64_t nodes() const { return _nodes; }
    std::uint64_t node_limit() const { return _node_limit; }

private:
    std::uint64_t _node_limit = unlimited;
    std::uint64_t _nodes = 0;
    std::optional<std::chrono::steady_clock::time_point> _deadline;
};

} // namespace sflab
