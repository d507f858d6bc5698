#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "roman/rdf.hpp"

namespace roman {

inline constexpr int kDefaultOracleCap = 24;

struct OracleCapExceeded : std::runtime_error {
    int order;
    int cap;
    OracleCapExceeded(int n, int c)
        : std::runtime_error("oracle refuses order " + std::to_string(n) + " above cap " +
                             std::to_string(c)),
          order(n),
          cap(c) {}
};

using FunctionSink = std::function<void(const RomanFunction&)>;

// Reference enumerator: sweeps all 2^n candidate 2-sets in ascending bitmask
// order (bit i <-> vertex i) and emits each function that passes the
// minimality test. Every minimal function appears exactly once.
void oracle_enumerate(const Graph& g, const FunctionSink& sink, int cap = kDefaultOracleCap);

std::uint64_t oracle_count(const Graph& g, int cap = kDefaultOracleCap);

std::vector<RomanFunction> oracle_collect(const Graph& g, int cap = kDefaultOracleCap);

}  // namespace roman
