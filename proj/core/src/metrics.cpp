#include "slrsim/metrics.hpp"

#include <cmath>
#include <cstdio>

namespace slrsim {

Metrics compute_metrics(std::size_t hits, std::size_t visited, std::size_t oracle_size) {
    if (oracle_size == 0) {
        throw InconsistentCountsError("oracle size must be positive");
    }
    if (hits > visited) {
        throw InconsistentCountsError("hits (" + std::to_string(hits) +
                                      ") exceed visited (" + std::to_string(visited) + ")");
    }
    if (hits > oracle_size) {
        throw InconsistentCountsError("hits (" + std::to_string(hits) +
                                      ") exceed the oracle size (" + std::to_string(oracle_size) +
                                      ")");
    }

    Metrics m;
    m.hits = hits;
    m.visited = visited;
    m.oracle_size = oracle_size;
    m.recall = 100.0 * static_cast<double>(hits) / static_cast<double>(oracle_size);
    if (visited > 0) {
        m.precision = 100.0 * static_cast<double>(hits) / static_cast<double>(visited);
    }
    if (m.precision.has_value() && *m.precision + m.recall > 0.0) {
        m.f_measure = 2.0 * *m.precision * m.recall / (*m.precision + m.recall);
    }
    return m;
}

double round_half_up2(double value) { return std::floor(value * 100.0 + 0.5) / 100.0; }

std::string format_percent(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", round_half_up2(value));
    return buf;
}

std::string format_percent(const std::optional<double>& value) {
    return value.has_value() ? format_percent(*value) : "NAN";
}

}  // namespace slrsim
