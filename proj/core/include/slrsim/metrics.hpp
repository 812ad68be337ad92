#ifndef SLRSIM_METRICS_HPP
#define SLRSIM_METRICS_HPP

#include <cstddef>
#include <optional>
#include <string>

#include "slrsim/errors.hpp"

namespace slrsim {

/// Precision/recall/F-measure of one strategy outcome, as percentages.
/// Precision is undefined (rendered as NAN) when nothing was visited; the
/// F-measure is defined as 0 in that case and when P + R = 0.
struct Metrics {
    std::optional<double> precision;  // percentage, nullopt when visited == 0
    double recall = 0.0;              // percentage
    double f_measure = 0.0;           // percentage
    std::size_t hits = 0;
    std::size_t visited = 0;
    std::size_t oracle_size = 0;

    bool operator==(const Metrics&) const = default;
};

/// hits = |visited ∩ oracle|. Percentages are kept at full precision;
/// rounding to two decimals happens only when rendering.
Metrics compute_metrics(std::size_t hits, std::size_t visited, std::size_t oracle_size);

/// Half-up rounding to two decimals, the single rounding rule of all outputs.
double round_half_up2(double value);

/// "46.67", "100.00", ...
std::string format_percent(double value);

/// Same, but renders an undefined value as "NAN".
std::string format_percent(const std::optional<double>& value);

}  // namespace slrsim

#endif  // SLRSIM_METRICS_HPP
