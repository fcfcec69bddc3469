#pragma once

#include <cstddef>
#include <span>

namespace netgrow {

// Ensemble summary of one observable across realizations.
struct EnsembleStats {
    double mean = 0.0;
    double std_error = 0.0;  // sample stddev / sqrt(count)
    std::size_t count = 0;
};

EnsembleStats summarize(std::span<const double> values);

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
};

// Ordinary least squares of y against x.
LinearFit linear_fit(std::span<const double> x, std::span<const double> y);

// Pearson chi-square statistic of observed counts against expected counts.
double chi_square_statistic(std::span<const std::size_t> observed,
                            std::span<const double> expected);

// Upper-tail p-value of the chi-square distribution.
double chi_square_p_value(double statistic, int dof);

}  // namespace netgrow
