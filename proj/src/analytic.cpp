#include "netgrow/analytic.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace netgrow {

double predicted_degree(int m, int t, int t_i) {
    if (m < 2) throw std::invalid_argument("m must be >= 2");
    if (t_i < 1) throw std::invalid_argument("birth time must be >= 1");
    if (t_i > t) throw std::invalid_argument("birth time " + std::to_string(t_i) +
                                             " exceeds network size " + std::to_string(t));
    return m * std::sqrt(static_cast<double>(t) / static_cast<double>(t_i));
}

double predicted_pk(int k) {
    if (k < 2) throw std::invalid_argument("degree must be >= 2");
    const double kd = k;
    return 12.0 / (kd * (kd + 1.0) * (kd + 2.0));
}

double predicted_ck(int k) {
    if (k < 2) throw std::invalid_argument("degree must be >= 2");
    return 2.0 / static_cast<double>(k);
}

double predicted_global_clustering() {
    // Terms are 2 p(k) / k = 24 / (k^2 (k+1) (k+2)); the tail past K is below
    // 24 * integral_K^inf x^-4 dx = 8 / K^3.
    double sum = 0.0;
    for (int k = 2;; ++k) {
        const double kd = k;
        sum += 24.0 / (kd * kd * (kd + 1.0) * (kd + 2.0));
        if (8.0 / (kd * kd * kd) < 1e-8) break;
    }
    return sum;
}

double predicted_apl_line(int t, int m) {
    if (t < 2) throw std::invalid_argument("network size must be >= 2");
    if (m < 2) throw std::invalid_argument("m must be >= 2");
    return std::log(static_cast<double>(t)) / std::log(2.0 * m);
}

double predicted_ei_bound(int m, double k) {
    if (m < 2) throw std::invalid_argument("m must be >= 2");
    return 2.0 * (m - 1) * k / m - (m - 1);
}

}  // namespace netgrow
