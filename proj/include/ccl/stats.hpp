#pragma once

#include <cmath>
#include <span>

namespace ccl {

struct Stats {
    double min = 0.0;
    double max = 0.0;
    double mean = 0.0;
    double stddev = 0.0;  // population
};

inline Stats compute_stats(std::span<const double> xs) {
    Stats s;
    if (xs.empty()) return s;
    s.min = xs[0];
    s.max = xs[0];
    double sum = 0.0;
    for (double x : xs) {
        s.min = x < s.min ? x : s.min;
        s.max = x > s.max ? x : s.max;
        sum += x;
    }
    s.mean = sum / double(xs.size());
    double var = 0.0;
    for (double x : xs) var += (x - s.mean) * (x - s.mean);
    s.stddev = std::sqrt(var / double(xs.size()));
    return s;
}

}  // namespace ccl
