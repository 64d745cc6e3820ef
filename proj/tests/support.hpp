#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "geoph/complex.hpp"
#include "geoph/homology.hpp"

namespace testing_support {

// Up to `count` filtration values spread evenly over the distinct values of
// the complex, always including the first and the last.
inline std::vector<double> sample_values(const geoph::FilteredComplex& fc, std::size_t count = 10) {
    const auto values = fc.distinct_values();
    if (values.size() <= count) return values;
    std::vector<double> out;
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(values[i * (values.size() - 1) / (count - 1)]);
    }
    return out;
}

// Euler characteristic of every sampled sublevel complex against the
// alternating sum of bars alive there. Returns the first mismatch, or "".
inline std::string euler_mismatch(const geoph::FilteredComplex& fc, const geoph::Barcode& b) {
    for (double t : sample_values(fc)) {
        const auto sub = geoph::complex_at(fc, t);
        const long chi = geoph::euler_characteristic(sub);
        const long alive = long(b.alive_count(0, t)) - long(b.alive_count(1, t)) + long(b.alive_count(2, t));
        if (chi != alive) {
            return "t=" + std::to_string(t) + " chi=" + std::to_string(chi) + " bars=" + std::to_string(alive);
        }
    }
    return "";
}

inline std::size_t count_substr(const std::string& hay, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
    return n;
}

}  // namespace testing_support
