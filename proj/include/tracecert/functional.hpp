#pragma once

// Linear functionals on words that are constant on rotation classes. Produced by
// the dual side of the Gram search and consumed by the GNS construction.

#include <map>
#include <optional>

#include "tracecert/ncpoly/ncpoly.hpp"

namespace tracecert {

struct TracialFunctional {
    int n = 0;
    /// Defined on words of length <= 2 * level.
    int level = 0;
    /// Keyed by the least rotation of each class.
    std::map<ncpoly::Word, double> values;

    int max_length() const { return 2 * level; }

    std::optional<double> value(const ncpoly::Word& w) const {
        auto it = values.find(ncpoly::cyclic_canonical(w).representative);
        if (it == values.end()) return std::nullopt;
        return it->second;
    }

    /// Missing words read as 0.
    double operator()(const ncpoly::Word& w) const { return value(w).value_or(0.0); }

    double operator()(const ncpoly::NcPoly& f) const {
        double s = 0;
        for (const auto& [w, c] : f) s += to_double(c) * (*this)(w);
        return s;
    }

    void set(const ncpoly::Word& w, double v) { values[ncpoly::cyclic_canonical(w).representative] = v; }
};

}  // namespace tracecert
