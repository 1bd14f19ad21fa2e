#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "driftcast/state.hpp"

namespace testutil {

inline double max_abs(const driftcast::FieldF& f) {
    double m = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) m = std::max(m, std::abs((double)f.data()[i]));
    return m;
}

inline double max_abs_diff(const driftcast::FieldF& a, const driftcast::FieldF& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        m = std::max(m, std::abs((double)a.data()[i] - (double)b.data()[i]));
    return m;
}

inline double sum(const driftcast::FieldF& f) {
    double s = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) s += f.data()[i];
    return s;
}

inline double max_state_diff(const driftcast::OceanState& a, const driftcast::OceanState& b) {
    return std::max({max_abs_diff(a.eta, b.eta), max_abs_diff(a.hu, b.hu),
                     max_abs_diff(a.hv, b.hv)});
}

inline bool states_bitwise_equal(const driftcast::OceanState& a, const driftcast::OceanState& b) {
    auto eq = [](const driftcast::FieldF& x, const driftcast::FieldF& y) {
        for (std::size_t i = 0; i < x.size(); ++i)
            if (x.data()[i] != y.data()[i]) return false;
        return true;
    };
    return eq(a.eta, b.eta) && eq(a.hu, b.hu) && eq(a.hv, b.hv);
}

} // namespace testutil
