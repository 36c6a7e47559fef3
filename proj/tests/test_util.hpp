#pragma once

#include <random>

#include "lumps/rational_map.hpp"

namespace lumps::testutil {

inline RationalMap random_valid_map(int n, std::mt19937_64& rng, double min_lead = 0.3) {
    std::normal_distribution<double> gauss;
    for (int attempt = 0; attempt < 200; ++attempt) {
        std::vector<cplx> num(n + 1), den(n + 1);
        for (auto& c : num) c = cplx(gauss(rng), gauss(rng));
        for (auto& c : den) c = cplx(gauss(rng), gauss(rng));
        RationalMap m(n, num, den);
        if (is_valid_degree(m, 1e-6) && std::abs(den[n]) > min_lead) return m;
    }
    throw std::runtime_error("random_valid_map failed");
}

} // namespace lumps::testutil
