#pragma once

// Seeded random convex balanced domains for the conjecture and theorem sweeps.

#include <cstdint>
#include <random>
#include <vector>

#include "nullvar/domain.hpp"

namespace nullvar {

/// Portable uniform draw on [0, 1) (the standard distributions are not
/// reproducible across library implementations).
double uniform01(std::mt19937_64& rng);

struct PolygonOptions {
    int minPairs = 2;   ///< direction-width pairs, i.e. strips
    int maxPairs = 8;
    double maxAspect = 50.0;  ///< diameter / (2 r−)
    double minEdgeFraction = 0.02;  ///< shortest edge relative to the diameter
};

/// Intersection of k random strips |x·u_i| ≤ w_i, scaled to r+ = 1.
DomainSpec randomPolygon(std::mt19937_64& rng, const PolygonOptions& opt = {});

struct StarOptions {
    int maxModes = 4;
    /// ε is this fraction (drawn uniformly from [lo, hi]) of the convexity limit.
    double convexFractionLo = 0.1;
    double convexFractionHi = 0.9;
};

/// r = 1 + εF(θ) with a few random modes and ε below the convexity limit.
DomainSpec randomStar(std::mt19937_64& rng, const StarOptions& opt = {});

struct Corpus {
    std::uint64_t seed = 0;
    std::vector<DomainSpec> polygons;
    std::vector<DomainSpec> stars;

    std::vector<DomainSpec> all() const;
};

/// Polygons and stars are drawn from independent streams derived from the seed,
/// so changing one count does not change the other family.
Corpus makeCorpus(std::uint64_t seed, int polygons, int stars);

}  // namespace nullvar
