#pragma once

#include <vector>

#include "idealgraph/arith.hpp"

namespace idealgraph::closed_form {

// Numeric bounds of the characterization tables. The defaults are the
// shipped tables; tests perturb copies to confirm the cross-validation
// sweep actually discriminates.
struct Bounds {
    int planar_case1_beta1 = 5;
    int planar_case2_alpha2 = 4;
    int planar_case5_alpha2 = 4;
    int planar_case7_alpha = 4;

    int ring_case1_beta1 = 4;
    int ring_case2_alpha2 = 3;
    int ring_case5_alpha2 = 3;
    int ring_case7_alpha = 3;

    int outer_case1_beta1 = 4;
    int outer_case2_alpha2 = 3;
    int outer_case5_alpha2 = 3;
    int outer_case7_alpha = 3;
};

struct CaseMatch {
    bool holds = false;
    std::vector<int> cases;  // every matching case id, ascending
};

// Case tables over exponent patterns, matched under every assignment of
// the pair's primes to the pattern's symbolic primes.
CaseMatch classify_planar(const ModulePair& pair, const Bounds& bounds = {});
CaseMatch classify_ring(const ModulePair& pair, const Bounds& bounds = {});

// Same conditions as the ring table, evaluated from an independently
// declared table so their equality stays a checked fact.
CaseMatch classify_outerplanar(const ModulePair& pair, const Bounds& bounds = {});

struct Prediction {
    bool planar = false;
    bool ring = false;
    bool outerplanar = false;
    std::vector<int> planar_cases;
    std::vector<int> ring_cases;
    std::vector<int> outerplanar_cases;
};

Prediction predict(const ModulePair& pair, const Bounds& bounds = {});

// n = m specialization: membership of m's exponent multiset in the
// characterized shape lists, independent of the general tables.
struct CorollaryPrediction {
    bool planar = false;
    bool ring = false;
    bool outerplanar = false;
};

CorollaryPrediction classify_intersection_graph(const Factorization& m);

}  // namespace idealgraph::closed_form
