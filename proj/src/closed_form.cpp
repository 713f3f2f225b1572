#include "idealgraph/closed_form.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>

namespace idealgraph::closed_form {

namespace {

// A case predicate sees the exponent vectors through one assignment of the
// pair's primes to the pattern's symbolic primes p1, p2, p3.
struct View {
    const std::vector<int>* alpha;
    const std::vector<int>* beta;
    const std::vector<int>* perm;
    int a(int i) const { return (*alpha)[(*perm)[i]]; }
    int b(int i) const { return (*beta)[(*perm)[i]]; }
};

using CasePredicate = std::function<bool(const View&)>;

std::vector<int> match_cases(const ModulePair& pair,
                             const std::vector<std::pair<int, CasePredicate>>& table) {
    const int s = pair.prime_count();
    std::vector<int> matched;
    if (s > 3) return matched;
    std::vector<int> perm(s);
    std::iota(perm.begin(), perm.end(), 0);
    View view{&pair.alpha, &pair.beta, &perm};
    for (const auto& [id, pred] : table) {
        bool holds = false;
        std::sort(perm.begin(), perm.end());
        do {
            if (pred(view)) {
                holds = true;
                break;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (holds) matched.push_back(id);
    }
    return matched;
}

// Shared case shapes; the four parameterized bounds vary per property.
std::vector<std::pair<int, CasePredicate>> case_table(int s, int case1_beta1, int case2_alpha2,
                                                      int case5_alpha2, int case7_alpha) {
    std::vector<std::pair<int, CasePredicate>> table;
    if (s == 1) {
        table.emplace_back(1, [case1_beta1](const View& v) { return v.b(0) <= case1_beta1; });
    } else if (s == 2) {
        table.emplace_back(2, [case2_alpha2](const View& v) {
            return v.b(0) == 1 && v.b(1) == 0 && v.a(1) <= case2_alpha2;
        });
        table.emplace_back(3, [](const View& v) {
            return v.b(0) == 2 && v.b(1) == 0 && v.a(1) == 1;
        });
        table.emplace_back(5, [case5_alpha2](const View& v) {
            return v.b(0) == 1 && v.b(1) == 2 && v.a(0) == 1 && v.a(1) >= 2 &&
                   v.a(1) <= case5_alpha2;
        });
        table.emplace_back(7, [case7_alpha](const View& v) {
            return v.b(0) == 1 && v.b(1) == 1 && v.a(0) <= case7_alpha && v.a(1) <= case7_alpha;
        });
    } else if (s == 3) {
        table.emplace_back(4, [](const View& v) {
            return v.b(0) == 1 && v.b(1) == 0 && v.b(2) == 0 && v.a(1) == 1 && v.a(2) == 1;
        });
        table.emplace_back(6, [](const View& v) {
            return v.a(0) == 1 && v.a(1) == 1 && v.a(2) == 1 && v.b(0) == 1 && v.b(1) == 1 &&
                   v.b(2) == 0;
        });
        table.emplace_back(8, [](const View& v) {
            return v.a(0) == 1 && v.a(1) == 1 && v.a(2) == 1 && v.b(0) == 1 && v.b(1) == 1 &&
                   v.b(2) == 1;
        });
    }
    return table;
}

CaseMatch run(const ModulePair& pair, int c1, int c2, int c5, int c7) {
    CaseMatch match;
    match.cases = match_cases(pair, case_table(pair.prime_count(), c1, c2, c5, c7));
    match.holds = !match.cases.empty();
    return match;
}

}  // namespace

CaseMatch classify_planar(const ModulePair& pair, const Bounds& bounds) {
    return run(pair, bounds.planar_case1_beta1, bounds.planar_case2_alpha2,
               bounds.planar_case5_alpha2, bounds.planar_case7_alpha);
}

CaseMatch classify_ring(const ModulePair& pair, const Bounds& bounds) {
    return run(pair, bounds.ring_case1_beta1, bounds.ring_case2_alpha2, bounds.ring_case5_alpha2,
               bounds.ring_case7_alpha);
}

CaseMatch classify_outerplanar(const ModulePair& pair, const Bounds& bounds) {
    return run(pair, bounds.outer_case1_beta1, bounds.outer_case2_alpha2,
               bounds.outer_case5_alpha2, bounds.outer_case7_alpha);
}

Prediction predict(const ModulePair& pair, const Bounds& bounds) {
    Prediction p;
    CaseMatch planar = classify_planar(pair, bounds);
    CaseMatch ring = classify_ring(pair, bounds);
    CaseMatch outer = classify_outerplanar(pair, bounds);
    p.planar = planar.holds;
    p.ring = ring.holds;
    p.outerplanar = outer.holds;
    p.planar_cases = std::move(planar.cases);
    p.ring_cases = std::move(ring.cases);
    p.outerplanar_cases = std::move(outer.cases);
    return p;
}

CorollaryPrediction classify_intersection_graph(const Factorization& m) {
    std::vector<int> shape = m.exponents();
    std::sort(shape.begin(), shape.end());
    static const std::vector<std::vector<int>> planar_shapes = {
        {1}, {2}, {3}, {4}, {5}, {1, 1}, {1, 2}, {1, 1, 1}};
    static const std::vector<std::vector<int>> ring_shapes = {
        {1}, {2}, {3}, {4}, {1, 1}, {1, 2}, {1, 1, 1}};
    static const std::vector<std::vector<int>> outer_shapes = {
        {1}, {2}, {3}, {4}, {1, 1}, {1, 2}, {1, 1, 1}};
    auto contains = [&shape](const std::vector<std::vector<int>>& list) {
        return std::find(list.begin(), list.end(), shape) != list.end();
    };
    CorollaryPrediction p;
    p.planar = contains(planar_shapes);
    p.ring = contains(ring_shapes);
    p.outerplanar = contains(outer_shapes);
    return p;
}

}  // namespace idealgraph::closed_form
