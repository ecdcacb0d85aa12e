// Shared helpers for the test suite: weight grids, deterministic random
// element generators, and label enumeration for W(l,n).
#pragma once

#include <random>
#include <vector>

#include "hwv/counting.hpp"
#include "hwv/lie.hpp"
#include "hwv/weight.hpp"
#include "hwv/weight_module.hpp"

namespace hwv::testing {

/// Every weight for sl(n) with at most k_max fundamental-weight summands and
/// multiplicities in 1..l_max.
inline std::vector<WeightSpec> weights_for(int n, int k_max, int l_max) {
    std::vector<WeightSpec> out;
    std::vector<std::vector<int>> bound_sets;
    for (int k = 1; k <= k_max && k <= n - 1; ++k)
        for (const auto& bounds : increasing_subsets(n - 1, k)) bound_sets.push_back(bounds);
    for (const auto& bounds : bound_sets) {
        std::vector<int> multiplicities(bounds.size(), 1);
        while (true) {
            std::vector<std::pair<int, int>> parts;
            for (std::size_t i = 0; i < bounds.size(); ++i)
                parts.emplace_back(bounds[i], multiplicities[i]);
            out.emplace_back(n, parts);
            int pos = static_cast<int>(multiplicities.size()) - 1;
            while (pos >= 0 && multiplicities[pos] == l_max) multiplicities[pos--] = 1;
            if (pos < 0) break;
            ++multiplicities[pos];
        }
    }
    return out;
}

/// The acceptance grid: n in {2,3,4}, k <= 2, l_i <= 3.
inline std::vector<WeightSpec> acceptance_grid() {
    std::vector<WeightSpec> out;
    for (int n : {2, 3, 4})
        for (const auto& w : weights_for(n, 2, 3)) out.push_back(w);
    return out;
}

inline Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    return rational(num(rng), den(rng));
}

/// Random traceless matrix as a rational combination of a Lie basis.
inline LieElement random_lie_element(std::mt19937_64& rng, const LieBasis& basis) {
    Matrix x(basis.flag.n);
    for (const auto& member : basis.members) {
        Rational c = random_rational(rng);
        if (!is_zero(c)) x += c * member;
    }
    return x;
}

/// All basis labels of W(l,n), via multisets of wedge subsets per component.
inline std::vector<WBasisLabel> enumerate_w_labels(const WeightSpec& w) {
    std::vector<std::vector<WBasisLabel::WedgeMultiset>> per_component;
    for (const auto& [bound, multiplicity] : w.parts) {
        std::vector<WBasisLabel::IndexSet> subsets = increasing_subsets(w.n, bound);
        std::vector<WBasisLabel::WedgeMultiset> multisets;
        std::vector<std::size_t> pick(multiplicity, 0);
        while (true) {
            WBasisLabel::WedgeMultiset ms;
            for (std::size_t p : pick) ms.push_back(subsets[p]);
            multisets.push_back(ms);
            int pos = multiplicity - 1;
            while (pos >= 0 && pick[pos] == subsets.size() - 1) --pos;
            if (pos < 0) break;
            std::size_t next = pick[pos] + 1;
            for (int i = pos; i < multiplicity; ++i) pick[i] = next;
        }
        per_component.push_back(std::move(multisets));
    }
    std::vector<WBasisLabel> out;
    std::vector<std::size_t> choice(per_component.size(), 0);
    while (true) {
        WBasisLabel label;
        for (std::size_t c = 0; c < per_component.size(); ++c)
            label.components.push_back(per_component[c][choice[c]]);
        out.push_back(std::move(label));
        int pos = static_cast<int>(choice.size()) - 1;
        while (pos >= 0 && choice[pos] == per_component[pos].size() - 1) choice[pos--] = 0;
        if (pos < 0) break;
        ++choice[pos];
    }
    return out;
}

inline ModuleVector random_module_vector(std::mt19937_64& rng,
                                         const std::vector<WBasisLabel>& labels) {
    std::uniform_int_distribution<std::size_t> index(0, labels.size() - 1);
    ModuleVector v;
    for (int terms = 0; terms < 3; ++terms) v.add_term(labels[index(rng)], random_rational(rng));
    return v;
}

}  // namespace hwv::testing
