#pragma once

#include <algorithm>
#include <compare>
#include <stdexcept>
#include <vector>

#include "hwv/counting.hpp"
#include "hwv/enveloping.hpp"
#include "hwv/lie.hpp"
#include "hwv/subspace.hpp"
#include "hwv/weight.hpp"

namespace hwv {

/// Basis label of W(l,n) = Sym^{l_1}(Lambda^{n_1}E) (x) ... (x) Sym^{l_k}(Lambda^{n_k}E).
/// Component i is a size-l_i multiset (kept sorted) of strictly increasing
/// n_i-element subsets of {1..n}, each subset standing for a wedge of e's.
struct WBasisLabel {
    using IndexSet = std::vector<int>;
    using WedgeMultiset = std::vector<IndexSet>;

    std::vector<WedgeMultiset> components;

    friend bool operator==(const WBasisLabel&, const WBasisLabel&) = default;
    friend auto operator<=>(const WBasisLabel&, const WBasisLabel&) = default;
};

/// Element of W(l,n): rational combination of basis labels.
using ModuleVector = SparseVector<WBasisLabel>;

/// The single-term vector v = w_1^{l_1} (x) ... (x) w_k^{l_k} with
/// w_i = e_1 ^ ... ^ e_{n_i}.
inline ModuleVector highest_weight_vector(const WeightSpec& w) {
    WBasisLabel label;
    for (const auto& [bound, multiplicity] : w.parts) {
        WBasisLabel::IndexSet top(bound);
        for (int i = 0; i < bound; ++i) top[i] = i + 1;
        label.components.emplace_back(multiplicity, top);
    }
    return ModuleVector::unit(std::move(label));
}

namespace detail {

/// x applied to a wedge basis element by the Leibniz rule; each substitution
/// is re-sorted with the permutation sign, repeated indices drop out.
inline std::vector<std::pair<WBasisLabel::IndexSet, Rational>> act_on_wedge(
    const LieElement& x, const WBasisLabel::IndexSet& subset) {
    std::vector<std::pair<WBasisLabel::IndexSet, Rational>> out;
    const int n = x.size();
    for (std::size_t j = 0; j < subset.size(); ++j) {
        for (int r = 1; r <= n; ++r) {
            const Rational& c = x.at(r, subset[j]);
            if (is_zero(c)) continue;
            bool repeated = false;
            for (std::size_t t = 0; t < subset.size(); ++t)
                if (t != j && subset[t] == r) {
                    repeated = true;
                    break;
                }
            if (repeated) continue;
            WBasisLabel::IndexSet replaced;
            replaced.reserve(subset.size() - 1);
            for (std::size_t t = 0; t < subset.size(); ++t)
                if (t != j) replaced.push_back(subset[t]);
            auto pos = std::lower_bound(replaced.begin(), replaced.end(), r);
            std::size_t insert_at = static_cast<std::size_t>(pos - replaced.begin());
            int swaps = static_cast<int>(j) - static_cast<int>(insert_at);
            replaced.insert(pos, r);
            Rational signed_c = (swaps % 2 == 0) ? c : -c;
            out.emplace_back(std::move(replaced), std::move(signed_c));
        }
    }
    return out;
}

}  // namespace detail

/// Derivation action of an n x n matrix on W(l,n): Leibniz over tensor
/// components, over the multiset members of each symmetric power, and over
/// wedge factors.
inline ModuleVector act(const LieElement& x, const ModuleVector& m) {
    ModuleVector out;
    for (const auto& [label, coefficient] : m.entries()) {
        for (std::size_t component = 0; component < label.components.size(); ++component) {
            const auto& multiset = label.components[component];
            for (const auto& subset : multiset)
                for (int index : subset)
                    if (index < 1 || index > x.size())
                        throw std::invalid_argument("act: dimension mismatch");
            for (std::size_t position = 0; position < multiset.size(); ++position) {
                for (auto& [replacement, c] :
                     detail::act_on_wedge(x, multiset[position])) {
                    WBasisLabel next = label;
                    next.components[component][position] = std::move(replacement);
                    std::sort(next.components[component].begin(),
                              next.components[component].end());
                    out.add_term(next, coefficient * c);
                }
            }
        }
    }
    return out;
}

/// Applies the ordered product x_1^{e_1} ... x_M^{e_M} to m, rightmost
/// factor first.
inline ModuleVector act_monomial(const LieBasis& basis, const PbwMonomial& p,
                                 const ModuleVector& m) {
    if (p.size() != basis.size()) throw std::invalid_argument("act_monomial: basis size mismatch");
    ModuleVector out = m;
    for (int index = p.size() - 1; index >= 0; --index)
        for (int repeat = 0; repeat < p.exponent(index); ++repeat)
            out = act(basis.members[index], out);
    return out;
}

/// Applies a normal-form enveloping algebra element to m.
inline ModuleVector act_element(const LieBasis& basis, const UElement& u, const ModuleVector& m) {
    ModuleVector out;
    for (const auto& [monomial, coefficient] : u.entries())
        out.add_scaled(act_monomial(basis, monomial, m), coefficient);
    return out;
}

/// dim W(l,n): product over components of the multiset counts.
inline long long w_dimension(const WeightSpec& w) {
    long long dim = 1;
    for (const auto& [bound, multiplicity] : w.parts) {
        long long wedge_dim = binomial(w.n, bound);
        dim *= binomial(wedge_dim + multiplicity - 1, multiplicity);
    }
    return dim;
}

namespace detail {

inline Subspace<WBasisLabel> grow_layer(const LieBasis& basis, const Subspace<WBasisLabel>& layer) {
    Subspace<WBasisLabel> next = layer;
    for (const auto& row : layer.rows())
        for (const auto& member : basis.members) next.insert(act(member, row));
    return next;
}

}  // namespace detail

/// The nested subspaces U_l(g)v for l = 0..l_max, built layer by layer: each
/// layer adjoins the images of the previous layer under every basis member.
inline std::vector<Subspace<WBasisLabel>> canonical_filtration(const LieBasis& basis,
                                                               const ModuleVector& v, int l_max) {
    if (l_max < 0) throw std::invalid_argument("canonical_filtration: need l_max >= 0");
    std::vector<Subspace<WBasisLabel>> layers;
    Subspace<WBasisLabel> current;
    current.insert(v);
    layers.push_back(current);
    for (int l = 1; l <= l_max; ++l) {
        current = detail::grow_layer(basis, current);
        layers.push_back(current);
    }
    return layers;
}

inline std::vector<Subspace<WBasisLabel>> canonical_filtration(const WeightSpec& w, int l_max) {
    return canonical_filtration(lie_basis(flag_from_weight(w)), highest_weight_vector(w), l_max);
}

/// V_lambda = U(g)v, computed as the stabilization of the canonical
/// filtration. Throws if the filtration fails to stabilize within dim W(l,n)
/// steps, which would indicate a bug rather than a mathematical possibility.
inline Subspace<WBasisLabel> generate_irreducible(const WeightSpec& w) {
    LieBasis basis = lie_basis(flag_from_weight(w));
    long long safety_bound = w_dimension(w);
    Subspace<WBasisLabel> current;
    current.insert(highest_weight_vector(w));
    for (long long l = 1; l <= safety_bound; ++l) {
        Subspace<WBasisLabel> next = detail::grow_layer(basis, current);
        if (next.dimension() == current.dimension()) return current;
        current = std::move(next);
    }
    throw std::runtime_error("generate_irreducible: filtration did not stabilize");
}

/// Independent dimension oracle: the classical Weyl dimension formula for
/// sl(n), evaluated exactly. With a_i = sum of the l_j with n_j >= i,
/// dim = prod_{1 <= i < j <= n} (a_i - a_j + j - i) / (j - i).
inline long long weyl_dimension(const WeightSpec& w) {
    std::vector<long> a(w.n + 1, 0);
    for (int i = 1; i <= w.n; ++i)
        for (const auto& [bound, multiplicity] : w.parts)
            if (bound >= i) a[i] += multiplicity;
    Rational dim(1);
    for (int i = 1; i < w.n; ++i)
        for (int j = i + 1; j <= w.n; ++j)
            dim *= rational(a[i] - a[j] + j - i, j - i);
    dim.canonicalize();
    if (dim.get_den() != 1) throw std::logic_error("weyl_dimension: non-integral product");
    if (!dim.get_num().fits_slong_p()) throw std::overflow_error("weyl_dimension: overflow");
    return dim.get_num().get_si();
}

/// Checks that v is a genuine highest weight vector: every strictly upper
/// matrix unit kills it, every stabilizer basis member scales it by the
/// block-trace character, and every Cartan element scales it by the weight.
inline bool verify_highest_weight(const WeightSpec& w) {
    FlagSpec flag = flag_from_weight(w);
    LieBasis basis = lie_basis(flag);
    ModuleVector v = highest_weight_vector(w);
    for (int i = 1; i <= w.n; ++i)
        for (int j = i + 1; j <= w.n; ++j)
            if (!act(Matrix::unit(w.n, i, j), v).is_zero()) return false;
    for (int idx = basis.complementary_count; idx < basis.size(); ++idx) {
        ModuleVector expected = rho_v(w, basis.members[idx]) * v;
        if (act(basis.members[idx], v) != expected) return false;
    }
    for (int i = 1; i <= w.n - 1; ++i) {
        Matrix h = Matrix::cartan(w.n, i);
        if (act(h, v) != weight_eval(w, h) * v) return false;
    }
    return true;
}

}  // namespace hwv
