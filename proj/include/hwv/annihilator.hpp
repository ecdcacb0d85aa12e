#pragma once

#include <stdexcept>
#include <vector>

#include "hwv/counting.hpp"
#include "hwv/enveloping.hpp"
#include "hwv/subspace.hpp"
#include "hwv/weight.hpp"
#include "hwv/weight_module.hpp"

namespace hwv {

/// Dimension bookkeeping for the decomposition of U_l(g) into the
/// complementary part and the character/annihilator ideals at one (weight, l).
struct DecompositionReport {
    WeightSpec weight;
    int l = 0;
    long long dim_ul = 0;
    long long dim_ulv = 0;
    long long dim_ann = 0;
    long long dim_char = 0;
    long long dim_ul_complementary = 0;
    bool complementary_injective = false;
    bool sums_check = false;
    bool ann_equals_char = false;
};

/// Rank of the evaluation map sending each PBW monomial of degree <= l
/// (optionally only those supported on the complementary positions 1..D)
/// to its image on the highest weight vector.
inline int evaluation_rank(int l, bool restrict_to_complementary, const PbwAlgebra& algebra,
                           const ModuleVector& v) {
    if (l < 0) throw std::invalid_argument("evaluation_rank: need l >= 0");
    const LieBasis& basis = algebra.basis();
    std::optional<std::pair<int, int>> range;
    if (restrict_to_complementary) range = {0, basis.complementary_count};
    Subspace<WBasisLabel> image;
    for (const PbwMonomial& p : enumerate_monomials(algebra.generator_count(), l, range))
        image.insert(act_monomial(basis, p, v));
    return image.dimension();
}

inline int evaluation_rank(const WeightSpec& w, int l, bool restrict_to_complementary) {
    PbwAlgebra algebra(lie_basis(flag_from_weight(w)));
    return evaluation_rank(l, restrict_to_complementary, algebra, highest_weight_vector(w));
}

/// dim ann_l(v) = dim U_l(g) - rank of the evaluation map.
inline long long ann_dimension(int l, const PbwAlgebra& algebra, const ModuleVector& v) {
    long long total = binomial(algebra.generator_count() + l, l);
    return total - evaluation_rank(l, false, algebra, v);
}

inline long long ann_dimension(const WeightSpec& w, int l) {
    PbwAlgebra algebra(lie_basis(flag_from_weight(w)));
    return ann_dimension(l, algebra, highest_weight_vector(w));
}

/// Echelon span of the character ideal generators inside U_l(g) coordinates.
inline Subspace<PbwMonomial> char_span(const WeightSpec& w, int l, const PbwAlgebra& algebra) {
    return span(char_generators(w, l, algebra));
}

inline long long char_dimension(const WeightSpec& w, int l, const PbwAlgebra& algebra) {
    return char_span(w, l, algebra).dimension();
}

inline long long char_dimension(const WeightSpec& w, int l) {
    PbwAlgebra algebra(lie_basis(flag_from_weight(w)));
    return char_dimension(w, l, algebra);
}

/// Span of the unit vectors at the complementary-supported monomials of
/// degree <= l: the coordinate image of U_l(n(E.)) in U_l(g).
inline Subspace<PbwMonomial> complementary_monomial_span(const PbwAlgebra& algebra, int l) {
    Subspace<PbwMonomial> s;
    for (const PbwMonomial& p : enumerate_monomials(
             algebra.generator_count(), l, {{0, algebra.basis().complementary_count}}))
        s.insert(UElement::unit(p));
    return s;
}

/// dim of the intersection of U_l(n(E.)) with the character ideal span inside
/// U_l(g) coordinates; the two are complementary, so this comes out 0.
inline int complementary_char_intersection(const WeightSpec& w, int l, const PbwAlgebra& algebra) {
    return intersection_dimension(complementary_monomial_span(algebra, l), char_span(w, l, algebra));
}

inline int complementary_char_intersection(const WeightSpec& w, int l) {
    PbwAlgebra algebra(lie_basis(flag_from_weight(w)));
    return complementary_char_intersection(w, l, algebra);
}

/// Assembles the full dimension report at one filtration level.
inline DecompositionReport verify_decomposition(const WeightSpec& w, int l,
                                                const PbwAlgebra& algebra, const ModuleVector& v) {
    if (l < 1) throw std::invalid_argument("verify_decomposition: need l >= 1");
    const int m = algebra.generator_count();
    const int d = algebra.basis().complementary_count;
    DecompositionReport report{w, l};
    report.dim_ul = binomial(m + l, l);
    report.dim_ulv = evaluation_rank(l, false, algebra, v);
    report.dim_ann = report.dim_ul - report.dim_ulv;
    report.dim_char = char_dimension(w, l, algebra);
    report.dim_ul_complementary = binomial(d + l, d);
    report.complementary_injective =
        evaluation_rank(l, true, algebra, v) == report.dim_ul_complementary;
    report.sums_check = report.dim_ul_complementary + report.dim_char == report.dim_ul;
    report.ann_equals_char = report.dim_ann == report.dim_char;
    return report;
}

inline DecompositionReport verify_decomposition(const WeightSpec& w, int l) {
    PbwAlgebra algebra(lie_basis(flag_from_weight(w)));
    return verify_decomposition(w, l, algebra, highest_weight_vector(w));
}

/// Images of the complementary-supported monomials of degree <= l on v, in
/// graded lex order. For l <= m(lambda) these are linearly independent and
/// form the semi-canonical basis of U_l(g)v; beyond that range the family is
/// still returned and its achieved rank can be read off with span().
inline std::vector<ModuleVector> semicanonical_basis(int l, const PbwAlgebra& algebra,
                                                     const ModuleVector& v) {
    if (l < 1) throw std::invalid_argument("semicanonical_basis: need l >= 1");
    const LieBasis& basis = algebra.basis();
    std::vector<ModuleVector> out;
    for (const PbwMonomial& p : enumerate_monomials(algebra.generator_count(), l,
                                                    {{0, basis.complementary_count}}))
        out.push_back(act_monomial(basis, p, v));
    return out;
}

inline std::vector<ModuleVector> semicanonical_basis(const WeightSpec& w, int l) {
    PbwAlgebra algebra(lie_basis(flag_from_weight(w)));
    return semicanonical_basis(l, algebra, highest_weight_vector(w));
}

/// Per-simple-root results of the lowering-generator checks.
struct DixmierReport {
    std::vector<int> exponents;  // m_beta
    std::vector<bool> kills;     // X_{-beta}^{m_beta} v == 0
    std::vector<bool> sharp;     // X_{-beta}^{m_beta - 1} v != 0
    bool raising_kills = false;  // every strictly upper unit kills v
    bool cartan_scales = false;  // every Cartan element scales v by the weight

    bool ok() const {
        if (!raising_kills || !cartan_scales) return false;
        for (bool b : kills)
            if (!b) return false;
        for (bool b : sharp)
            if (!b) return false;
        return true;
    }
};

inline DixmierReport dixmier_report(const WeightSpec& w) {
    ModuleVector v = highest_weight_vector(w);
    DixmierReport report;
    report.exponents = m_beta(w);

    report.raising_kills = true;
    for (int i = 1; i <= w.n && report.raising_kills; ++i)
        for (int j = i + 1; j <= w.n; ++j)
            if (!act(Matrix::unit(w.n, i, j), v).is_zero()) {
                report.raising_kills = false;
                break;
            }
    report.cartan_scales = true;
    for (int i = 1; i <= w.n - 1; ++i) {
        Matrix h = Matrix::cartan(w.n, i);
        if (act(h, v) != weight_eval(w, h) * v) {
            report.cartan_scales = false;
            break;
        }
    }

    for (int i = 1; i <= w.n - 1; ++i) {
        Matrix lowering = Matrix::unit(w.n, i + 1, i);
        int exponent = report.exponents[i - 1];
        ModuleVector power = v;
        for (int step = 0; step < exponent - 1; ++step) power = act(lowering, power);
        report.sharp.push_back(!power.is_zero());
        report.kills.push_back(act(lowering, power).is_zero());
    }
    return report;
}

/// True when the highest weight conditions hold, every lowering generator to
/// the power m_beta kills v, and the power m_beta - 1 does not.
inline bool verify_dixmier_generators(const WeightSpec& w) { return dixmier_report(w).ok(); }

/// True when every character ideal generator annihilates v.
inline bool char_in_ann(const WeightSpec& w, int l, const PbwAlgebra& algebra,
                        const ModuleVector& v) {
    for (const UElement& generator : char_generators(w, l, algebra))
        if (!act_element(algebra.basis(), generator, v).is_zero()) return false;
    return true;
}

inline bool char_in_ann(const WeightSpec& w, int l) {
    PbwAlgebra algebra(lie_basis(flag_from_weight(w)));
    return char_in_ann(w, l, algebra, highest_weight_vector(w));
}

}  // namespace hwv
