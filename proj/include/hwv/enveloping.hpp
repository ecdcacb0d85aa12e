#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hwv/counting.hpp"
#include "hwv/lie.hpp"
#include "hwv/sparse_vector.hpp"

namespace hwv {

/// Exponent vector over an ordered Lie basis of M generators, denoting the
/// ordered product x_1^{e_1} ... x_M^{e_M}. Graded lex order: degree first,
/// then earlier generators weigh more, so at degree one the order is
/// x_1 < x_2 < ... < x_M.
class PbwMonomial {
public:
    explicit PbwMonomial(int basis_size)
        : exponents_(static_cast<std::size_t>(basis_size), 0), degree_(0) {}

    PbwMonomial(int basis_size, const std::vector<int>& sorted_word) : PbwMonomial(basis_size) {
        for (int index : sorted_word) {
            if (index < 0 || index >= basis_size) throw std::out_of_range("PbwMonomial: bad index");
            ++exponents_[index];
            ++degree_;
        }
    }

    int size() const { return static_cast<int>(exponents_.size()); }
    int degree() const { return degree_; }
    int exponent(int i) const { return exponents_[i]; }
    const std::vector<int>& exponents() const { return exponents_; }

    bool is_one() const { return degree_ == 0; }

    PbwMonomial raised_by(int index, int by = 1) const {
        PbwMonomial out = *this;
        out.exponents_[index] += by;
        out.degree_ += by;
        return out;
    }

    /// The generator indices with multiplicity, ascending.
    std::vector<int> word() const {
        std::vector<int> out;
        out.reserve(degree_);
        for (int i = 0; i < size(); ++i)
            for (int j = 0; j < exponents_[i]; ++j) out.push_back(i);
        return out;
    }

    friend bool operator==(const PbwMonomial& a, const PbwMonomial& b) {
        return a.exponents_ == b.exponents_;
    }
    friend bool operator!=(const PbwMonomial& a, const PbwMonomial& b) { return !(a == b); }
    friend bool operator<(const PbwMonomial& a, const PbwMonomial& b) {
        if (a.degree_ != b.degree_) return a.degree_ < b.degree_;
        return b.exponents_ < a.exponents_;
    }

private:
    std::vector<int> exponents_;
    int degree_;
};

/// Element of the enveloping algebra in PBW normal form: a rational
/// combination of PbwMonomial keys.
using UElement = SparseVector<PbwMonomial>;

/// Filtration degree: max monomial degree, 0 for the zero element.
inline int degree(const UElement& u) {
    int d = 0;
    for (const auto& [monomial, coefficient] : u.entries()) d = std::max(d, monomial.degree());
    return d;
}

/// All monomials of total degree <= degree_bound supported on the index range
/// [range.first, range.second) (default: every position), in graded lex order.
inline std::vector<PbwMonomial> enumerate_monomials(int basis_size, int degree_bound,
                                                    std::optional<std::pair<int, int>> range = {}) {
    if (degree_bound < 0) throw std::invalid_argument("enumerate_monomials: negative degree");
    auto [first, last] = range.value_or(std::pair<int, int>{0, basis_size});
    std::vector<int> support;
    for (int i = first; i < last; ++i) support.push_back(i);

    std::vector<PbwMonomial> out;
    std::vector<int> exponents(basis_size, 0);
    // degree ascends; within a degree the earliest support slot carries the
    // largest exponents first, matching PbwMonomial's order
    auto recurse = [&](auto&& self, std::size_t slot, int remaining) -> void {
        if (slot + 1 == support.size()) {
            exponents[support[slot]] = remaining;
            PbwMonomial m(basis_size);
            for (int i : support)
                if (exponents[i] > 0) m = m.raised_by(i, exponents[i]);
            out.push_back(m);
            exponents[support[slot]] = 0;
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            exponents[support[slot]] = e;
            self(self, slot + 1, remaining - e);
        }
        exponents[support[slot]] = 0;
    };
    for (int d = 0; d <= degree_bound; ++d) {
        if (support.empty()) {
            if (d == 0) out.emplace_back(basis_size);
            continue;
        }
        recurse(recurse, 0, d);
    }
    return out;
}

/// The enveloping algebra of sl(n) in PBW coordinates for a fixed ordered
/// flag-adapted basis. Products are brought to normal form by straightening:
/// an adjacent out-of-order pair x_b x_a is rewritten as
/// x_a x_b + [x_b, x_a], with the bracket expanded in the basis. Each rewrite
/// either lowers the inversion count at fixed length or recurses on a
/// strictly shorter word, so straightening terminates.
class PbwAlgebra {
public:
    explicit PbwAlgebra(LieBasis basis) : basis_(std::move(basis)) {
        const int m = basis_.size();
        brackets_.resize(m);
        for (int a = 0; a < m; ++a) {
            brackets_[a].resize(m);
            for (int b = 0; b < m; ++b) {
                std::vector<Rational> coeffs =
                    expand_in_basis(basis_, bracket(basis_.members[a], basis_.members[b]));
                for (int k = 0; k < m; ++k)
                    if (!is_zero(coeffs[k])) brackets_[a][b].emplace_back(k, coeffs[k]);
            }
        }
    }

    const LieBasis& basis() const { return basis_; }
    int generator_count() const { return basis_.size(); }

    UElement one() const { return UElement::unit(PbwMonomial(generator_count())); }

    UElement monomial_element(const PbwMonomial& m) const { return UElement::unit(m); }

    /// The degree-one element representing a Lie algebra member combination.
    UElement embed(const LieElement& x) const {
        std::vector<Rational> coeffs = expand_in_basis(basis_, x);
        UElement out;
        for (int k = 0; k < generator_count(); ++k)
            if (!is_zero(coeffs[k]))
                out.add_term(PbwMonomial(generator_count()).raised_by(k), coeffs[k]);
        return out;
    }

    /// Generator x_index as a degree-one element.
    UElement generator(int index) const {
        return UElement::unit(PbwMonomial(generator_count()).raised_by(index));
    }

    /// [x_a, x_b] expanded over the basis, as (index, coefficient) pairs.
    const std::vector<std::pair<int, Rational>>& bracket_expansion(int a, int b) const {
        return brackets_[a][b];
    }

    /// Product in U(g), renormalized to PBW form.
    UElement multiply(const UElement& a, const UElement& b) const {
        Memo memo;
        UElement out;
        for (const auto& [p, cp] : a.entries())
            for (const auto& [q, cq] : b.entries()) {
                std::vector<int> word = p.word();
                std::vector<int> tail = q.word();
                word.insert(word.end(), tail.begin(), tail.end());
                out.add_scaled(straighten(word, memo), cp * cq);
            }
        return out;
    }

    /// Normal form of an arbitrary product word of generator indices.
    UElement straighten_word(const std::vector<int>& word) const {
        Memo memo;
        return straighten(word, memo);
    }

private:
    using Memo = std::map<std::vector<int>, UElement>;

    UElement straighten(const std::vector<int>& word, Memo& memo) const {
        std::size_t i = 0;
        while (i + 1 < word.size() && word[i] <= word[i + 1]) ++i;
        if (word.size() < 2 || i + 1 == word.size())
            return UElement::unit(PbwMonomial(generator_count(), word));

        if (auto it = memo.find(word); it != memo.end()) return it->second;

        std::vector<int> swapped = word;
        std::swap(swapped[i], swapped[i + 1]);
        UElement result = straighten(swapped, memo);
        for (const auto& [k, c] : brackets_[word[i]][word[i + 1]]) {
            std::vector<int> shorter;
            shorter.reserve(word.size() - 1);
            shorter.insert(shorter.end(), word.begin(), word.begin() + i);
            shorter.push_back(k);
            shorter.insert(shorter.end(), word.begin() + i + 2, word.end());
            result.add_scaled(straighten(shorter, memo), c);
        }
        memo.emplace(word, result);
        return result;
    }

    LieBasis basis_;
    std::vector<std::vector<std::vector<std::pair<int, Rational>>>> brackets_;
};

/// The standard-frame matrix of basis member idx (unit or Cartan element);
/// for conjugated frames this is the element the member conjugates.
inline LieElement standard_member(const LieBasis& basis, int idx) {
    auto [r, c] = basis.positions[idx];
    if (basis.roles[idx] == MemberRole::cartan) return Matrix::cartan(basis.flag.n, r);
    return Matrix::unit(basis.flag.n, r, c);
}

/// Character value on basis member idx (a stabilizer-algebra member).
inline Rational member_character(const WeightSpec& w, const LieBasis& basis, int idx) {
    return rho_v(w, standard_member(basis, idx));
}

/// Spanning family of the degree <= l piece of the character ideal:
/// m * (y - rho_v(y) 1) for every PBW monomial m of degree <= l-1 and every
/// stabilizer-algebra basis member y.
inline std::vector<UElement> char_generators(const WeightSpec& w, int l, const PbwAlgebra& algebra) {
    if (l < 1) throw std::invalid_argument("char_generators: need l >= 1");
    const LieBasis& basis = algebra.basis();
    const int m = algebra.generator_count();
    std::vector<PbwMonomial> monomials = enumerate_monomials(m, l - 1);
    std::vector<UElement> out;
    out.reserve(monomials.size() * (m - basis.complementary_count));
    for (int y = basis.complementary_count; y < m; ++y) {
        UElement shifted = algebra.generator(y);
        shifted.add_term(PbwMonomial(m), -member_character(w, basis, y));
        for (const PbwMonomial& mono : monomials)
            out.push_back(algebra.multiply(algebra.monomial_element(mono), shifted));
    }
    return out;
}

inline std::vector<UElement> char_generators(const WeightSpec& w, int l) {
    PbwAlgebra algebra(lie_basis(flag_from_weight(w)));
    return char_generators(w, l, algebra);
}

}  // namespace hwv
