#pragma once

#include <algorithm>
#include <vector>

#include "hwv/sparse_vector.hpp"

namespace hwv {

/// A linear subspace held in reduced row echelon form over the label order:
/// row pivots (least labels) strictly increase, every pivot coefficient is 1,
/// and each pivot label occurs in no other row. The form is canonical, so two
/// Subspace values compare equal exactly when they describe the same space.
template <typename Label>
class Subspace {
public:
    using Vector = SparseVector<Label>;

    Subspace() = default;

    int dimension() const { return static_cast<int>(rows_.size()); }
    const std::vector<Vector>& rows() const { return rows_; }

    /// Residual of v after eliminating every pivot label.
    Vector reduce(Vector v) const {
        for (const auto& row : rows_) {
            Rational c = v.coeff(row.leading().first);
            if (!is_zero(c)) v.add_scaled(row, -c);
        }
        return v;
    }

    bool contains(const Vector& v) const { return reduce(v).is_zero(); }

    /// Adjoins v; returns true when the dimension grew.
    bool insert(Vector v) {
        v = reduce(std::move(v));
        if (v.is_zero()) return false;
        v *= Rational(1) / v.leading().second;
        const Label& pivot = v.leading().first;
        for (auto& row : rows_) {
            Rational c = row.coeff(pivot);
            if (!is_zero(c)) row.add_scaled(v, -c);
        }
        auto pos = std::lower_bound(rows_.begin(), rows_.end(), pivot,
                                    [](const Vector& row, const Label& label) {
                                        return row.leading().first < label;
                                    });
        rows_.insert(pos, std::move(v));
        return true;
    }

    friend bool operator==(const Subspace& a, const Subspace& b) { return a.rows_ == b.rows_; }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
    std::vector<Vector> rows_;
};

/// Reduced echelon basis of the span of a family of vectors.
template <typename Label>
Subspace<Label> span(const std::vector<SparseVector<Label>>& vectors) {
    Subspace<Label> s;
    for (const auto& v : vectors) s.insert(v);
    return s;
}

template <typename Label>
Subspace<Label> sum(const Subspace<Label>& a, const Subspace<Label>& b) {
    Subspace<Label> s = a;
    for (const auto& row : b.rows()) s.insert(row);
    return s;
}

/// dim(a ∩ b) via the Grassmann identity dim a + dim b - dim(a + b).
template <typename Label>
int intersection_dimension(const Subspace<Label>& a, const Subspace<Label>& b) {
    return a.dimension() + b.dimension() - sum(a, b).dimension();
}

}  // namespace hwv
