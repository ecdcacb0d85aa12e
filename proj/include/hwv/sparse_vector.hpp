#pragma once

#include <map>
#include <stdexcept>
#include <utility>

#include "hwv/rational.hpp"

namespace hwv {

/// A finite rational linear combination of basis labels. Zero coefficients are
/// never stored, so two vectors are equal exactly when their entry maps are.
/// The label type supplies the total order (operator<) used everywhere
/// downstream, in particular for pivot selection in Subspace.
template <typename Label>
class SparseVector {
public:
    using Map = std::map<Label, Rational>;

    SparseVector() = default;

    static SparseVector unit(Label label) {
        SparseVector v;
        v.entries_.emplace(std::move(label), 1);
        return v;
    }

    bool is_zero() const { return entries_.empty(); }
    std::size_t term_count() const { return entries_.size(); }
    const Map& entries() const { return entries_; }

    Rational coeff(const Label& label) const {
        auto it = entries_.find(label);
        return it == entries_.end() ? Rational(0) : it->second;
    }

    /// Least label with nonzero coefficient.
    const std::pair<const Label, Rational>& leading() const {
        if (entries_.empty()) throw std::logic_error("leading() on zero vector");
        return *entries_.begin();
    }

    void add_term(const Label& label, const Rational& c) {
        if (hwv::is_zero(c)) return;
        auto [it, inserted] = entries_.emplace(label, c);
        if (!inserted) {
            it->second += c;
            if (hwv::is_zero(it->second)) entries_.erase(it);
        }
    }

    /// *this += c * other
    void add_scaled(const SparseVector& other, const Rational& c) {
        if (hwv::is_zero(c)) return;
        for (const auto& [label, value] : other.entries_) add_term(label, c * value);
    }

    SparseVector& operator+=(const SparseVector& other) {
        add_scaled(other, Rational(1));
        return *this;
    }
    SparseVector& operator-=(const SparseVector& other) {
        add_scaled(other, Rational(-1));
        return *this;
    }
    SparseVector& operator*=(const Rational& c) {
        if (hwv::is_zero(c)) {
            entries_.clear();
        } else {
            for (auto& [label, value] : entries_) value *= c;
        }
        return *this;
    }

    friend SparseVector operator+(SparseVector a, const SparseVector& b) { return a += b; }
    friend SparseVector operator-(SparseVector a, const SparseVector& b) { return a -= b; }
    friend SparseVector operator*(const Rational& c, SparseVector v) { return v *= c; }

    friend bool operator==(const SparseVector& a, const SparseVector& b) {
        return a.entries_ == b.entries_;
    }
    friend bool operator!=(const SparseVector& a, const SparseVector& b) { return !(a == b); }

private:
    Map entries_;
};

}  // namespace hwv
