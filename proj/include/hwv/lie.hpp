#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hwv/rational.hpp"
#include "hwv/sparse_vector.hpp"
#include "hwv/weight.hpp"

namespace hwv {

/// Dense square matrix over the rationals. Row/column indices are 1-based
/// throughout the library, matching the e_1..e_n basis labels used in output.
class Matrix {
public:
    explicit Matrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, Rational(0)) {
        if (n < 1) throw std::invalid_argument("Matrix: need n >= 1");
    }

    static Matrix identity(int n) {
        Matrix m(n);
        for (int i = 1; i <= n; ++i) m.at(i, i) = 1;
        return m;
    }

    /// Matrix unit E_{rc}: single 1 in row r, column c.
    static Matrix unit(int n, int r, int c) {
        Matrix m(n);
        m.at(r, c) = 1;
        return m;
    }

    /// H_i = E_{ii} - E_{i+1,i+1}.
    static Matrix cartan(int n, int i) {
        Matrix m(n);
        m.at(i, i) = 1;
        m.at(i + 1, i + 1) = -1;
        return m;
    }

    int size() const { return n_; }

    Rational& at(int r, int c) { return a_[index(r, c)]; }
    const Rational& at(int r, int c) const { return a_[index(r, c)]; }

    Rational trace() const {
        Rational t(0);
        for (int i = 1; i <= n_; ++i) t += at(i, i);
        return t;
    }

    bool is_zero_matrix() const {
        for (const auto& value : a_)
            if (!is_zero(value)) return false;
        return true;
    }

    bool is_diagonal() const {
        for (int r = 1; r <= n_; ++r)
            for (int c = 1; c <= n_; ++c)
                if (r != c && !is_zero(at(r, c))) return false;
        return true;
    }

    Matrix& operator+=(const Matrix& other) {
        check_same_size(other);
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += other.a_[i];
        return *this;
    }
    Matrix& operator-=(const Matrix& other) {
        check_same_size(other);
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= other.a_[i];
        return *this;
    }
    Matrix& operator*=(const Rational& c) {
        for (auto& value : a_) value *= c;
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Rational& c, Matrix m) { return m *= c; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        a.check_same_size(b);
        Matrix out(a.n_);
        for (int r = 1; r <= a.n_; ++r)
            for (int k = 1; k <= a.n_; ++k) {
                const Rational& left = a.at(r, k);
                if (is_zero(left)) continue;
                for (int c = 1; c <= a.n_; ++c) {
                    const Rational& right = b.at(k, c);
                    if (!is_zero(right)) out.at(r, c) += left * right;
                }
            }
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.n_ == b.n_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    /// Exact inverse by Gauss-Jordan elimination; throws on singular input.
    Matrix inverse() const {
        Matrix work = *this;
        Matrix out = identity(n_);
        for (int col = 1; col <= n_; ++col) {
            int pivot = 0;
            for (int r = col; r <= n_; ++r)
                if (!is_zero(work.at(r, col))) {
                    pivot = r;
                    break;
                }
            if (pivot == 0) throw std::domain_error("Matrix::inverse: singular matrix");
            for (int c = 1; c <= n_; ++c) {
                std::swap(work.at(pivot, c), work.at(col, c));
                std::swap(out.at(pivot, c), out.at(col, c));
            }
            Rational inv = Rational(1) / work.at(col, col);
            for (int c = 1; c <= n_; ++c) {
                work.at(col, c) *= inv;
                out.at(col, c) *= inv;
            }
            for (int r = 1; r <= n_; ++r) {
                if (r == col) continue;
                Rational factor = work.at(r, col);
                if (is_zero(factor)) continue;
                for (int c = 1; c <= n_; ++c) {
                    work.at(r, c) -= factor * work.at(col, c);
                    out.at(r, c) -= factor * out.at(col, c);
                }
            }
        }
        return out;
    }

private:
    std::size_t index(int r, int c) const {
        if (r < 1 || r > n_ || c < 1 || c > n_) throw std::out_of_range("Matrix index");
        return static_cast<std::size_t>(r - 1) * n_ + (c - 1);
    }
    void check_same_size(const Matrix& other) const {
        if (n_ != other.n_) throw std::invalid_argument("Matrix: dimension mismatch");
    }

    int n_;
    std::vector<Rational> a_;
};

using LieElement = Matrix;

/// Matrix commutator xy - yx.
inline LieElement bracket(const LieElement& x, const LieElement& y) { return x * y - y * x; }

/// Coordinates of a matrix in the n^2 entry labels (row, column).
inline SparseVector<std::pair<int, int>> matrix_coordinates(const Matrix& m) {
    SparseVector<std::pair<int, int>> v;
    for (int r = 1; r <= m.size(); ++r)
        for (int c = 1; c <= m.size(); ++c)
            if (!is_zero(m.at(r, c))) v.add_term({r, c}, m.at(r, c));
    return v;
}

enum class MemberRole { complementary, cartan, upper };

/// Ordered basis of sl(n) adapted to a flag: the D strictly block-lower matrix
/// units spanning the complementary algebra come first, then the Cartan
/// elements H_1..H_{n-1}, then the remaining block-upper matrix units spanning
/// the stabilizer algebra together with the Cartan part.
///
/// A non-identity frame conjugates every member by the same flag-compatible
/// base change, which leaves all structure constants unchanged.
struct LieBasis {
    FlagSpec flag;
    std::vector<LieElement> members;
    std::vector<MemberRole> roles;
    /// Standard-frame identity of each member: (row, col) of the matrix unit,
    /// or (i, 0) for the Cartan element H_i.
    std::vector<std::pair<int, int>> positions;
    std::vector<std::string> names;
    int complementary_count = 0;  // D
    Matrix frame = Matrix::identity(1);
    Matrix frame_inverse = Matrix::identity(1);

    int size() const { return static_cast<int>(members.size()); }

    bool is_standard_frame() const { return frame == Matrix::identity(flag.n); }
};

namespace detail {

inline void append_complementary(LieBasis& basis) {
    const FlagSpec& flag = basis.flag;
    int previous_bound = 0;
    for (std::size_t l = 0; l < flag.bounds.size(); ++l) {
        int bound = flag.bounds[l];
        for (int i = previous_bound + 1; i <= bound; ++i)
            for (int j = bound + 1; j <= flag.n; ++j) {
                basis.members.push_back(Matrix::unit(flag.n, j, i));
                basis.roles.push_back(MemberRole::complementary);
                basis.positions.emplace_back(j, i);
                basis.names.push_back("E(" + std::to_string(j) + "," + std::to_string(i) + ")");
            }
        previous_bound = bound;
    }
    basis.complementary_count = static_cast<int>(basis.members.size());
}

inline void append_parabolic(LieBasis& basis) {
    const FlagSpec& flag = basis.flag;
    for (int i = 1; i <= flag.n - 1; ++i) {
        basis.members.push_back(Matrix::cartan(flag.n, i));
        basis.roles.push_back(MemberRole::cartan);
        basis.positions.emplace_back(i, 0);
        basis.names.push_back("H(" + std::to_string(i) + ")");
    }
    for (int i = 1; i <= flag.n; ++i)
        for (int j = 1; j <= flag.n; ++j) {
            if (i == j || flag.block_of(i) > flag.block_of(j)) continue;
            basis.members.push_back(Matrix::unit(flag.n, i, j));
            basis.roles.push_back(MemberRole::upper);
            basis.positions.emplace_back(i, j);
            basis.names.push_back("E(" + std::to_string(i) + "," + std::to_string(j) + ")");
        }
}

}  // namespace detail

/// The ordered basis of the complementary algebra n(E.): matrix units E_{ji}
/// with n_{l-1} < i <= n_l < j <= n, grouped by l and ordered by (i, j).
inline LieBasis complementary_basis(const FlagSpec& flag) {
    LieBasis basis;
    basis.flag = flag;
    basis.frame = Matrix::identity(flag.n);
    basis.frame_inverse = basis.frame;
    detail::append_complementary(basis);
    return basis;
}

/// The ordered basis of the stabilizer algebra p(E.): H_1..H_{n-1} followed by
/// the off-diagonal matrix units E_{ij} with block(i) <= block(j).
inline LieBasis parabolic_basis(const FlagSpec& flag) {
    LieBasis basis;
    basis.flag = flag;
    basis.frame = Matrix::identity(flag.n);
    basis.frame_inverse = basis.frame;
    detail::append_parabolic(basis);
    return basis;
}

/// Full flag-adapted basis of sl(n): complementary members first.
inline LieBasis lie_basis(const FlagSpec& flag) {
    LieBasis basis;
    basis.flag = flag;
    basis.frame = Matrix::identity(flag.n);
    basis.frame_inverse = basis.frame;
    detail::append_complementary(basis);
    detail::append_parabolic(basis);
    return basis;
}

/// Flag-adapted basis conjugated by an invertible flag-compatible frame:
/// member_i = frame * standard_member_i * frame^{-1}. The frame must be
/// block-upper-triangular for the flag (it then preserves every E_i).
inline LieBasis lie_basis(const FlagSpec& flag, const Matrix& frame) {
    if (frame.size() != flag.n) throw std::invalid_argument("lie_basis: frame size mismatch");
    for (int r = 1; r <= flag.n; ++r)
        for (int c = 1; c <= flag.n; ++c)
            if (flag.block_of(r) > flag.block_of(c) && !is_zero(frame.at(r, c)))
                throw std::invalid_argument("lie_basis: frame is not flag-compatible");
    LieBasis basis = lie_basis(flag);
    basis.frame = frame;
    basis.frame_inverse = frame.inverse();
    for (auto& member : basis.members) member = frame * member * basis.frame_inverse;
    return basis;
}

/// Coefficients of a traceless matrix in a flag-adapted basis. Off-diagonal
/// entries map to the matching matrix units; the diagonal decomposes over the
/// H_i by partial sums.
inline std::vector<Rational> expand_in_basis(const LieBasis& basis, const Matrix& x) {
    const int n = basis.flag.n;
    if (x.size() != n) throw std::invalid_argument("expand_in_basis: dimension mismatch");
    Matrix y = basis.is_standard_frame() ? x : basis.frame_inverse * x * basis.frame;
    if (!is_zero(y.trace())) throw std::domain_error("expand_in_basis: matrix has nonzero trace");

    std::vector<Rational> coefficients(basis.size(), Rational(0));
    std::map<std::pair<int, int>, int> unit_position;
    int cartan_start = -1;
    for (int idx = 0; idx < basis.size(); ++idx) {
        if (basis.roles[idx] == MemberRole::cartan) {
            if (cartan_start < 0) cartan_start = idx;
        } else {
            unit_position[basis.positions[idx]] = idx;
        }
    }
    for (int r = 1; r <= n; ++r)
        for (int c = 1; c <= n; ++c) {
            if (r == c || is_zero(y.at(r, c))) continue;
            coefficients[unit_position.at({r, c})] = y.at(r, c);
        }
    Rational partial(0);
    for (int i = 1; i <= n - 1; ++i) {
        partial += y.at(i, i);
        coefficients[cartan_start + i - 1] = partial;
    }
    return coefficients;
}

/// The character by which the stabilizer algebra scales the highest weight
/// line: sum_i l_i (tr A_1 + ... + tr A_i) over the diagonal blocks A_j of x.
/// x must lie in p(E.) for the flag of w.
inline Rational rho_v(const WeightSpec& w, const LieElement& x) {
    FlagSpec flag = flag_from_weight(w);
    if (x.size() != w.n) throw std::invalid_argument("rho_v: dimension mismatch");
    for (int r = 1; r <= w.n; ++r)
        for (int c = 1; c <= w.n; ++c)
            if (flag.block_of(r) > flag.block_of(c) && !is_zero(x.at(r, c)))
                throw std::domain_error("rho_v: element is not block-upper for the flag");
    if (!is_zero(x.trace())) throw std::domain_error("rho_v: element has nonzero trace");

    std::vector<Rational> block_trace(flag.blocks.size(), Rational(0));
    for (int i = 1; i <= w.n; ++i) block_trace[flag.block_of(i) - 1] += x.at(i, i);
    Rational value(0), cumulative(0);
    for (int i = 0; i < w.k(); ++i) {
        cumulative += block_trace[i];
        value += Rational(w.parts[i].second) * cumulative;
    }
    return value;
}

/// lambda(x) for diagonal traceless x: sum_i l_i (x_11 + ... + x_{n_i n_i}).
inline Rational weight_eval(const WeightSpec& w, const LieElement& x) {
    if (x.size() != w.n) throw std::invalid_argument("weight_eval: dimension mismatch");
    if (!x.is_diagonal()) throw std::domain_error("weight_eval: element is not diagonal");
    Rational value(0);
    for (const auto& [index, multiplicity] : w.parts) {
        Rational partial(0);
        for (int i = 1; i <= index; ++i) partial += x.at(i, i);
        value += Rational(multiplicity) * partial;
    }
    return value;
}

/// Exponents m_{beta_i} = lambda(H_i) + 1 for the simple lowering generators
/// X_{-beta_i} = E_{i+1,i}, i = 1..n-1.
inline std::vector<int> m_beta(const WeightSpec& w) {
    std::vector<int> exponents;
    for (int i = 1; i <= w.n - 1; ++i) {
        Rational value = weight_eval(w, Matrix::cartan(w.n, i)) + 1;
        exponents.push_back(static_cast<int>(value.get_num().get_si()));
    }
    return exponents;
}

}  // namespace hwv
