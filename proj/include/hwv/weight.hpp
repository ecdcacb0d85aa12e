#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace hwv {

/// A dominant integral weight for sl(n): lambda = sum of l_i * omega_{n_i}
/// with 1 <= n_1 < ... < n_k <= n-1 and every l_i >= 1.
struct WeightSpec {
    int n = 0;
    std::vector<std::pair<int, int>> parts;  // (n_i, l_i), n_i strictly increasing

    WeightSpec(int n_, std::vector<std::pair<int, int>> parts_)
        : n(n_), parts(std::move(parts_)) {
        if (n < 2) throw std::invalid_argument("WeightSpec: need n >= 2");
        if (parts.empty()) throw std::invalid_argument("WeightSpec: need at least one part");
        int previous = 0;
        for (const auto& [index, multiplicity] : parts) {
            if (index <= previous || index > n - 1)
                throw std::invalid_argument("WeightSpec: indices must be strictly increasing in [1, n-1]");
            if (multiplicity < 1)
                throw std::invalid_argument("WeightSpec: multiplicities must be >= 1");
            previous = index;
        }
    }

    int k() const { return static_cast<int>(parts.size()); }

    /// m(lambda) = min_i l_i.
    int m_lambda() const {
        int m = parts.front().second;
        for (const auto& [index, multiplicity] : parts) m = std::min(m, multiplicity);
        return m;
    }
};

/// The flag of coordinate subspaces determined by a weight: bounds n_1 < ... < n_k
/// and block sizes d_1 = n_1, d_i = n_i - n_{i-1}, d_{k+1} = n - n_k.
struct FlagSpec {
    int n = 0;
    std::vector<int> bounds;
    std::vector<int> blocks;

    /// 1-based index of the block containing row/column i.
    int block_of(int i) const {
        int boundary = 0;
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            boundary += blocks[b];
            if (i <= boundary) return static_cast<int>(b) + 1;
        }
        throw std::out_of_range("block_of: index outside 1..n");
    }
};

inline FlagSpec flag_from_weight(const WeightSpec& w) {
    FlagSpec flag;
    flag.n = w.n;
    for (const auto& [index, multiplicity] : w.parts) flag.bounds.push_back(index);
    int previous = 0;
    for (int bound : flag.bounds) {
        flag.blocks.push_back(bound - previous);
        previous = bound;
    }
    flag.blocks.push_back(w.n - previous);
    return flag;
}

/// Parses the "n_i:l_i,n_j:l_j,..." weight format, e.g. "1:1,2:1".
inline WeightSpec parse_weight(int n, const std::string& text) {
    std::vector<std::pair<int, int>> parts;
    std::size_t pos = 0;
    auto read_int = [&](char terminator) {
        std::size_t start = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
        if (pos == start) throw std::invalid_argument("weight: expected digits in '" + text + "'");
        int value = std::stoi(text.substr(start, pos - start));
        if (terminator != '\0') {
            if (pos >= text.size() || text[pos] != terminator)
                throw std::invalid_argument("weight: expected '" + std::string(1, terminator) +
                                            "' in '" + text + "'");
            ++pos;
        }
        return value;
    };
    while (true) {
        int index = read_int(':');
        int multiplicity = read_int('\0');
        parts.emplace_back(index, multiplicity);
        if (pos == text.size()) break;
        if (text[pos] != ',') throw std::invalid_argument("weight: expected ',' in '" + text + "'");
        ++pos;
    }
    return WeightSpec(n, std::move(parts));
}

inline std::string weight_to_string(const WeightSpec& w) {
    std::string out;
    for (const auto& [index, multiplicity] : w.parts) {
        if (!out.empty()) out += ',';
        out += std::to_string(index) + ':' + std::to_string(multiplicity);
    }
    return out;
}

}  // namespace hwv
