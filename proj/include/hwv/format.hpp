#pragma once

#include <string>

#include "hwv/enveloping.hpp"
#include "hwv/lie.hpp"
#include "hwv/rational.hpp"
#include "hwv/weight_module.hpp"

namespace hwv {

/// "e(1,3)" for the wedge basis element e_1 ^ e_3.
inline std::string to_string(const WBasisLabel::IndexSet& subset) {
    std::string out = "e(";
    for (std::size_t i = 0; i < subset.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(subset[i]);
    }
    return out + ")";
}

/// Symmetric-power factors joined with '*' and collected into powers, tensor
/// components joined with "(x)": e.g. "e(1)^2" or "e(1) (x) e(1,2)".
inline std::string to_string(const WBasisLabel& label) {
    std::string out;
    for (std::size_t component = 0; component < label.components.size(); ++component) {
        if (component > 0) out += " (x) ";
        const auto& multiset = label.components[component];
        std::size_t i = 0;
        bool first = true;
        while (i < multiset.size()) {
            std::size_t run = i;
            while (run < multiset.size() && multiset[run] == multiset[i]) ++run;
            if (!first) out += '*';
            out += to_string(multiset[i]);
            if (run - i > 1) out += '^' + std::to_string(run - i);
            first = false;
            i = run;
        }
    }
    return out;
}

/// "3/2*e(1)*e(2) + e(2)^2" style rendering; "0" for the zero vector.
inline std::string to_string(const ModuleVector& v) {
    if (v.is_zero()) return "0";
    std::string out;
    for (const auto& [label, coefficient] : v.entries()) {
        if (!out.empty()) out += " + ";
        if (coefficient != Rational(1)) out += to_string(coefficient) + '*';
        out += to_string(label);
    }
    return out;
}

/// "E(2,1)^2*H(1)" style rendering against the basis member names; "1" for
/// the empty monomial.
inline std::string to_string(const LieBasis& basis, const PbwMonomial& monomial) {
    if (monomial.is_one()) return "1";
    std::string out;
    for (int i = 0; i < monomial.size(); ++i) {
        int e = monomial.exponent(i);
        if (e == 0) continue;
        if (!out.empty()) out += '*';
        out += basis.names[i];
        if (e > 1) out += '^' + std::to_string(e);
    }
    return out;
}

inline std::string to_string(const LieBasis& basis, const UElement& u) {
    if (u.is_zero()) return "0";
    std::string out;
    for (const auto& [monomial, coefficient] : u.entries()) {
        if (!out.empty()) out += " + ";
        if (coefficient != Rational(1) || monomial.is_one()) {
            out += to_string(coefficient);
            if (!monomial.is_one()) out += '*';
        }
        if (!monomial.is_one()) out += to_string(basis, monomial);
    }
    return out;
}

}  // namespace hwv
