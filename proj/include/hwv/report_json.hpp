#pragma once

#include <json.hpp>

#include "hwv/annihilator.hpp"
#include "hwv/weight.hpp"

namespace hwv {

/// JSON image of a DecompositionReport. Integers stay integers; the weight is
/// echoed in the same "n_i:l_i,..." format the command line accepts.
inline nlohmann::ordered_json report_to_json(const DecompositionReport& report) {
    nlohmann::ordered_json j;
    j["n"] = report.weight.n;
    j["weight"] = weight_to_string(report.weight);
    j["l"] = report.l;
    j["m_lambda"] = report.weight.m_lambda();
    j["dim_ul"] = report.dim_ul;
    j["dim_ulv"] = report.dim_ulv;
    j["dim_ann"] = report.dim_ann;
    j["dim_char"] = report.dim_char;
    j["dim_ul_complementary"] = report.dim_ul_complementary;
    j["complementary_injective"] = report.complementary_injective;
    j["sums_check"] = report.sums_check;
    j["ann_equals_char"] = report.ann_equals_char;
    return j;
}

inline DecompositionReport report_from_json(const nlohmann::json& j) {
    WeightSpec weight = parse_weight(j.at("n").get<int>(), j.at("weight").get<std::string>());
    DecompositionReport report{weight, j.at("l").get<int>()};
    report.dim_ul = j.at("dim_ul").get<long long>();
    report.dim_ulv = j.at("dim_ulv").get<long long>();
    report.dim_ann = j.at("dim_ann").get<long long>();
    report.dim_char = j.at("dim_char").get<long long>();
    report.dim_ul_complementary = j.at("dim_ul_complementary").get<long long>();
    report.complementary_injective = j.at("complementary_injective").get<bool>();
    report.sums_check = j.at("sums_check").get<bool>();
    report.ann_equals_char = j.at("ann_equals_char").get<bool>();
    return report;
}

}  // namespace hwv
