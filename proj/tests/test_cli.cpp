#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "hwv/annihilator.hpp"
#include "hwv/report_json.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    std::string command = std::string(HWV_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    char buffer[4096];
    std::size_t got;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) output.append(buffer, got);
    int status = pclose(pipe);
    RunResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    result.output = std::move(output);
    return result;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string golden_path(const std::string& name) {
    return std::string(HWV_GOLDEN_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("golden JSON: info for the adjoint weight of sl(3)") {
    RunResult r = run_cli("info --n 3 --weight 1:1,2:1 --output json");
    CHECK(r.exit_code == 0);
    CHECK(r.output == read_file(golden_path("info_sl3_adjoint.json")));
}

TEST_CASE("golden JSON: filtration of Sym^3 for sl(2)") {
    RunResult r = run_cli("filtration --n 2 --weight 1:3 --lmax 3 --output json");
    CHECK(r.exit_code == 0);
    CHECK(r.output == read_file(golden_path("filtration_sl2_sym3.json")));
}

TEST_CASE("golden JSON: verify sl(2) Sym^2 at l = 3") {
    RunResult r = run_cli("verify --n 2 --weight 1:2 --l 3 --output json");
    CHECK(r.exit_code == 0);
    CHECK(r.output == read_file(golden_path("verify_sl2_sym2_l3.json")));
    // ann_equals_char fails here but is non-mandatory since l > m(lambda)
    nlohmann::json parsed = nlohmann::json::parse(r.output);
    CHECK_FALSE(parsed.at("checks").at("ann_equals_char").at("pass").get<bool>());
    CHECK_FALSE(parsed.at("checks").at("ann_equals_char").at("mandatory").get<bool>());
}

TEST_CASE("emitted verify JSON round-trips into the same report") {
    hwv::WeightSpec w(3, {{1, 1}, {2, 1}});
    RunResult r = run_cli("verify --n 3 --weight 1:1,2:1 --l 2 --output json");
    REQUIRE(r.exit_code == 0);
    nlohmann::json parsed = nlohmann::json::parse(r.output);
    hwv::DecompositionReport recovered = hwv::report_from_json(parsed.at("results"));
    hwv::DecompositionReport direct = hwv::verify_decomposition(w, 2);
    CHECK(recovered.weight.n == direct.weight.n);
    CHECK(recovered.weight.parts == direct.weight.parts);
    CHECK(recovered.l == direct.l);
    CHECK(recovered.dim_ul == direct.dim_ul);
    CHECK(recovered.dim_ulv == direct.dim_ulv);
    CHECK(recovered.dim_ann == direct.dim_ann);
    CHECK(recovered.dim_char == direct.dim_char);
    CHECK(recovered.dim_ul_complementary == direct.dim_ul_complementary);
    CHECK(recovered.complementary_injective == direct.complementary_injective);
    CHECK(recovered.sums_check == direct.sums_check);
    CHECK(recovered.ann_equals_char == direct.ann_equals_char);

    // library-level round trip is exact as well
    hwv::DecompositionReport again = hwv::report_from_json(hwv::report_to_json(direct));
    CHECK(hwv::report_to_json(again) == hwv::report_to_json(direct));
}

TEST_CASE("exit status contract") {
    CHECK(run_cli("verify --n 2 --weight 1:1 --l 1").exit_code == 0);
    CHECK(run_cli("verify --n 2 --weight 1:2 --l 3").exit_code == 0);
    CHECK(run_cli("generators --n 4 --weight 2:2").exit_code == 0);

    // corrupted expectation must force a mandatory failure
    CHECK(run_cli("verify --n 2 --weight 1:1 --l 1 --expect sums_check=999").exit_code == 1);
    CHECK(run_cli("verify --n 2 --weight 1:1 --l 1 --expect no_such_check=1").exit_code == 2);

    // malformed input
    CHECK(run_cli("verify --n 2 --weight 1:0 --l 1").exit_code == 2);
    CHECK(run_cli("verify --n 2 --weight nonsense --l 1").exit_code == 2);
    CHECK(run_cli("verify --n 2 --weight 2:1 --l 1").exit_code == 2);
    CHECK(run_cli("verify --n 2 --weight 1:1 --l 0").exit_code == 2);
    CHECK(run_cli("verify --n 2 --weight 1:1").exit_code == 2);
    CHECK(run_cli("frobnicate --n 2").exit_code == 2);
}

TEST_CASE("seeded basis-independence check passes") {
    RunResult r = run_cli("verify --n 3 --weight 1:1,2:1 --l 1 --seed 42 --output json");
    CHECK(r.exit_code == 0);
    nlohmann::json parsed = nlohmann::json::parse(r.output);
    CHECK(parsed.at("checks").at("basis_independence").at("pass").get<bool>());
}

TEST_CASE("text output carries the same verdicts") {
    RunResult r = run_cli("verify --n 2 --weight 1:2 --l 2");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("dim ann_l(v)             7") != std::string::npos);
    CHECK(r.output.find("[pass] ann_equals_char") != std::string::npos);
}
