// Copyright 2026 The covchan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    std::stringstream ss;
    ss << file.rdbuf();
    return ss.str();
}

RunResult run_cli(const std::string& args, const std::string& tag) {
    const std::string out_path = "cli_" + tag + ".out";
    const std::string err_path = "cli_" + tag + ".err";
    const std::string cmd = std::string(COVCHAN_CLI_PATH) + " " + args + " > " + out_path +
                            " 2> " + err_path;
    const int status = std::system(cmd.c_str());
    RunResult result;
    result.exit_code = WEXITSTATUS(status);
    result.out = slurp(out_path);
    result.err = slurp(err_path);
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return result;
}

// validates the subset of JSON Schema the shipped schemas use:
// type (incl. ["number","null"]), required, properties, items, enum,
// minimum, minItems, maxItems
bool matches_type(const json& value, const std::string& type) {
    if (type == "object") return value.is_object();
    if (type == "array") return value.is_array();
    if (type == "string") return value.is_string();
    if (type == "boolean") return value.is_boolean();
    if (type == "integer") return value.is_number_integer() || value.is_number_unsigned();
    if (type == "number") return value.is_number();
    if (type == "null") return value.is_null();
    return false;
}

bool validate_schema(const json& value, const json& schema, std::string& why);

bool validate_schema(const json& value, const json& schema, std::string& why) {
    if (schema.contains("type")) {
        const json& type = schema["type"];
        bool ok = false;
        if (type.is_string())
            ok = matches_type(value, type.get<std::string>());
        else
            for (const auto& alt : type)
                ok = ok || matches_type(value, alt.get<std::string>());
        if (!ok) {
            why = "type mismatch at " + value.dump().substr(0, 40);
            return false;
        }
    }
    if (schema.contains("enum")) {
        bool ok = false;
        for (const auto& allowed : schema["enum"])
            ok = ok || allowed == value;
        if (!ok) {
            why = "enum mismatch: " + value.dump();
            return false;
        }
    }
    if (value.is_number() && schema.contains("minimum") &&
        value.get<double>() < schema["minimum"].get<double>()) {
        why = "minimum violated: " + value.dump();
        return false;
    }
    if (value.is_object()) {
        if (schema.contains("required"))
            for (const auto& key : schema["required"])
                if (!value.contains(key.get<std::string>())) {
                    why = "missing required key " + key.get<std::string>();
                    return false;
                }
        if (schema.contains("properties"))
            for (const auto& [key, sub] : schema["properties"].items())
                if (value.contains(key) && !validate_schema(value[key], sub, why))
                    return false;
    }
    if (value.is_array()) {
        if (schema.contains("minItems") && value.size() < schema["minItems"].get<std::size_t>()) {
            why = "too few items";
            return false;
        }
        if (schema.contains("maxItems") && value.size() > schema["maxItems"].get<std::size_t>()) {
            why = "too many items";
            return false;
        }
        if (schema.contains("items"))
            for (const auto& item : value)
                if (!validate_schema(item, schema["items"], why))
                    return false;
    }
    return true;
}

bool validate_against(const json& doc, const std::string& schema_file, std::string& why) {
    const json schema = json::parse(slurp(std::string(COVCHAN_SCHEMA_DIR) + "/" + schema_file));
    return validate_schema(doc, schema, why);
}

std::vector<std::string> csv_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line))
        if (!line.empty())
            lines.push_back(line);
    return lines;
}

std::vector<std::string> csv_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ','))
        fields.push_back(field);
    return fields;
}

} // namespace

TEST_CASE("info on the extreme transpose-depolarising channel") {
    const RunResult r = run_cli("info --family tdep --d 3 --t -0.5", "info_wh");
    CHECK(r.exit_code == 0);
    const json doc = json::parse(r.out);
    std::string why;
    CHECK_MESSAGE(validate_against(doc, "info.schema.json", why), why);
    CHECK(doc["cp"].get<bool>());
    CHECK(doc["tp"].get<bool>());
    CHECK_FALSE(doc["ppt"].get<bool>());
    CHECK(std::abs(doc["cp_min_eig"].get<double>()) < 1e-10);
    CHECK(doc["s_min"].get<double>() == doctest::Approx(0.6931471805599453).epsilon(1e-10));
}

TEST_CASE("info on the noiseless channel") {
    const RunResult r = run_cli("info --family dep --d 3 --t 1", "info_id");
    CHECK(r.exit_code == 0);
    const json doc = json::parse(r.out);
    CHECK(doc["s_min"].get<double>() == doctest::Approx(0.0));
    CHECK(doc["holevo_capacity"].get<double>() ==
          doctest::Approx(std::log(3.0)).epsilon(1e-12));
}

TEST_CASE("info suppresses CP-only quantities outside the CP range and exits 3") {
    const RunResult r = run_cli("info --family tdep --d 3 --t 0.3", "info_noncp");
    CHECK(r.exit_code == 3);
    const json doc = json::parse(r.out);
    CHECK_FALSE(doc["cp"].get<bool>());
    CHECK_FALSE(doc.contains("s_min"));
    CHECK_FALSE(doc.contains("holevo_capacity"));
    std::string why;
    CHECK_MESSAGE(validate_against(doc, "info.schema.json", why), why);
}

TEST_CASE("info converts entropies to bits on request") {
    const RunResult r = run_cli("info --family tdep --d 3 --t -0.5 --log-base 2", "info_bits");
    const json doc = json::parse(r.out);
    CHECK(doc["s_min"].get<double>() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("invalid flags exit with code 2") {
    CHECK(run_cli("info --family bogus --d 3 --t 0", "bad_family").exit_code == 2);
    CHECK(run_cli("info --d 3", "missing_family").exit_code == 2);
    CHECK(run_cli("additivity --d 3", "missing_t").exit_code == 2);
    CHECK(run_cli("additivity --d 3 --t 0.1 --t-from 0 --t-to 0.2 --steps 3",
                  "conflicting_t").exit_code == 2);
    CHECK(run_cli("sweep --d 3 --t-from 0.2 --t-to 0.1 --steps 3", "reversed").exit_code == 2);
    CHECK(run_cli("nonsense", "unknown_cmd").exit_code == 2);
}

TEST_CASE("additivity at the NSD threshold") {
    const RunResult r = run_cli("additivity --d 3 --t -0.2857142857", "add_nsd");
    CHECK(r.exit_code == 0);
    const auto lines = csv_lines(r.out);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] == "d,t,s_min,s_min_product,gap,certificate,verdict,n_starts,seed");
    const auto fields = csv_fields(lines[1]);
    REQUIRE(fields.size() == 9);
    CHECK(std::abs(std::stod(fields[4])) < 1e-7);
    CHECK(fields[5] == "nsd-criterion");
    CHECK(fields[6] == "additive-within-tol");
}

TEST_CASE("additivity at the d=2 extreme point") {
    const RunResult r = run_cli("additivity --d 2 --t -1", "add_d2");
    CHECK(r.exit_code == 0);
    const auto fields = csv_fields(csv_lines(r.out)[1]);
    CHECK(std::abs(std::stod(fields[4])) < 1e-7);
}

TEST_CASE("additivity sweeps the PPT interval with per-row certificates") {
    const RunResult r = run_cli(
        "additivity --d 3 --t-from -0.125 --t-to 0.25 --steps 16 --starts 12", "add_grid");
    CHECK(r.exit_code == 0);
    const auto lines = csv_lines(r.out);
    REQUIRE(lines.size() == 17);
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const auto fields = csv_fields(lines[k]);
        CHECK(fields[5] == "ppt-entanglement-breaking");
        CHECK(std::abs(std::stod(fields[4])) < 1e-7);
    }
}

TEST_CASE("additivity emits schema-valid JSON on request") {
    const RunResult r = run_cli("additivity --d 3 --t 0.1 --starts 10 --format json",
                                "add_json");
    CHECK(r.exit_code == 0);
    std::string why;
    CHECK_MESSAGE(validate_against(json::parse(r.out), "additivity.schema.json", why), why);
}

TEST_CASE("additivity flags out-of-range rows and exits 3") {
    const RunResult r = run_cli("additivity --d 3 --t-from 0.2 --t-to 0.3 --steps 3",
                                "add_noncp");
    CHECK(r.exit_code == 3);
    const auto lines = csv_lines(r.out);
    REQUIRE(lines.size() == 4);
    CHECK(csv_fields(lines[3])[5] == "not-cp"); // t = 0.3
    CHECK(csv_fields(lines[1])[5] == "ppt-entanglement-breaking"); // t = 0.2
}

TEST_CASE("mm passes for d=2 and reports schema-valid JSON") {
    const RunResult r = run_cli("mm --d 2 --t -0.8 --pairs 1000 --seed 7", "mm_d2");
    CHECK(r.exit_code == 0);
    const json doc = json::parse(r.out);
    std::string why;
    CHECK_MESSAGE(validate_against(doc, "mm.schema.json", why), why);
    CHECK(doc["pass"].get<bool>());
    CHECK(doc["seed"].get<int>() == 7);
}

TEST_CASE("mm reports counterexamples in the missing domain and exits 4") {
    const RunResult r = run_cli("mm --d 3 --t -0.45 --pairs 200 --seed 7", "mm_missing");
    CHECK(r.exit_code == 4);
    const json doc = json::parse(r.out);
    std::string why;
    CHECK_MESSAGE(validate_against(doc, "mm.schema.json", why), why);
    CHECK_FALSE(doc["pass"].get<bool>());
    REQUIRE(doc["counterexamples"].size() > 0);
    CHECK(doc["counterexamples"][0]["lambda"].size() == 3);
}

TEST_CASE("mm with an empty pair budget passes vacuously") {
    const RunResult r = run_cli("mm --d 3 --t -0.45 --pairs 0", "mm_vacuous");
    CHECK(r.exit_code == 0);
    CHECK(json::parse(r.out)["n_pairs"].get<int>() == 0);
}

TEST_CASE("sweep emits a deterministic classification table") {
    const std::string flags =
        "sweep --d 3 --t-from -0.5 --t-to 0.25 --steps 76 --n-lambda 40 --starts 6 --seed 3";
    const RunResult first = run_cli(flags + " --out sweep_a.csv", "sweep_a");
    const RunResult second = run_cli(flags + " --out sweep_b.csv", "sweep_b");
    CHECK(first.exit_code == 0);
    CHECK(second.exit_code == 0);
    const std::string a = slurp("sweep_a.csv");
    const std::string b = slurp("sweep_b.csv");
    CHECK(a == b); // byte-identical under a fixed seed
    const auto lines = csv_lines(a);
    REQUIRE(lines.size() == 77);
    CHECK(lines[0] == "d,t,region,cp_min_eig,ppt_min_eig,nsd_max_shifted,gap,seed");

    // ppt_min_eig changes sign between the rows bracketing -1/8
    bool bracketed = false;
    for (std::size_t k = 1; k + 1 < lines.size(); ++k) {
        const double t_here = std::stod(csv_fields(lines[k])[1]);
        const double t_next = std::stod(csv_fields(lines[k + 1])[1]);
        if (t_here < -0.125 && t_next > -0.125) {
            const double eig_here = std::stod(csv_fields(lines[k])[4]);
            const double eig_next = std::stod(csv_fields(lines[k + 1])[4]);
            CHECK(eig_here < 0.0);
            CHECK(eig_next > 0.0);
            bracketed = true;
        }
    }
    CHECK(bracketed);
    std::remove("sweep_a.csv");
    std::remove("sweep_b.csv");
}

TEST_CASE("sweep numbers carry 17 significant digits") {
    const RunResult r = run_cli("sweep --d 3 --t 0.1 --n-lambda 10 --starts 4", "sweep_digits");
    CHECK(r.exit_code == 0);
    const auto fields = csv_fields(csv_lines(r.out)[1]);
    // cp_min_eig at t=0.1 is (1-t(d+1))/d = 0.2; round-trip through %.17g
    const double cp_min = std::stod(fields[3]);
    CHECK(cp_min == doctest::Approx(0.2).epsilon(1e-12));
    CHECK(fields[3].size() >= 3);
}

TEST_CASE("sweep emits schema-valid JSON on request") {
    const RunResult r = run_cli("sweep --d 3 --t-from -0.4 --t-to 0.2 --steps 4 --n-lambda 10 "
                                "--starts 4 --format json", "sweep_json");
    CHECK(r.exit_code == 0);
    const json doc = json::parse(r.out);
    std::string why;
    CHECK_MESSAGE(validate_against(doc, "sweep.schema.json", why), why);
    CHECK(doc["rows"].size() == 4);
}

TEST_CASE("sweep at d=2 never reports a missing region") {
    const RunResult r = run_cli("sweep --d 2 --t-from -1 --t-to 0.333 --steps 25 --n-lambda 20 "
                                "--starts 4", "sweep_d2");
    CHECK(r.exit_code == 0);
    for (const auto& line : csv_lines(r.out))
        CHECK(csv_fields(line)[2] != "missing");
}

TEST_CASE("single-point sweep at t=0") {
    const RunResult r = run_cli("sweep --d 3 --t 0 --n-lambda 10 --starts 4", "sweep_zero");
    CHECK(r.exit_code == 0);
    const auto lines = csv_lines(r.out);
    REQUIRE(lines.size() == 2);
    CHECK(std::abs(std::stod(csv_fields(lines[1])[6])) < 1e-10); // gap
}

TEST_CASE("sweep flags out-of-range grid points with exit 3") {
    const RunResult r = run_cli("sweep --d 3 --t-from 0.2 --t-to 0.3 --steps 2 --n-lambda 8 "
                                "--starts 4", "sweep_noncp");
    CHECK(r.exit_code == 3);
    const auto lines = csv_lines(r.out);
    REQUIRE(lines.size() == 3);
    CHECK(csv_fields(lines[2])[2] == "not-cp");
}
