#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "helpers.hpp"
#include "qdm/cli.hpp"
#include "qdm/state_io.hpp"
#include "qdm/states.hpp"

using namespace qdm;
using nlohmann::json;

namespace {

namespace fs = std::filesystem;

fs::path temp_file(const std::string& name) {
    return fs::temp_directory_path() / name;
}

struct CliResult {
    int code;
    std::string out;
    std::string err;
    json doc;
};

CliResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    CliResult r{code, out.str(), err.str(), json()};
    if (code == 0 && !r.out.empty() && r.out.front() == '{')
        r.doc = json::parse(r.out);
    return r;
}

// Minimal structural validator for the shipped schema subset:
// type / required / properties / items.
bool matches_type(const json& v, const std::string& t) {
    if (t == "object") return v.is_object();
    if (t == "array") return v.is_array();
    if (t == "string") return v.is_string();
    if (t == "integer") return v.is_number_integer() || v.is_number_unsigned();
    if (t == "number") return v.is_number();
    if (t == "boolean") return v.is_boolean();
    if (t == "null") return v.is_null();
    return false;
}

void check_schema(const json& value, const json& schema, const std::string& at) {
    if (schema.contains("type")) {
        const json& t = schema["type"];
        bool ok = false;
        if (t.is_string()) {
            ok = matches_type(value, t.get<std::string>());
        } else {
            for (const auto& alt : t)
                ok = ok || matches_type(value, alt.get<std::string>());
        }
        INFO("type mismatch at ", at);
        CHECK(ok);
    }
    if (schema.contains("required"))
        for (const auto& key : schema["required"]) {
            INFO("missing key ", key.get<std::string>(), " at ", at);
            CHECK(value.contains(key.get<std::string>()));
        }
    if (schema.contains("properties") && value.is_object())
        for (const auto& [key, sub] : schema["properties"].items())
            if (value.contains(key)) check_schema(value[key], sub, at + "." + key);
    if (schema.contains("items") && value.is_array())
        for (const auto& elem : value) check_schema(elem, schema["items"], at + "[]");
}

void validate_against(const json& doc, const std::string& schema_name) {
    std::ifstream f(std::string(QDM_SCHEMA_DIR) + "/" + schema_name);
    REQUIRE(f.good());
    json schema;
    f >> schema;
    check_schema(doc, schema, "$");
}

}  // namespace

TEST_CASE("state file round trips") {
    SUBCASE("Werner(0.25) bitwise") {
        const auto path = temp_file("qdm_werner.json");
        const DensityMatrix w = werner(0.25);
        save_state(path.string(), w, {{"family", "werner"}});
        const DensityMatrix back = load_state(path.string());
        CHECK(back.n_qubits() == 2);
        CHECK((back.mat() - w.mat()).cwiseAbs().maxCoeff() == 0.0);
        fs::remove(path);
    }
    SUBCASE("random 6-qubit state bitwise") {
        const auto path = temp_file("qdm_rand6.json");
        const DensityMatrix rho = test::random_density(6, 1300);
        save_state(path.string(), rho);
        const DensityMatrix back = load_state(path.string());
        CHECK((back.mat() - rho.mat()).cwiseAbs().maxCoeff() == 0.0);
        fs::remove(path);
    }
    SUBCASE("corrupt trace rejected with the invariant named") {
        json doc = state_to_json(werner(0.25));
        for (auto& e : doc["entries"]) {
            e["re"] = e["re"].get<double>() * 2;
            e["im"] = e["im"].get<double>() * 2;
        }
        CHECK_THROWS_WITH_AS(state_from_json(doc),
                             "density matrix invariant violated: unit trace",
                             std::domain_error);
    }
    SUBCASE("schema mismatches rejected") {
        json doc = state_to_json(werner(0.25));
        doc["schema_version"] = 99;
        CHECK_THROWS_AS(state_from_json(doc), std::domain_error);
        json truncated = state_to_json(werner(0.25));
        truncated["entries"].erase(0);
        CHECK_THROWS_AS(state_from_json(truncated), std::domain_error);
    }
    SUBCASE("state file validates against its schema") {
        validate_against(state_to_json(werner(0.25)), "state_file.schema.json");
    }
}

TEST_CASE("cli commands") {
    SUBCASE("werner threshold") {
        const CliResult r =
            run({"entangle", "threshold", "--family", "werner", "--tol", "1e-9"});
        REQUIRE(r.code == 0);
        CHECK(std::abs(r.doc["epsilon_c"].get<double>() - 1.0 / 3.0) < 1e-9);
        validate_against(r.doc, "threshold.schema.json");
    }
    SUBCASE("threshold table") {
        const CliResult r = run({"entangle", "threshold", "--family", "cat",
                                 "--n-min", "2", "--n-max", "4", "--tol", "1e-8"});
        REQUIRE(r.code == 0);
        validate_against(r.doc, "threshold.schema.json");
        CHECK(r.doc["table"].size() == 3);
    }
    SUBCASE("ppt report") {
        const CliResult r = run({"entangle", "ppt", "--state", "werner",
                                 "--epsilon", "0.5", "--cut", "0"});
        REQUIRE(r.code == 0);
        CHECK_FALSE(r.doc["is_ppt"].get<bool>());
        validate_against(r.doc, "ppt.schema.json");
    }
    SUBCASE("crossing") {
        const CliResult r = run({"entangle", "crossing"});
        REQUIRE(r.code == 0);
        CHECK(r.doc["n_cross"].get<int>() == 13);
        validate_against(r.doc, "crossing.schema.json");
    }
    SUBCASE("dqc1 exact identity") {
        const CliResult r = run({"dqc1", "exact", "--u", "identity", "--n", "3"});
        REQUIRE(r.code == 0);
        CHECK(r.doc["re"].get<double>() == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(r.doc["im"].get<double>() == doctest::Approx(0.0).epsilon(1e-9));
        validate_against(r.doc, "dqc1_exact.schema.json");
    }
    SUBCASE("dqc1 sample is seed-reproducible") {
        const std::vector<std::string> args{"dqc1",    "sample", "--u",
                                            "random",  "--n",    "2",
                                            "--seed",  "5",      "--shots",
                                            "2000",    "--epsilon", "1"};
        const CliResult a = run(args);
        const CliResult b = run(args);
        REQUIRE(a.code == 0);
        CHECK(a.out == b.out);
        validate_against(a.doc, "dqc1_sample.schema.json");
    }
    SUBCASE("discord on the Bell state") {
        const CliResult r = run({"discord", "--state", "bell", "--cut", "0",
                                 "--grid-theta", "32", "--grid-phi", "64"});
        REQUIRE(r.code == 0);
        CHECK(r.doc["I"].get<double>() == doctest::Approx(2.0).epsilon(1e-9));
        CHECK(std::abs(r.doc["J_max"].get<double>() - 1.0) < 1e-4);
        CHECK(std::abs(r.doc["D_standard"].get<double>() - 1.0) < 1e-4);
        validate_against(r.doc, "discord.schema.json");
    }
    SUBCASE("coherence spectrum and signal") {
        const CliResult a =
            run({"coherence", "spectrum", "--state", "cat", "--n", "3"});
        REQUIRE(a.code == 0);
        CHECK(a.doc["weights"]["3"].get<double>() == doctest::Approx(0.25));
        validate_against(a.doc, "coherence_spectrum.schema.json");

        const CliResult b = run({"coherence", "signal", "--n", "3", "--samples", "64"});
        REQUIRE(b.code == 0);
        CHECK(b.doc["peak_order"].get<int>() == 3);
        validate_against(b.doc, "coherence_signal.schema.json");
    }
    SUBCASE("state make round trip through a file") {
        const auto path = temp_file("qdm_cli_state.json");
        const CliResult w = run({"state", "make", "--state", "werner", "--epsilon",
                                 "0.25", "--out", path.string()});
        REQUIRE(w.code == 0);
        const CliResult r =
            run({"entangle", "ppt", "--state", path.string(), "--cut", "0"});
        REQUIRE(r.code == 0);
        CHECK(r.doc["is_ppt"].get<bool>());
        fs::remove(path);
    }
    SUBCASE("csv output") {
        const CliResult r = run({"--format", "csv", "dqc1", "exact", "--u",
                                 "identity", "--n", "2"});
        REQUIRE(r.code == 0);
        CHECK(r.out.find("re,") != std::string::npos);
    }
}

TEST_CASE("cli error paths") {
    SUBCASE("unknown subcommand exits 2 with usage on stderr") {
        const CliResult r = run({"frobnicate"});
        CHECK(r.code == 2);
        CHECK(r.err.find("Usage") != std::string::npos);
    }
    SUBCASE("argument errors exit 2") {
        CHECK(run({"state", "make", "--state", "werner", "--epsilon", "3"}).code == 2);
        CHECK(run({"state", "make", "--state", "nonsense"}).code == 2);
    }
    SUBCASE("resource errors exit 3") {
        const CliResult r =
            run({"--cap", "3", "coherence", "signal", "--n", "6", "--samples", "64"});
        CHECK(r.code == 3);
    }
    SUBCASE("invalid state file exits 3 naming the invariant") {
        const auto path = temp_file("qdm_corrupt.json");
        json doc = state_to_json(werner(0.25));
        for (auto& e : doc["entries"]) e["re"] = e["re"].get<double>() * 2;
        std::ofstream(path) << doc.dump();
        const CliResult r = run({"entangle", "ppt", "--state", path.string()});
        CHECK(r.code == 3);
        CHECK(r.err.find("unit trace") != std::string::npos);
        fs::remove(path);
    }
    SUBCASE("help exits 0") {
        CHECK(run({"--help"}).code == 0);
    }
}
