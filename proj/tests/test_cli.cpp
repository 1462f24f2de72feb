#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <string>
#include <sys/wait.h>

namespace {

namespace fs = std::filesystem;
using Json = nlohmann::json;

struct RunResult {
    int code;
    std::string output;
};

RunResult run(const std::string& args, bool merge_stderr = false) {
    std::string cmd = std::string(QD_CLI_PATH) + " " + args +
                      (merge_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

fs::path scratch() {
    auto dir = fs::temp_directory_path() / "qd_cli_tests";
    fs::create_directories(dir);
    return dir;
}

std::string write_spec(const std::string& name, const std::string& content) {
    auto path = scratch() / name;
    std::ofstream out(path);
    out << content;
    return path.string();
}

const std::string trivial_spec =
    R"({"G":{"kind":"named","name":"cyclic","param":1},
        "F":{"kind":"named","name":"cyclic","param":1},
        "phi":{"images":[0]}})";

const std::string s3_spec =
    R"({"G":{"kind":"named","name":"symmetric","param":3},
        "F":{"kind":"named","name":"symmetric","param":3},
        "phi":{"images":[0,1,2,3,4,5]}})";

const std::string s3c2_spec =
    R"({"G":{"kind":"named","name":"symmetric","param":3},
        "F":{"kind":"named","name":"cyclic","param":2},
        "phi":{"images":[0,2]}})";

} // namespace

TEST_CASE("classify: trivial pair has one simple") {
    auto spec = write_spec("trivial.json", trivial_spec);
    auto r = run("classify --spec " + spec);
    CHECK(r.code == 0);
    auto j = Json::parse(r.output);
    CHECK(j["num_simples"] == 1);
    CHECK(j["labels"][0]["degree"] == 1);
}

TEST_CASE("classify: D(S3) has 8 simples with the expected degrees") {
    auto spec = write_spec("s3.json", s3_spec);
    auto r = run("classify --spec " + spec);
    CHECK(r.code == 0);
    auto j = Json::parse(r.output);
    REQUIRE(j["labels"].size() == 8);
    std::multiset<long> degs;
    for (const auto& l : j["labels"]) degs.insert(l["degree"].get<long>());
    CHECK(degs == std::multiset<long>{1, 1, 2, 2, 2, 2, 3, 3});
}

TEST_CASE("classify: output is byte-deterministic") {
    auto spec = write_spec("s3.json", s3_spec);
    auto a = run("classify --spec " + spec + " --tables");
    auto b = run("classify --spec " + spec + " --tables");
    CHECK(a.code == 0);
    CHECK(a.output == b.output);
}

TEST_CASE("classify: non-injective phi is rejected with exit 2") {
    auto spec = write_spec("noninj.json",
                           R"({"G":{"kind":"named","name":"symmetric","param":3},
                               "F":{"kind":"named","name":"cyclic","param":2},
                               "phi":{"images":[0,0]}})");
    auto r = run("classify --spec " + spec, true);
    CHECK(r.code == 2);
    CHECK(r.output.find("not injective") != std::string::npos);
    // the collapsed pair is named
    CHECK(r.output.find("0") != std::string::npos);
    CHECK(r.output.find("1") != std::string::npos);
}

TEST_CASE("group spec kinds: permutation and table") {
    // S3 from cycle generators
    auto perm = write_spec(
        "perm.json",
        R"({"G":{"kind":"permutation","degree":3,"generators":[[[1,2]],[[1,2,3]]]},
            "F":{"kind":"named","name":"cyclic","param":1},
            "phi":{"images":[0]}})");
    auto r = run("classify --spec " + perm);
    CHECK(r.code == 0);
    CHECK(Json::parse(r.output)["context"]["G"]["order"] == 6);
    // C2 from an explicit table
    auto table = write_spec("table.json",
                            R"({"G":{"kind":"table","mul":[[0,1],[1,0]]},
                                "F":{"kind":"table","mul":[[0,1],[1,0]]},
                                "phi":{"images":[0,1]}})");
    r = run("classify --spec " + table);
    CHECK(r.code == 0);
    CHECK(Json::parse(r.output)["num_simples"] == 4);
}

TEST_CASE("fusion: single product by named label") {
    auto spec = write_spec("s3.json", s3_spec);
    auto r = run("fusion --spec " + spec + " --left \"(1 2 3):1\" --right \"(1 2 3):1\"");
    CHECK(r.code == 0);
    auto j = Json::parse(r.output);
    REQUIRE(j["products"].size() == 1);
    CHECK(j["products"][0]["terms"].size() == 3);
}

TEST_CASE("fusion: unit times X equals X") {
    auto spec = write_spec("s3c2.json", s3c2_spec);
    auto r = run("fusion --spec " + spec + " --left 0:0 --right 3:0");
    CHECK(r.code == 0);
    auto j = Json::parse(r.output);
    auto terms = j["products"][0]["terms"];
    REQUIRE(terms.size() == 1);
    CHECK(terms[0]["g"] == 3);
    CHECK(terms[0]["M"] == 0);
    CHECK(terms[0]["mult"] == 1);
}

TEST_CASE("fusion: --all emits every ordered pair, oracle-verified") {
    auto spec = write_spec("s3c2.json", s3c2_spec);
    auto r = run("fusion --spec " + spec + " --all");
    CHECK(r.code == 0);
    auto j = Json::parse(r.output);
    CHECK(j["products"].size() == 36); // 6 simples
    // csv variant: one matrix block per left label
    auto csv = run("fusion --spec " + spec + " --all --format csv");
    CHECK(csv.code == 0);
    size_t blocks = 0, pos = 0;
    while ((pos = csv.output.find("left=", pos)) != std::string::npos) {
        ++blocks;
        ++pos;
    }
    CHECK(blocks == 6);
}

TEST_CASE("fusion: malformed label exits 2") {
    auto spec = write_spec("s3.json", s3_spec);
    CHECK(run("fusion --spec " + spec + " --left bogus --right 0:0", true).code == 2);
    CHECK(run("fusion --spec " + spec + " --left 0:99 --right 0:0", true).code == 2);
    // element that is not an orbit representative
    CHECK(run("fusion --spec " + spec + " --left 2:0 --right 0:0", true).code == 2);
}

TEST_CASE("chartable: csv and json for S3") {
    auto spec = write_spec("s3.json", s3_spec);
    auto csv = run("chartable --spec " + spec + " --format csv");
    CHECK(csv.code == 0);
    // header + 3 characters
    CHECK(std::count(csv.output.begin(), csv.output.end(), '\n') == 4);
    CHECK(csv.output.find("chi0") != std::string::npos);
    auto j = Json::parse(run("chartable --spec " + spec).output);
    CHECK(j["characters"].size() == 3);
    CHECK(j["class_sizes"] == Json::array({1, 3, 2}));
}

TEST_CASE("ring: structure constants and ZG images") {
    auto spec = write_spec("s3.json", s3_spec);
    auto r = run("ring --spec " + spec);
    CHECK(r.code == 0);
    auto j = Json::parse(r.output);
    CHECK(j["structure_constants"].size() == 8);
    CHECK(j["phi_images"].size() == 8);
    // Phi of the unit is the identity of ZG
    CHECK(j["phi_images"][0]["coeffs"] == Json{{"()", 1}});
}

TEST_CASE("verify: all suites pass on small instances") {
    for (const auto& [name, spec] : std::map<std::string, std::string>{
             {"trivial.json", trivial_spec}, {"s3c2.json", s3c2_spec}}) {
        auto path = write_spec(name, spec);
        auto r = run("verify --spec " + path);
        CHECK(r.code == 0);
        auto j = Json::parse(r.output);
        CHECK(j["ok"] == true);
        for (const auto& c : j["checks"]) CHECK(c["pass"] == true);
    }
}

TEST_CASE("verify: corrupted structure constant fails with a witness") {
    auto spec = write_spec("s3c2.json", s3c2_spec);
    auto r = run("verify --spec " + spec + " --suite hopf --corrupt");
    CHECK(r.code == 1);
    auto j = Json::parse(r.output);
    CHECK(j["ok"] == false);
    bool witnessed = false;
    for (const auto& c : j["checks"])
        if (c["pass"] == false && c.contains("witness") &&
            !c["witness"].get<std::string>().empty())
            witnessed = true;
    CHECK(witnessed);
}

TEST_CASE("verify: hopf suite respects the dimension cap") {
    auto spec = write_spec("s3.json", s3_spec);
    auto r = run("verify --spec " + spec + " --suite hopf --cap 10");
    CHECK(r.code == 0);
    auto j = Json::parse(r.output);
    REQUIRE(j["checks"].size() == 1);
    CHECK(j["checks"][0]["check"].get<std::string>().find("skipped") !=
          std::string::npos);
}

TEST_CASE("invalid invocations exit 2") {
    CHECK(run("classify --spec /nonexistent/path.json", true).code == 2);
    auto garbled = write_spec("garbled.json", "{not json");
    CHECK(run("classify --spec " + garbled, true).code == 2);
    CHECK(run("frobnicate", true).code == 2);
    CHECK(run("classify", true).code == 2); // missing --spec
}
