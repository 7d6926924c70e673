#include <doctest.h>

#include <fstream>
#include <sstream>

#include "stiefel/cli.hpp"
#include "stiefel/report.hpp"

using stiefel::cli::Json;

namespace {

struct Result {
    int code = 0;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    Result r;
    r.code = stiefel::cli::run(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

Json run_json(std::vector<std::string> args) {
    args.push_back("--json");
    const Result r = run(args);
    const Json j = Json::parse(r.out);
    CHECK(j.contains("status"));
    CHECK((r.code == 0) == (j.at("status") == "ok"));
    return j;
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

}  // namespace

TEST_CASE("basis example") {
    const Result r = run({"basis", "--n", "4", "--k", "2", "--degree", "5"});
    CHECK(r.code == 0);
    CHECK(r.out == "a2*a3\n");
}

TEST_CASE("phi --json") {
    const Json j = run_json({"phi", "0"});
    CHECK(j["command"] == "phi");
    CHECK(j["results"] == Json::parse(R"({"m":0,"phi":0,"power":1})"));
    CHECK(j["results"].dump() == R"({"m":0,"phi":0,"power":1})");
    const Json big = run_json({"phi", "300"});
    CHECK(big["results"]["power"].is_string());
}

TEST_CASE("verify-thm2 on V_3(R^7)") {
    const Result text = run({"verify-thm2", "--n", "7", "--k", "3"});
    CHECK(text.code == 0);
    const Json j = run_json({"verify-thm2", "--n", "7", "--k", "3"});
    CHECK(j["status"] == "ok");
    CHECK(j["results"]["counterexamples"].empty());
    for (const auto& row : j["results"]["per_q"]) CHECK(row["violations"] == 0);
    CHECK(j["results"]["wu_only"].contains("per_q"));
}

TEST_CASE("every subcommand emits one JSON document with a status") {
    const std::vector<std::vector<std::string>> commands = {
        {"basis", "--n", "5", "--k", "3"},
        {"basis", "--n", "5", "--k", "3", "--degree", "4"},
        {"mul", "--n", "5", "--k", "3", "a2", "a2*a3"},
        {"sq", "--n", "7", "--k", "3", "--i", "1", "a4*a5"},
        {"phi", "7"},
        {"binom", "7", "2"},
        {"tbands", "--n", "7", "--k", "3"},
        {"wu-check", "--n", "5", "--k", "2", "--w", "3=a3"},
        {"wu-check", "--n", "4", "--k", "2", "--w", "2=a2"},
        {"enumerate", "--n", "6", "--k", "3", "--wu"},
        {"derive", "--n", "7", "--k", "3", "--q", "2"},
        {"derive", "--n", "5", "--k", "3", "--q", "1"},
        {"verify-thm1", "--n", "7", "--k", "3"},
        {"verify-thm1", "--max-n", "8", "--max-d", "4"},
        {"verify-thm2", "--n", "6", "--k", "3"},
        {"axioms", "--n", "6", "--k", "3"},
        {"enumerate", "--n", "9", "--k", "5"},
    };
    for (const auto& c : commands) {
        CAPTURE(c[0]);
        const Json j = run_json(c);
        CHECK(j["command"] == c[0]);
        CHECK(j.contains("parameters"));
        CHECK(j.contains("results"));
        CHECK(stiefel::cli::report_from_json(j) == stiefel::cli::report_from_json(Json::parse(j.dump())));
        CHECK(stiefel::cli::to_json(stiefel::cli::report_from_json(j)) == j);
    }
}

TEST_CASE("text and JSON modes agree") {
    {
        const auto text = lines(run({"basis", "--n", "9", "--k", "4", "--degree", "13"}).out);
        const Json j = run_json({"basis", "--n", "9", "--k", "4", "--degree", "13"});
        CHECK(text == j["results"]["basis"].get<std::vector<std::string>>());
    }
    {
        const auto text = lines(run({"basis", "--n", "6", "--k", "3"}).out);
        const Json j = run_json({"basis", "--n", "6", "--k", "3"});
        REQUIRE(text.size() == j["results"]["degrees"].size());
        for (std::size_t i = 0; i < text.size(); ++i) {
            const auto& row = j["results"]["degrees"][i];
            std::string expected = std::to_string(row["degree"].get<int>()) + ":";
            for (const auto& m : row["basis"]) expected += " " + m.get<std::string>();
            CHECK(text[i] == expected);
        }
    }
    for (const auto& c : std::vector<std::vector<std::string>>{
             {"mul", "--n", "5", "--k", "3", "a2", "a2*a3"},
             {"mul", "--n", "5", "--k", "3", "a3", "a3"},
         }) {
        CHECK(lines(run(c).out).at(0) == run_json(c)["results"]["product"]);
    }
    {
        const std::vector<std::string> c{"sq", "--n", "7", "--k", "3", "--i", "1", "a4*a5"};
        CHECK(run(c).out == "a4*a6\n");
        CHECK(run_json(c)["results"]["result"] == "a4*a6");
    }
    {
        CHECK(run({"binom", "7", "2"}).out == "odd\n");
        CHECK(run_json({"binom", "7", "2"})["results"]["parity"] == "odd");
        CHECK(run_json({"binom", "6", "1"})["results"]["parity"] == "even");
    }
    {
        const auto text = lines(run({"derive", "--n", "7", "--k", "3", "--q", "2"}).out);
        const Json j = run_json({"derive", "--n", "7", "--k", "3", "--q", "2"});
        REQUIRE(text.size() == j["results"]["relations"].size());
        for (std::size_t i = 0; i < text.size(); ++i) {
            const auto& rel = j["results"]["relations"][i];
            std::string expected =
                std::to_string(rel["degree"].get<int>()) + ": " + rel["verdict"].get<std::string>();
            std::string factors;
            for (const auto& f : rel["factors"]) {
                factors += (factors.empty() ? "w" : "*w") + std::to_string(f.get<int>());
            }
            if (!factors.empty()) expected += " " + factors;
            CHECK(text[i] == expected);
        }
        CHECK(text.at(11) == "12: forced_product w4*w8");
    }
}

TEST_CASE("exit codes") {
    Result r = run({"frobnicate"});
    CHECK(r.code == 2);
    CHECK_FALSE(r.err.empty());
    CHECK(r.out.empty());

    r = run({"basis", "--n", "4", "--k", "2", "--bogus"});
    CHECK(r.code == 2);
    CHECK_FALSE(r.err.empty());

    r = run({});
    CHECK(r.code == 2);

    r = run({"mul", "--n", "5", "--k", "3", "a2", "b7"});
    CHECK(r.code == 2);
    CHECK(r.err.find("error") != std::string::npos);

    r = run({"basis", "--degree", "3"});
    CHECK(r.code == 2);

    r = run({"basis", "--n", "3", "--k", "3"});
    CHECK(r.code == 2);

    r = run({"wu-check", "--n", "5", "--k", "2", "--w", "3=a3"});
    CHECK(r.code == 1);

    r = run({"wu-check", "--n", "5", "--k", "2", "--w", "4=a3"});
    CHECK(r.code == 2);

    r = run({"derive", "--n", "5", "--k", "3", "--q", "1"});
    CHECK(r.code == 2);

    r = run({"enumerate", "--n", "9", "--k", "5"});
    CHECK(r.code == 2);
    CHECK(r.err.find("2147483648") != std::string::npos);
    const Json j = run_json({"enumerate", "--n", "9", "--k", "5"});
    CHECK(j["status"] == "budget_exceeded");
    CHECK(j["results"]["state_space"] == 2147483648ULL);

    r = run({"enumerate", "--n", "5", "--k", "3", "--cor22"});
    CHECK(r.code == 2);

    r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("verify-thm2") != std::string::npos);
}

TEST_CASE("enumerate streams JSON lines with the summary last") {
    const Result r = run({"enumerate", "--n", "4", "--k", "2", "--wu", "--jsonl"});
    CHECK(r.code == 0);
    const auto ls = lines(r.out);
    REQUIRE(ls.size() == 3);
    const Json first = Json::parse(ls[0]);
    CHECK(first["classes"].empty());
    CHECK(first["first_nonzero"].is_null());
    const Json second = Json::parse(ls[1]);
    CHECK(second["classes"]["2"] == Json::array({"a2"}));
    CHECK(second["theorem2_ok"] == true);
    const Json summary = Json::parse(ls[2]);
    CHECK(summary["status"] == "ok");
    CHECK(summary["results"]["count"] == 2);

    const Json threaded = run_json({"enumerate", "--n", "9", "--k", "4", "--threads", "3"});
    const Json serial = run_json({"enumerate", "--n", "9", "--k", "4"});
    CHECK(threaded["results"] == serial["results"]);
}

TEST_CASE("theorem2_ok is null outside the product theorem's range") {
    const Json j = run_json({"enumerate", "--n", "5", "--k", "3", "--wu"});
    for (const auto& s : j["results"]["systems"]) CHECK(s["theorem2_ok"].is_null());
}

TEST_CASE("enumeration output matches the frozen snapshots") {
    for (const std::string ring : {"4_2", "5_2", "6_3"}) {
        CAPTURE(ring);
        std::ifstream in(std::string(STIEFEL_SNAPSHOT_DIR) + "/enumerate_wu_" + ring + ".jsonl");
        REQUIRE(in.good());
        std::vector<std::string> expected;
        for (std::string line; std::getline(in, line);) expected.push_back(line);
        const std::string n = ring.substr(0, ring.find('_'));
        const std::string k = ring.substr(ring.find('_') + 1);
        auto got = lines(run({"enumerate", "--n", n, "--k", k, "--wu", "--jsonl"}).out);
        got.pop_back();  // summary
        CHECK(got == expected);
    }
}
