#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "sturmkit/cli.hpp"
#include "sturmkit/enumeration.hpp"

namespace {

struct cli_result {
    int code = 0;
    std::string out;
    std::string err;
};

cli_result run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = sturmkit::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

}  // namespace

TEST_CASE("gen command") {
    CHECK(run_cli({"gen", "--p", "6", "--q", "4"}).out == "aababaabab\n");
    CHECK(run_cli({"gen", "--p", "1", "--q", "1", "--upper"}).out == "ba\n");
    CHECK(run_cli({"gen", "--p", "0", "--q", "4"}).code == 2);
    CHECK(run_cli({"gen", "--p", "6", "--q", "4"}).code == 0);

    SUBCASE("byte-identical across runs") {
        const auto a = run_cli({"gen", "--p", "7", "--q", "5"});
        const auto b = run_cli({"gen", "--p", "7", "--q", "5"});
        CHECK(a.out == b.out);
    }
}

TEST_CASE("classify command") {
    const auto ab = run_cli({"classify", "ab"});
    CHECK(ab.code == 0);
    CHECK(ab.out.find("NonStrictlyBispecial") != std::string::npos);
    CHECK(ab.out.find("witness: baba [upper p=2 q=2]") != std::string::npos);

    const auto aa = run_cli({"classify", "aa", "--json"});
    CHECK(aa.code == 0);
    const auto j = nlohmann::json::parse(aa.out);
    CHECK(j.at("class") == "StrictlyBispecial");
    CHECK(j.at("extension_count") == 4);
    REQUIRE(j.at("witnesses").size() == 2);
    CHECK(j.at("witnesses")[0].at("word") == "aaab");
    CHECK(j.at("witnesses")[0].at("side") == "lower");
    CHECK(j.at("witnesses")[0].at("factorization").at("u") == "aa");
    CHECK(j.at("witnesses")[0].at("factorization").at("n_rep") == 0);
    CHECK(j.at("witnesses")[1].at("word") == "baaa");

    const auto ab_json = run_cli({"classify", "ab", "--json"});
    const auto ja = nlohmann::json::parse(ab_json.out);
    REQUIRE(ja.at("witnesses").size() == 1);
    CHECK(ja.at("witnesses")[0].at("word") == "baba");
    CHECK(ja.at("witnesses")[0].at("factorization").at("u") == "");
    CHECK(ja.at("witnesses")[0].at("factorization").at("n_rep") == 1);

    CHECK(run_cli({"classify", "aabb"}).out.rfind("aabb: NotSturmian", 0) == 0);
    CHECK(run_cli({"classify", ""}).out.rfind("(empty): StrictlyBispecial", 0) == 0);
    CHECK(run_cli({"classify", "abc"}).code == 2);
}

TEST_CASE("table command") {
    const auto csv = run_cli({"table", "--max", "4"});
    CHECK(csv.code == 0);
    const auto lines = lines_of(csv.out);
    REQUIRE(lines.size() == 6);
    CHECK(lines[0] == "n,st,ls,rs,sbs,nbs,bs,mf");
    CHECK(lines[1] == "0,1,1,1,1,0,1,0");
    CHECK(lines[5] == "4,14,10,10,2,6,8,2");

    SUBCASE("json round trip reproduces the table") {
        const auto res = run_cli({"table", "--max", "10", "--format", "json"});
        const auto j = nlohmann::json::parse(res.out);
        const auto t = sturmkit::enumeration::build_table(10);
        REQUIRE(j.size() == t.rows.size());
        for (std::size_t i = 0; i < t.rows.size(); ++i) {
            CHECK(j[i].at("n") == t.rows[i].n);
            CHECK(j[i].at("st") == t.rows[i].st);
            CHECK(j[i].at("ls") == t.rows[i].ls);
            CHECK(j[i].at("rs") == t.rows[i].rs);
            CHECK(j[i].at("sbs") == t.rows[i].sbs);
            CHECK(j[i].at("nbs") == t.rows[i].nbs);
            CHECK(j[i].at("bs") == t.rows[i].bs);
            CHECK(j[i].at("mf") == t.rows[i].mf);
        }
    }

    SUBCASE("csv round trip reproduces the table") {
        const auto res = run_cli({"table", "--max", "6"});
        const auto t = sturmkit::enumeration::build_table(6);
        const auto rows = lines_of(res.out);
        REQUIRE(rows.size() == t.rows.size() + 1);
        for (std::size_t i = 0; i < t.rows.size(); ++i) {
            std::istringstream row(rows[i + 1]);
            std::string field;
            std::vector<std::int64_t> vals;
            while (std::getline(row, field, ',')) vals.push_back(std::stoll(field));
            REQUIRE(vals.size() == 8);
            CHECK(vals == std::vector<std::int64_t>{t.rows[i].n, t.rows[i].st, t.rows[i].ls,
                                                    t.rows[i].rs, t.rows[i].sbs, t.rows[i].nbs,
                                                    t.rows[i].bs, t.rows[i].mf});
        }
    }

    CHECK(run_cli({"table", "--max", "-1"}).code == 2);
    CHECK(run_cli({"table", "--max", "2000000"}).code == 2);
    CHECK(run_cli({"table", "--max", "4", "--format", "xml"}).code == 2);
}

TEST_CASE("mf command") {
    CHECK(run_cli({"mf", "--length", "4"}).out == "aabb\nbbaa\n");
    const auto empty = run_cli({"mf", "--length", "5"});
    CHECK(empty.out.empty());
    CHECK(empty.code == 0);

    const auto checked = run_cli({"mf", "--length", "12", "--check"});
    CHECK(checked.code == 0);
    CHECK(lines_of(checked.out).size() == 14);

    CHECK(run_cli({"mf", "--length", "1"}).code == 2);
    CHECK(run_cli({"mf", "--length", "12", "--check", "--cap", "10"}).code == 2);

    SUBCASE("cap can come from the environment") {
        setenv("STURMKIT_CAP", "10", 1);
        CHECK(run_cli({"mf", "--length", "12", "--check"}).code == 2);
        unsetenv("STURMKIT_CAP");
        CHECK(run_cli({"mf", "--length", "12", "--check"}).code == 0);
    }
}

TEST_CASE("bispecial command") {
    const auto res = run_cli({"bispecial", "--length", "2"});
    CHECK(res.code == 0);
    CHECK(lines_of(res.out) ==
          std::vector<std::string>{"aa strict", "ab non-strict", "ba non-strict", "bb strict"});

    const auto empty_len = run_cli({"bispecial", "--length", "0"});
    CHECK(lines_of(empty_len.out) == std::vector<std::string>{"(empty) strict"});

    const auto ten = run_cli({"bispecial", "--length", "10"});
    CHECK(lines_of(ten.out) == std::vector<std::string>{
                                   "aaaaaaaaaa strict",
                                   "aaaaabaaaa non-strict",
                                   "aaaabaaaaa non-strict",
                                   "aaabaaabaa non-strict",
                                   "aabaaabaaa non-strict",
                                   "aabaabaaba non-strict",
                                   "abaabaabaa non-strict",
                                   "ababaababa strict",
                                   "ababababab non-strict",
                                   "bababababa non-strict",
                                   "bababbabab strict",
                                   "babbabbabb non-strict",
                                   "bbabbabbab non-strict",
                                   "bbabbbabbb non-strict",
                                   "bbbabbbabb non-strict",
                                   "bbbbabbbbb non-strict",
                                   "bbbbbabbbb non-strict",
                                   "bbbbbbbbbb strict",
                               });

    CHECK(run_cli({"bispecial", "--length", "-1"}).code == 2);
    CHECK(run_cli({"bispecial", "--length", "100000"}).code == 2);
}

TEST_CASE("matrix and bwt commands") {
    CHECK(run_cli({"matrix", "--p", "1", "--q", "1"}).out == "ab\nba\n");
    CHECK(lines_of(run_cli({"matrix", "--p", "6", "--q", "4"}).out).size() == 10);
    CHECK(run_cli({"matrix", "--p", "0", "--q", "2"}).code == 2);

    CHECK(run_cli({"bwt", "aababaabab"}).out == "bbbbaaaaaa\n");
    CHECK(run_cli({"bwt", "aab"}).out == "baa\n");
    CHECK(run_cli({"bwt", ""}).code == 2);
}

TEST_CASE("closure command") {
    CHECK(run_cli({"closure", "aab"}).out == "aabaa\n");
    CHECK(run_cli({"closure", "aba"}).out == "aba\n");
    CHECK(run_cli({"closure", "aab", "--left"}).out == "baab\n");
    CHECK(run_cli({"closure", "xyz"}).code == 2);
}

TEST_CASE("verify command") {
    const auto one = run_cli({"verify", "--claim", "lem:rev", "--profile", "quick"});
    CHECK(one.code == 0);
    CHECK(one.out.rfind("PASS  lem:rev", 0) == 0);
    CHECK(lines_of(one.out).size() == 1);

    const auto js = run_cli({"verify", "--claim", "counts", "--profile", "quick", "--json"});
    CHECK(js.code == 0);
    const auto j = nlohmann::json::parse(lines_of(js.out).at(0));
    CHECK(j.at("claim_id") == "counts");
    CHECK(j.at("status") == "pass");

    CHECK(run_cli({"verify", "--claim", "nosuch"}).code == 2);
    CHECK(run_cli({"verify", "--profile", "fast"}).code == 2);

    SUBCASE("full quick run reports every claim and exits cleanly") {
        const auto all = run_cli({"verify", "--profile", "quick"});
        CHECK(all.code == 0);
        const auto lines = lines_of(all.out);
        REQUIRE(lines.size() == 13);
        for (const auto& line : lines) CHECK(line.rfind("PASS", 0) == 0);
        CHECK(all.err.find("13/13 claims passed") != std::string::npos);
    }
}

TEST_CASE("render command") {
    const auto dir = std::filesystem::temp_directory_path() / "sturmkit-cli-test";
    std::filesystem::create_directories(dir);
    const std::string path = (dir / "fig.svg").string();

    const auto res = run_cli({"render", "--p", "6", "--q", "4", "--both", "--out", path});
    REQUIRE(res.code == 0);
    std::ifstream file(path, std::ios::binary);
    REQUIRE(file.good());
    std::stringstream buf;
    buf << file.rdbuf();
    const std::string first = buf.str();
    CHECK(first.rfind("<?xml", 0) == 0);

    SUBCASE("a second run writes identical bytes") {
        REQUIRE(run_cli({"render", "--p", "6", "--q", "4", "--both", "--out", path}).code == 0);
        std::ifstream again(path, std::ios::binary);
        std::stringstream buf2;
        buf2 << again.rdbuf();
        CHECK(buf2.str() == first);
    }

    CHECK(run_cli({"render", "--p", "0", "--q", "1", "--out", path}).code == 2);
    CHECK(run_cli({"render", "--p", "1", "--q", "1", "--out", "/nonexistent/dir/x.svg"}).code ==
          2);
    CHECK(run_cli({"render", "--p", "1", "--q", "1", "--upper", "--both", "--out", path}).code ==
          2);
    std::filesystem::remove_all(dir);
}

TEST_CASE("usage errors") {
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"frobnicate"}).code == 2);
    CHECK(run_cli({"gen"}).code == 2);          // missing required options
    CHECK(run_cli({"--help"}).code == 0);
    CHECK(run_cli({"gen", "--help"}).code == 0);
}
