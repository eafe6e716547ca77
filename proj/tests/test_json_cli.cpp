#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "addsys/cli.hpp"
#include "addsys/json_io.hpp"
#include "addsys/transform.hpp"

#include "oracles.hpp"

using namespace addsys;
using nlohmann::json;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run_cli(std::initializer_list<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(std::vector<std::string>(args), out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp(const json& doc, const std::string& name) {
    std::string path = "/tmp/addsys_test_" + name + ".json";
    std::ofstream file(path);
    file << doc.dump();
    return path;
}

SetExpr random_doc_set(std::mt19937_64& rng, int depth = 0) {
    std::uniform_int_distribution<int> kind(0, depth < 1 ? 3 : 1);
    switch (kind(rng)) {
        case 0: return SetExpr::explicit_set(oracles::random_digit_set(rng, 6, 40));
        case 1: return SetExpr::ray(Int(std::uniform_int_distribution<int>(1, 30)(rng)));
        case 2:
            return SetExpr::dilated_node(Int(std::uniform_int_distribution<int>(2, 9)(rng)),
                                         random_doc_set(rng, depth + 1));
        default:
            return SetExpr::bns_subsum(RadixSeq({Int(2), Int(3)}, RadixSeq::Tail::RepeatLast),
                                       IndexSet({1, 3}, 4, std::uniform_int_distribution<int>(0, 1)(rng) == 1));
    }
}

}  // namespace

TEST_CASE("property: documents round-trip through JSON") {
    std::mt19937_64 rng(60601);
    for (int trial = 0; trial < 50; ++trial) {
        SystemDocument doc;
        int count = std::uniform_int_distribution<int>(1, 4)(rng);
        for (int i = 0; i < count; ++i) doc.sets.push_back(random_doc_set(rng));
        if (std::uniform_int_distribution<int>(0, 1)(rng)) {
            doc.tail = oracles::random_radices(rng, 3, 2, 9);
        }
        if (std::uniform_int_distribution<int>(0, 1)(rng)) {
            doc.meta = json{{"note", "fixture"}, {"trial", trial}};
        }
        SystemDocument back = parse_system_document(to_json(doc).dump());
        CHECK(back == doc);
    }
}

TEST_CASE("big integers survive the text boundary") {
    Int big = parse_int("123456789012345678901234567890");
    json j = int_to_json(big);
    CHECK(j.is_string());
    CHECK(int_from_json(j) == big);
    CHECK(int_to_json(Int(7)).is_number());

    SystemDocument doc;
    doc.sets.push_back(SetExpr::explicit_set(DigitSet::normalized({Int(0), big})));
    doc.sets.push_back(SetExpr::ray(big * 2));
    CHECK(parse_system_document(to_json(doc).dump()) == doc);

    CHECK_THROWS_WITH_AS(int_from_json(json(1.5)), doctest::Contains("BadDocument"), Error);
}

TEST_CASE("unknown tags and versions are rejected with the version named") {
    json bad = {{"version", "1"}, {"sets", json::array({{{"type", "mystery"}}})}};
    CHECK_THROWS_WITH_AS(parse_system_document(bad.dump()), doctest::Contains("version 1"), Error);

    json wrong_version = {{"version", "9"}, {"sets", json::array()}};
    CHECK_THROWS_WITH_AS(parse_system_document(wrong_version.dump()), doctest::Contains("unsupported"),
                         Error);
}

TEST_CASE("cli: usage errors exit 2") {
    CHECK(run_cli({"no-such-command"}).code == 2);
    CHECK(run_cli({"verify"}).code == 2);
    CHECK(run_cli({"decompose", "--set", "1,3"}).code == 2);  // missing zero
    CHECK(run_cli({"bns", "--radices", "2,3", "--depth", "5"}).code == 2);
}

TEST_CASE("cli: decompose prints factorizations and exit codes track the verdict") {
    CliResult two = run_cli({"decompose", "--set", "0,1,2,3,4,5"});
    CHECK(two.code == 0);
    CHECK(two.out == "{0, 1} (+) {0, 2, 4}\n{0, 1, 2} (+) {0, 3}\n");

    CliResult none = run_cli({"decompose", "--set", "0,1,2,4"});
    CHECK(none.code == 1);
    CHECK(none.out == "indecomposable\n");
}

TEST_CASE("cli: verify reports the least counterexample with exit 1") {
    json bad = {{"version", "1"},
                {"sets", json::array({json{{"type", "explicit"}, {"elements", {0, 1, 2}}},
                                      json{{"type", "explicit"}, {"elements", {0, 2, 4}}},
                                      json{{"type", "ray"}, {"modulus", 9}}})}};
    std::string path = write_temp(bad, "colliding");

    CliResult r = run_cli({"verify", "--system", path, "--bound", "9"});
    CHECK(r.code == 1);
    CHECK(r.out.find("n = 2") != std::string::npos);

    CliResult js = run_cli({"verify", "--system", path, "--bound", "9", "--json"});
    CHECK(js.code == 1);
    json parsed = json::parse(js.out);
    CHECK(parsed["ok"] == false);
    CHECK(parsed["n"] == 2);
    CHECK(parsed["count"] == 2);
    CHECK(parsed["witnesses"].size() == 2);
}

TEST_CASE("cli: bns, verify, encode, decode chain") {
    CliResult made = run_cli({"bns", "--radices", "2,3,4", "--depth", "3", "--json"});
    REQUIRE(made.code == 0);
    std::string path = write_temp(json::parse(made.out), "bns234");

    CHECK(run_cli({"verify", "--system", path, "--bound", "1000"}).code == 0);
    CHECK(run_cli({"verify", "--system", path, "--bound", "1000", "--serial"}).code == 0);

    CliResult enc = run_cli({"encode", "--system", path, "--n", "23", "--json"});
    REQUIRE(enc.code == 0);
    json parsed = json::parse(enc.out);
    CHECK(parsed["assignment"] == json({{"1", 1}, {"2", 4}, {"3", 18}}));

    CliResult dec = run_cli({"decode", "--system", path, "--assignment", "1:1,2:4,3:18"});
    REQUIRE(dec.code == 0);
    CHECK(dec.out == "23\n");

    CHECK(run_cli({"decode", "--system", path, "--assignment", "1:7"}).code == 2);
}

TEST_CASE("cli: refine emits the pinned JSON shape") {
    CliResult r = run_cli({"refine", "--radices", "4,4", "--json"});
    REQUIRE(r.code == 0);
    CHECK(r.out == "{\"grouping\":[[1,2],[3,4]],\"refined\":[2,2,2,2]}\n");
}

TEST_CASE("cli: contract matches the base-4 system and classify flags composites") {
    CliResult made = run_cli({"bns", "--radices", "2", "--repeat", "--depth", "4", "--json"});
    std::string bin = write_temp(json::parse(made.out), "bin4");

    CliResult contracted = run_cli({"contract", "--system", bin, "--parts", "1 2|3 4", "--bound", "16", "--json"});
    REQUIRE(contracted.code == 0);
    SystemDocument doc = parse_system_document(contracted.out);
    AdditiveSystem quat = bns_from_radices(RadixSeq({Int(4)}, RadixSeq::Tail::RepeatLast), 2);
    AdditiveSystem got = system_from_document(doc);
    for (int i = 1; i <= 2; ++i) {
        CHECK(got.set_at(i).elements_below(20) == quat.set_at(i).elements_below(20));
    }

    std::string quat_path = write_temp(to_json(document_from_system(quat)), "quat");
    CliResult verdict = run_cli({"classify", "--system", quat_path, "--depth", "2"});
    CHECK(verdict.code == 1);
    CHECK(verdict.out.find("decomposable: set 1") != std::string::npos);

    CliResult primes = run_cli({"bns", "--radices", "2,3,5", "--json"});
    std::string primes_path = write_temp(json::parse(primes.out), "primes");
    CHECK(run_cli({"classify", "--system", primes_path, "--depth", "3"}).code == 0);
}

TEST_CASE("cli: peel and dilate and limit run end to end") {
    CliResult made = run_cli({"bns", "--radices", "2", "--repeat", "--depth", "3", "--json"});
    std::string bin = write_temp(json::parse(made.out), "bin3");

    CliResult peeled = run_cli({"peel", "--system", bin, "--bound", "8", "--json"});
    REQUIRE(peeled.code == 0);
    json pj = json::parse(peeled.out);
    CHECK(pj["i1"] == 1);
    CHECK(pj["g"] == 2);
    CHECK(pj["dilationCase"] == true);

    CliResult dilated = run_cli({"dilate", "--system", bin, "--g", "3", "--json"});
    REQUIRE(dilated.code == 0);
    AdditiveSystem d = system_from_document(parse_system_document(dilated.out));
    CHECK(d.set_at(1).elements_below(5) == std::vector<Int>{Int(0), Int(1), Int(2)});

    CliResult seq = run_cli({"dilate", "--system", bin, "--seq", "2,3", "--json"});
    REQUIRE(seq.code == 0);

    CliResult lim = run_cli({"limit", "--radices", "2", "--nmax", "12", "--bound", "4096", "--json"});
    REQUIRE(lim.code == 0);
    json lj = json::parse(lim.out);
    CHECK(lj["windowBegin"] == 6);
    CHECK(lj["sets"].size() == 12);
}

TEST_CASE("cli: json output is stable across runs") {
    for (const auto& args : {std::vector<std::string>{"decompose", "--set", "0,1,2,3,4,5,6,7", "--json"},
                             std::vector<std::string>{"refine", "--radices", "12,2", "--json"}}) {
        std::ostringstream out1, err1, out2, err2;
        int c1 = cli::run(args, out1, err1);
        int c2 = cli::run(args, out2, err2);
        CHECK(c1 == c2);
        CHECK(out1.str() == out2.str());
    }
}
