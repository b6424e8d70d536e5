/* Copyright 2026 The mzvgraph Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mzvgraph/cli.hpp"

#include "json.hpp"

#include <sstream>

using namespace mzvgraph;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("argument classification") {
    CHECK(cli::classify_argument("1,2,2") == cli::ArgumentKind::composition);
    CHECK(cli::classify_argument("3") == cli::ArgumentKind::composition);
    CHECK(cli::classify_argument("01011") == cli::ArgumentKind::word);
    CHECK(cli::classify_argument("01") == cli::ArgumentKind::word);
}

TEST_CASE("codec commands") {
    auto r = invoke({"word", "1,2,2"});
    CHECK(r.code == cli::exit_ok);
    CHECK(r.out == "01011\n");
    CHECK(invoke({"composition", "01011"}).out == "1,2,2\n");
    CHECK(invoke({"--output", "json", "word", "2,3"}).out == "{\"schema\":1,\"composition\":\"2,3\",\"word\":\"00101\"}\n");
}

TEST_CASE("usage errors exit with 2") {
    for (const auto& args : std::vector<std::vector<std::string>>{{"word", "1,1"},
                                                                 {"composition", "0110"},
                                                                 {"tree", "eval", "e*"},
                                                                 {"graph", "e", "--format", "xml"},
                                                                 {"certify", "9"},
                                                                 {"verify", "--suite", "nope"},
                                                                 {"eval", "2", "--tol", "1e-15"},
                                                                 {"frobnicate"},
                                                                 {}}) {
        const auto r = invoke(args);
        CHECK(r.code == cli::exit_usage);
        CHECK(r.out.empty());
        CHECK_FALSE(r.err.empty());
    }
    CHECK(invoke({"tree", "eval", "e*"}).err.find("position 2") != std::string::npos);
}

TEST_CASE("help exits with 0") { CHECK(invoke({"--help"}).code == cli::exit_ok); }

TEST_CASE("shuffle and lyndon commands") {
    CHECK(invoke({"shuffle", "01", "01"}).out == "4 0011\n2 0101\n");
    CHECK(invoke({"lyndon", "factor", "0101"}).out == "(01)^2\n");
    CHECK(invoke({"lyndon", "decomp", "0101"}).out == "1/2 [01 ⧢ 01]\n-2 [0011]\n");
    const auto j = nlohmann::json::parse(invoke({"lyndon", "factor", "0101", "--output", "json"}).out);
    CHECK(j["schema"] == 1);
    CHECK(j["factors"][0]["multiplicity"] == 2);
}

TEST_CASE("tree and graph commands") {
    CHECK(invoke({"tree", "eval", "p(e*e)"}).out == "4 00011\n2 00101\n");
    const auto j = nlohmann::json::parse(invoke({"graph", "e", "--format", "json"}).out);
    CHECK(j["schema"] == 1);
    CHECK(j["internal"].size() == 2);
    CHECK(j["provenance"] == "e");
    CHECK(invoke({"graph", "p(e)"}).out.rfind("digraph G {", 0) == 0);
}

TEST_CASE("eval command") {
    const auto r = invoke({"eval", "3"});
    CHECK(r.code == cli::exit_ok);
    CHECK(r.out.find("zeta(3) = 1.20205690316 +/- ") == 0);
    CHECK(r.out.find("L(001) = -0.00484602245036i") != std::string::npos);

    const auto j = nlohmann::json::parse(invoke({"--output", "json", "eval", "01"}).out);
    CHECK(j["composition"] == "2");
    CHECK(std::fabs(j["value"]["re"].get<double>() - 1.0 / 24) < 1e-10);
    CHECK(j["error"].get<double>() <= 1e-8);
    CHECK(invoke({"eval", "11", "--as", "word"}).code == cli::exit_usage);
}

TEST_CASE("decompose command") {
    const auto r = invoke({"decompose", "1,2,2"});
    CHECK(r.code == cli::exit_ok);
    CHECK(r.out ==
          "-2 q(p(q(e)))\n1/2 q(e*e)\n"
          "identity: -2*c(G(q(p(q(e))))) + 1/2*c(G(q(e*e))) = -zeta(1,2,2)/(2*pi*i)^5\n"
          "check: I(trees) = 1 01011 OK\n");
    CHECK(invoke({"decompose", "01011"}).out == r.out);
}

TEST_CASE("certify command") {
    const auto r = invoke({"certify", "3"});
    CHECK(r.code == cli::exit_ok);
    CHECK(r.out ==
          "{\"schema\":1,\"target\":\"1/3\",\"kind\":\"Z\",\"terms\":[{\"coeff\":\"-1\",\"gen\":\"wedge\"},"
          "{\"coeff\":\"-4\",\"gen\":\"e\"}]}\nCHECK OK 1/3\n");
}

TEST_CASE("verify command") {
    const auto r = invoke({"verify", "--suite", "weight5"});
    CHECK(r.code == cli::exit_ok);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("suite weight5: ") != std::string::npos);
    const auto j = nlohmann::json::parse(invoke({"--output", "json", "verify", "--suite", "codec"}).out);
    CHECK(j["passed"] == true);
}
