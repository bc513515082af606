/*
   Copyright 2026 The blowup authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <doctest.h>

#include <sstream>

#include "blowup/cli.hpp"
#include "blowup/serialize.hpp"

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = blowup::cli::run(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

TEST_CASE("table text") {
    const auto r = run({"table", "--kind", "b", "--max", "4", "--format", "text"});
    CHECK(r.code == 0);
    CHECK(ends_with(r.out, "B_4 = -2\n"));
    for (const char* p : {"ode", "quad", "sigma", "all"})
        CHECK(run({"table", "--kind", "b", "--max", "4", "--format", "text", "--pipeline", p}).out == r.out);
}

TEST_CASE("table json") {
    const auto r = run({"table", "--kind", "s", "--max", "3", "--format", "json"});
    CHECK(r.code == 0);
    const auto recs = blowup::records_from_json(r.out);
    REQUIRE(recs.size() == 4);
    CHECK(recs[3].kind == "S");
    CHECK(recs[3].k == 3);
    REQUIRE(recs[3].coefficients.size() == 1);
    CHECK(recs[3].coefficients[0].first == 1);
    CHECK(recs[3].coefficients[0].second.to_string() == "-1");
    CHECK(blowup::to_json(recs) == r.out);
    CHECK(run({"table", "--kind", "s", "--max", "3", "--format", "json", "--pipeline", "sqrt"}).code == 0);
}

TEST_CASE("table csv") {
    const auto r = run({"table", "--kind", "b", "--max", "12", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\n12,0,-408\n") != std::string::npos);
    CHECK(r.out.find("\n12,2,-960\n") != std::string::npos);
    CHECK(ends_with(r.out, "\n12,4,-512\n"));
}

TEST_CASE("byte determinism") {
    const std::vector<std::string> args{"table", "--kind", "b", "--max", "20", "--format", "json", "--approx"};
    CHECK(run(args).out == run(args).out);
}

TEST_CASE("reduce") {
    CHECK(run({"reduce", "--exponents", "4", "--twisted", "0"}).out == "-2\n");
    CHECK(run({"reduce", "--exponents", "3,1", "--twisted", "1,1"}).out == "-x\n");
    CHECK(run({"reduce", "--exponents", "2", "--twisted", "0"}).out == "0\n");
    CHECK(run({"reduce", "--exponents", "12", "--twisted", "0", "--simple-type"}).out ==
          "-512*x^4 - 960*x^2 - 408\nx=2: -12440\n");
    const auto j = run({"reduce", "--exponents", "2,5", "--twisted", "0,0", "--format", "json"});
    CHECK(j.out.find("\"vanishes\": true") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run({"reduce", "--exponents", "3,x", "--twisted", "1,1"}).code == 2);
    CHECK(run({"reduce", "--exponents", "3,1", "--twisted", "1"}).code == 2);
    CHECK(run({"reduce", "--exponents", "3", "--twisted", "2"}).code == 2);
    CHECK(run({"table", "--kind", "q"}).code == 2);
    CHECK(run({"table", "--kind", "b", "--max", "-1"}).code == 2);
    CHECK(run({"table", "--kind", "b", "--pipeline", "sqrt"}).code == 2);
    CHECK(run({"table", "--kind", "s", "--pipeline", "ode"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("verify") {
    const auto ok = run({"verify", "--max", "30"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("[PASS] B_30 matches printed value") != std::string::npos);
    CHECK(ok.out.find("[FAIL]") == std::string::npos);
    CHECK(run({"verify", "--max", "0"}).code == 0);

    const auto bad = run({"verify", "--max", "8", "--inject-fault", "pe-c2"});
    CHECK(bad.code == 1);
    CHECK(bad.out.find("[FAIL] p-ODE residual") != std::string::npos);
}
