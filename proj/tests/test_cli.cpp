/*
   Copyright 2026 The omegapi Authors

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

#include <gtest/gtest.h>

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "cli.hpp"

namespace omegapi {
namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

class TempFile {
public:
    explicit TempFile(const std::string& content) {
        static int counter = 0;
        path_ = (std::filesystem::temp_directory_path() /
                 ("omegapi_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) + ".json"))
                    .string();
        std::ofstream(path_) << content;
    }
    ~TempFile() { std::remove(path_.c_str()); }
    const std::string& path() const { return path_; }

private:
    std::string path_;
};

TEST(Codim, KC2Example) {
    Outcome r = run({"codim", "--builtin", "kc2-hopf", "-m", "3", "-n", "2"});
    EXPECT_EQ(r.code, cli::kPass);
    EXPECT_EQ(first_line(r.out), "22");
    EXPECT_NE(r.out.find("stable"), std::string::npos);
}

TEST(Codim, VectorSpaceAndSigma) {
    Outcome vs = run({"codim", "--builtin", "vector-space", "--dim", "2", "-m", "4", "-n", "4"});
    EXPECT_EQ(vs.code, cli::kPass);
    EXPECT_EQ(first_line(vs.out), "14");
    Outcome yd = run({"codim", "--builtin", "yd-kc2-sigma", "-m", "2", "-n", "3"});
    EXPECT_EQ(yd.code, cli::kPass);
    EXPECT_EQ(first_line(yd.out), "0");
}

TEST(Codim, JsonAndCsvFormats) {
    Outcome j = run({"codim", "--builtin", "kc2-hopf", "-m", "2", "-n", "2", "--format", "json"});
    ASSERT_EQ(j.code, cli::kPass);
    auto doc = nlohmann::json::parse(j.out);
    EXPECT_EQ(doc.at("value").get<int>(), 10);
    EXPECT_TRUE(doc.at("stable").get<bool>());
    Outcome c = run({"codim", "--builtin", "kc2-hopf", "-m", "2", "-n", "2", "--format", "csv"});
    EXPECT_EQ(first_line(c.out), "m,n,K,value,rank_next,stable");
}

TEST(Codim, BoundBelowObjectIsUsageError) {
    EXPECT_EQ(run({"codim", "--builtin", "kc2-hopf", "-m", "3", "-n", "2", "-K", "2"}).code, cli::kUsage);
}

TEST(Codim, ResourceCapIsReported) {
    Outcome r = run({"codim", "--builtin", "kc2-hopf", "-m", "3", "-n", "3", "--max-entries", "10"});
    EXPECT_EQ(r.code, cli::kUsage);
    EXPECT_NE(r.err.find("resource limit"), std::string::npos);
}

TEST(Table, DeterministicAcrossRunsAndThreads) {
    std::vector<std::string> args{"table", "--builtin", "kc2-hopf", "--max-m", "2", "--max-n", "2", "--format",
                                  "json"};
    Outcome a = run(args);
    Outcome b = run(args);
    args.insert(args.end(), {"--threads", "3"});
    Outcome c = run(args);
    ASSERT_EQ(a.code, cli::kPass);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.out, c.out);
    auto cells = nlohmann::json::parse(a.out);
    EXPECT_EQ(cells.size(), 9u);
    for (const auto& cell : cells) {
        const int m = cell.at("m").get<int>(), n = cell.at("n").get<int>();
        EXPECT_EQ(cell.at("value").get<int>(), (1 << (m + n)) - (1 << m) - (1 << n) + 2);
    }
}

TEST(Validate, BuiltinsPass) {
    Outcome r = run({"validate", "--builtin", "kc2-hopf", "--relations", "v-hopf"});
    EXPECT_EQ(r.code, cli::kPass);
    EXPECT_NE(r.out.find("13/13 relations passed"), std::string::npos);
    EXPECT_EQ(run({"validate", "--builtin", "yd-kc2-braided", "--relations", "v3(2)"}).code, cli::kPass);
}

TEST(Validate, FailingRelationGivesWitness) {
    Outcome r = run({"validate", "--builtin", "group-hopf", "--group", "s3", "--relations", "v-commcochopf"});
    EXPECT_EQ(r.code, cli::kFail);
    EXPECT_NE(r.out.find("FAIL"), std::string::npos);
    EXPECT_NE(r.out.find("at input"), std::string::npos);
}

TEST(Validate, NonYangBaxterFileShowsResidual) {
    TempFile f(R"({"dim": 2, "braiding": {"matrix": [[1,1,0,0],[0,0,1,0],[0,1,0,0],[0,0,0,1]]},
                   "generators": []})");
    Outcome r = run({"validate", "--algebra", f.path()});
    EXPECT_EQ(r.code, cli::kFail);
    EXPECT_NE(r.out.find("Yang-Baxter fails"), std::string::npos);
    EXPECT_NE(r.out.find("residual"), std::string::npos);
    Outcome j = run({"validate", "--algebra", f.path(), "--format", "json"});
    auto doc = nlohmann::json::parse(j.out);
    EXPECT_FALSE(doc.at("braiding").at("yang_baxter").get<bool>());
    EXPECT_TRUE(doc.at("braiding").contains("residual"));
}

TEST(Validate, BadFilesAreUsageErrors) {
    TempFile broken("{ not json");
    EXPECT_EQ(run({"validate", "--algebra", broken.path()}).code, cli::kUsage);
    EXPECT_EQ(run({"validate", "--algebra", "/nonexistent/alg.json"}).code, cli::kUsage);
}

TEST(Check, IdentityAndNonIdentity) {
    EXPECT_EQ(run({"check", "--builtin", "kc2-hopf", "--poly", "mu - mu . tau(1,1)"}).code, cli::kPass);
    Outcome r = run({"check", "--builtin", "group-hopf", "--group", "s3", "--poly", "mu - mu . tau(1,1)"});
    EXPECT_EQ(r.code, cli::kFail);
    EXPECT_NE(r.out.find("not an identity"), std::string::npos);
    EXPECT_EQ(run({"check", "--builtin", "kc2-hopf", "--poly", "mu"}).code, cli::kFail);
}

TEST(Eval, MatrixOutput) {
    Outcome r = run({"eval", "--builtin", "kc2-hopf", "--term", "S", "--format", "json"});
    ASSERT_EQ(r.code, cli::kPass);
    auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc.at("rows").get<int>(), 2);
    EXPECT_EQ(doc.at("entries")[0][0].get<std::string>(), "1");
    EXPECT_EQ(doc.at("entries")[0][1].get<std::string>(), "0");
    Outcome csv = run({"eval", "--builtin", "vector-space", "--dim", "2", "--term", "tau(1,1)", "--format", "csv"});
    EXPECT_EQ(csv.out, "1,0,0,0\n0,0,1,0\n0,1,0,0\n0,0,0,1\n");
}

TEST(Identities, Commutativity) {
    Outcome r = run({"identities", "--builtin", "kc2-hopf", "--terms", "mu; mu . tau(1,1)", "--format", "json"});
    ASSERT_EQ(r.code, cli::kPass);
    auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc.at("dimension").get<int>(), 1);
    EXPECT_EQ(run({"identities", "--builtin", "kc2-hopf", "--terms", "mu; Delta"}).code, cli::kUsage);
}

TEST(NormalForm, WorkedExamplesRoundTrip) {
    Outcome f = run({"normal-form", "phi", "-m", "5", "--words", "x1*x2*x1^-1, x5*x2^-1*x1^2"});
    EXPECT_EQ(f.code, cli::kPass);
    EXPECT_NE(f.out.find("round-trip: pass"), std::string::npos);
    Outcome a = run({"normal-form", "psi", "-m", "5", "--words", "x1^-2*x2^3, x1^2*x2^-1*x5"});
    EXPECT_EQ(a.code, cli::kPass);
    Outcome one = run({"normal-form", "phi", "-m", "1", "--words", "x1"});
    EXPECT_EQ(first_line(one.out), "id(1)");
    Outcome j = run({"normal-form", "psi", "-m", "2", "--words", "x2*x1", "--format", "json"});
    EXPECT_TRUE(nlohmann::json::parse(j.out).at("round_trip").get<bool>());
}

TEST(NormalForm, WordOutOfRangeIsUsageError) {
    EXPECT_EQ(run({"normal-form", "phi", "-m", "1", "--words", "x2"}).code, cli::kUsage);
}

TEST(Usage, BadInvocations) {
    EXPECT_EQ(run({}).code, cli::kUsage);
    EXPECT_EQ(run({"frobnicate"}).code, cli::kUsage);
    EXPECT_EQ(run({"codim", "--builtin", "nope", "-m", "1", "-n", "1"}).code, cli::kUsage);
    EXPECT_EQ(run({"codim", "--builtin", "kc2-hopf", "-m", "1"}).code, cli::kUsage);
    EXPECT_EQ(run({"check", "--builtin", "kc2-hopf", "--poly", "mu . (mu # id(1)"}).code, cli::kUsage);
    EXPECT_EQ(run({"eval", "--builtin", "kc2-hopf", "--algebra", "x.json", "--term", "mu"}).code, cli::kUsage);
    EXPECT_EQ(run({"codim", "--builtin", "kc2-hopf", "-m", "1", "-n", "1", "--format", "xml"}).code, cli::kUsage);
}

TEST(Usage, HelpExitsCleanly) {
    Outcome r = run({"--help"});
    EXPECT_EQ(r.code, cli::kPass);
    EXPECT_NE(r.out.find("codim"), std::string::npos);
}

TEST(Builtin, ListMentionsEveryAlgebra) {
    Outcome r = run({"builtin", "list"});
    EXPECT_EQ(r.code, cli::kPass);
    for (const char* name : {"kc2-hopf", "group-hopf", "vector-space", "yd-kc2-sigma", "yd-kc2-braided", "v-hopf"})
        EXPECT_NE(r.out.find(name), std::string::npos) << name;
}

}  // namespace
}  // namespace omegapi
