#include <fstream>
#include <sstream>

#include "doctest.h"
#include "hallq/cli.hpp"
#include "hallq/render.hpp"

using namespace hallq;

namespace {

std::string run_cli(std::vector<std::string> args, int expect_code = 0) {
    std::ostringstream out, err;
    int code = cli::run(std::move(args), out, err);
    CHECK(code == expect_code);
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const std::string kGolden = HALLQ_GOLDEN_DIR;

}  // namespace

TEST_CASE("representation text forms") {
    Quiver q = quiver_preset("a2");
    Ring R({2, 2});
    FreeRep s1 = simple_rep(q, R, 0);
    CHECK(rep_str(R, s1) == "(1,0) []");
    FreeRep s2 = simple_rep(q, R, 1);
    CHECK(rep_str(R, s2) == "(0,1) [[]]");
    FreeRep m = zero_rep(q, R, {1, 1});
    m.maps[0].at(0, 0) = R.t_pow(1);
    CHECK(rep_str(R, m) == "(1,1) [[t]]");
}

TEST_CASE("hall element json round-trips") {
    Context ctx(quiver_preset("a2"), RingParams{2, 2});
    for (const std::vector<int>& word :
         {std::vector<int>{0, 1}, {0, 1, 0}, {1, 0, 0}, std::vector<int>{}}) {
        HallElement elem = ctx.word_product(word);
        nlohmann::json j = hall_element_json(ctx.ring(), elem);
        // through a serialization boundary
        nlohmann::json parsed = nlohmann::json::parse(j.dump());
        CHECK(hall_element_from_json(ctx.quiver(), ctx.ring(), parsed) == elem);
    }
    Ring other({3, 2});
    nlohmann::json j = hall_element_json(ctx.ring(), ctx.unit());
    CHECK_THROWS_AS(hall_element_from_json(ctx.quiver(), other, j), std::invalid_argument);
}

TEST_CASE("rep json round-trips") {
    Quiver q = quiver_preset("a3");
    Ring R({2, 3});
    FreeRep rep = zero_rep(q, R, {2, 1, 1});
    rep.maps[0].at(0, 0) = R.t_pow(2);
    rep.maps[0].at(0, 1) = R.from_coeffs({1, 1});
    rep.maps[1].at(0, 0) = R.one();
    CHECK(rep_from_json(q, R, rep_json(R, rep)) == rep);
}

TEST_CASE("cli output matches the golden files") {
    struct Case {
        const char* name;
        std::vector<std::string> args;
    };
    const std::vector<Case> cases = {
        {"classify", {"classify", "--dim", "1,1", "--q", "2", "--n", "2"}},
        {"product", {"product", "--word", "1,2", "--q", "2", "--n", "2"}},
        {"delta-check", {"delta-check", "--q", "2", "--n", "3"}},
        {"serre", {"serre", "--i", "1", "--j", "2", "--q", "2", "--n", "2"}},
        {"commute",
         {"commute", "--quiver", "two-points", "--i", "1", "--j", "2", "--q", "2", "--n", "2"}},
        {"geom",
         {"geom", "--flag", "1:1,2:1", "--n", "2", "--tdim", "1,0", "--wdim", "0,1"}},
        {"grassmann", {"grassmann", "--s", "1", "--l", "2", "--q", "2", "--n", "2"}},
        {"interpolate", {"interpolate", "--word", "1,2", "--q", "2,3,5,7", "--n", "2"}},
    };
    for (const Case& c : cases) {
        CAPTURE(c.name);
        CHECK(run_cli(c.args) == read_file(kGolden + "/" + c.name + ".txt"));
        std::vector<std::string> jargs = c.args;
        jargs.push_back("--format");
        jargs.push_back("json");
        CHECK(run_cli(jargs) == read_file(kGolden + "/" + c.name + ".json"));
    }
}

TEST_CASE("cli output is byte-deterministic across runs") {
    std::vector<std::string> args{"product", "--word", "1,2,1", "--q", "3", "--n", "2",
                                  "--format", "json"};
    CHECK(run_cli(args) == run_cli(args));
}

TEST_CASE("cli config file equals flags") {
    std::string path = "hallq_test_config.json";
    {
        std::ofstream out(path);
        out << R"({"quiver":"a2","q":2,"n":3,"twist":"half","format":"text"})";
    }
    CHECK(run_cli({"delta-check", "--config", path}) ==
          run_cli({"delta-check", "--q", "2", "--n", "3"}));
    std::remove(path.c_str());
}

TEST_CASE("cli error exit codes") {
    std::ostringstream out, err;
    CHECK(cli::run({"product", "--word", "1,2", "--q", "4", "--n", "2"}, out, err) == 2);
    CHECK(cli::run({"classify", "--dim", "2,2", "--q", "3", "--n", "2", "--budget", "1000"},
                   out, err) == 3);
    // q^2 + q cannot be fitted at degree 0: held-out validation fails
    CHECK(cli::run({"interpolate", "--word", "1,1", "--q", "2,3"}, out, err) == 4);
    CHECK(cli::run({"bogus"}, out, err) == 2);
    CHECK(cli::run({"product", "--word", "7,1", "--q", "2"}, out, err) == 2);
}

TEST_CASE("empty word product is the unit") {
    std::string text = run_cli({"product", "--q", "2", "--n", "2"});
    CHECK(text.find("(0,0)") != std::string::npos);
    CHECK(text.find("(1, 0)") != std::string::npos);
}

TEST_CASE("accept subcommand json golden") {
    std::vector<std::string> args{"accept", "--format", "json"};
    CHECK(run_cli(args) == read_file(kGolden + "/accept.json"));
}
