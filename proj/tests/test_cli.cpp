#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ringrank/cli.hpp"

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using ringrank::run_cli;
using Json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

class TempDir {
public:
    TempDir() : path_(fs::temp_directory_path() / ("ringrank-cli-" + std::to_string(std::rand())))
    {
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }

    std::string write(const std::string& name, const std::string& text) const
    {
        const fs::path p = path_ / name;
        std::ofstream(p) << text;
        return p.string();
    }
    std::string file(const std::string& name) const { return (path_ / name).string(); }

private:
    fs::path path_;
};

} // namespace

TEST_CASE("analyze an order")
{
    TempDir dir;
    const auto path =
        dir.write("m2.json", R"({"kind":"order","id":"m2","minpoly":[-2,0,1],"suborder_basis":[[1,0],[0,2]]})");
    const Run r = cli({"analyze", "--deterministic", path});
    CHECK(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["status"] == "ok");
    CHECK(j["ring_id"] == "m2");
    CHECK(j["rank"] == 2);
    CHECK(j["conductor_index"] == "2");
    CHECK_FALSE(j.contains("generated_at"));
    for (const auto& c : j["checks"])
        CHECK(c["pass"] == true);
}

TEST_CASE("analyze a finite ring")
{
    TempDir dir;
    const auto path = dir.write("z8.json", R"({"kind":"finring","divisors":[8],"table":[[[1]]],"one":[1]})");
    const Run r = cli({"analyze", path});
    CHECK(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["length"] == 3);
    CHECK(j["rank"] == 1);
    CHECK(j["ideal_count"] == 4);
    CHECK(j.contains("generated_at"));
}

TEST_CASE("deterministic output is byte-identical")
{
    TempDir dir;
    const auto path = dir.write("p.json", R"({"kind":"construction","name":"pullback","args":["1,0,1","3","7"]})");
    const Run a = cli({"analyze", "--deterministic", path});
    const Run b = cli({"analyze", "--deterministic", path});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(Json::parse(a.out)["rank"] == 2);
}

TEST_CASE("schema and construction errors exit 2")
{
    TempDir dir;
    const Run closed = cli({"analyze", dir.write("bad.json", R"({"kind":"order","minpoly":[-2,0,1],"suborder_basis":[[3,0],[0,1]]})")});
    CHECK(closed.code == 2);
    CHECK(Json::parse(closed.out)["error"]["code"] == "NotClosed");

    const Run monic = cli({"analyze", dir.write("nm.json", R"({"kind":"order","minpoly":[1,0,2]})")});
    CHECK(monic.code == 2);
    CHECK(Json::parse(monic.out)["error"]["code"] == "NotMonic");

    const Run kind = cli({"analyze", dir.write("k.json", R"({"kind":"group"})")});
    CHECK(kind.code == 2);
    CHECK(Json::parse(kind.out)["error"]["code"] == "SchemaError");

    const Run junk = cli({"analyze", dir.write("j.json", "{not json")});
    CHECK(junk.code == 2);

    CHECK(cli({"analyze", dir.file("missing.json")}).code == 2);
    CHECK(cli({"frobnicate"}).code == 2);
    CHECK(cli({}).code == 2);
    CHECK(cli({"construct", "matson", "1"}).code == 2);
    CHECK(cli({"construct", "nonesuch"}).code == 2);
    CHECK(cli({"analyze", "--hilbert-cap", "1", "x.json"}).code == 2);
}

TEST_CASE("computation failures exit 3")
{
    TempDir dir;
    const auto path = dir.write(
        "tt.json", R"({"kind":"order","minpoly":[-2,0,0,1],"suborder_basis":[[1,0,0],[0,2,0],[0,0,4]]})");
    const Run ok = cli({"analyze", "--deterministic", path});
    CHECK(ok.code == 0);
    CHECK(Json::parse(ok.out)["rank"] == 3);

    const Run capped = cli({"analyze", "--hilbert-cap", "3", path});
    CHECK(capped.code == 3);
    CHECK(Json::parse(capped.out)["error"]["code"] == "NoStabilization");
}

TEST_CASE("ring size cap from the environment")
{
    TempDir dir;
    const auto path = dir.file("t.json");
    REQUIRE(cli({"construct", "trunc_poly", "2", "2", "3", "--emit", path}).code == 0);
    ::setenv("RINGRANK_MAX_RING_SIZE", "16", 1);
    const Run r = cli({"analyze", "--deterministic", path});
    ::unsetenv("RINGRANK_MAX_RING_SIZE");
    CHECK(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["rank"].is_null());
    CHECK(j["length"] == 6);

    const Run full = cli({"analyze", "--deterministic", path});
    CHECK(Json::parse(full.out)["rank"] == 2);
}

TEST_CASE("construct round trip")
{
    TempDir dir;
    const Run printed = cli({"construct", "axs", "-2,0,0,1", "6"});
    CHECK(printed.code == 0);
    const Json doc = Json::parse(printed.out);
    CHECK(doc["kind"] == "order");

    const auto path = dir.file("axs.json");
    const Run emitted = cli({"construct", "axs", "-2,0,0,1", "6", "--emit", path});
    CHECK(emitted.code == 0);
    const Run a = cli({"analyze", "--deterministic", path});
    CHECK(a.code == 0);
    const Json j = Json::parse(a.out);
    CHECK(j["rank"] == 3);
    CHECK(j["conductor_index"] == "6");

    const Run via_job =
        cli({"analyze", "--deterministic", dir.write("c.json", R"({"kind":"construction","name":"axs","args":["-2,0,0,1","6"]})")});
    Json lhs = Json::parse(via_job.out), rhs = j;
    lhs.erase("ring_id");
    rhs.erase("ring_id");
    CHECK(lhs == rhs);
}

TEST_CASE("demo")
{
    const Run m = cli({"demo", "--filter", "matson-rank", "--deterministic"});
    CHECK(m.code == 0);
    CHECK(m.out.find("PASS matson-rank-n2") != std::string::npos);
    CHECK(m.out.find("4 checks run, 4 passed, 0 failed") != std::string::npos);
    CHECK(m.out == cli({"demo", "--filter", "matson-rank", "--deterministic"}).out);

    const Run o = cli({"demo", "--filter", "oracle-equivalence/Z/", "--deterministic"});
    CHECK(o.code == 0);
    CHECK(o.out.find("FAIL") == std::string::npos);

    const Run none = cli({"demo", "--filter", "no-such-check"});
    CHECK(none.code == 0);
    CHECK(none.err.find("warning") != std::string::npos);
}
