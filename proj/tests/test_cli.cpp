#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "rdlp/json_io.hpp"

using namespace rdlp;
using nlohmann::json;

namespace {

std::string cli_path()
{
    const char* p = std::getenv("RDLP_CLI_PATH");
    return p ? p : "./tools/rdlp";
}

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args, const std::string& env = "")
{
    std::string cmd = env + " " + cli_path() + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string write_temp(const std::string& name, const std::string& content)
{
    std::string path = "/tmp/rdlp_test_" + name;
    std::ofstream out(path);
    out << content;
    return path;
}

const char* kWynerZiv = R"({
  "kind": "discrete",
  "variables": [{"name": "X", "alphabet": 2}, {"name": "Y1", "alphabet": 2}],
  "pmf": [0.45, 0.05, 0.05, 0.45],
  "source": ["X"],
  "decoders": [{"side_info": ["Y1"], "distortion": {"type": "hamming"}, "target": 1.0}],
  "schedule": [{"subset": [1],
                "channel": {"name": "U", "alphabet": 2, "given": ["X"],
                             "kernel": [[0.9, 0.1], [0.1, 0.9]]}}],
  "auxiliaries": {"common": null,
                   "per_decoder": [{"name": "V1", "alphabet": 2, "given": ["X"],
                                     "kernel": [[0.85, 0.15], [0.15, 0.85]]}]}
})";

const char* kIndexCoding = R"({
  "kind": "index-coding",
  "bits": 5,
  "decoders": [
    {"side": [5, 2], "demand": [1]},
    {"side": [1, 3], "demand": [2]},
    {"side": [2, 4], "demand": [3]},
    {"side": [3, 5], "demand": [4]},
    {"side": [4, 1], "demand": [5]}
  ]
})";

}  // namespace

TEST_CASE("instance parsing and validation")
{
    io::ParsedInstance inst = io::parse_instance(json::parse(kWynerZiv));
    CHECK(inst.kind == io::InstanceKind::Discrete);
    REQUIRE(inst.problem.has_value());
    CHECK(inst.problem->m() == 1);
    REQUIRE(inst.schedule.has_value());
    CHECK(inst.schedule->order.size() == 1);
    REQUIRE(inst.aux.has_value());
    CHECK(inst.aux->common.degenerate());

    io::ParsedInstance idx = io::parse_instance(json::parse(kIndexCoding));
    REQUIRE(idx.index.has_value());
    CHECK(idx.index->bits == 5);
    converse::IndexCodingInstance oc = converse::IndexCodingInstance::odd_cycle(5);
    for (int i = 0; i < 5; ++i) {
        CHECK(idx.index->decoders[i].side == oc.decoders[i].side);
        CHECK(idx.index->decoders[i].demand == oc.decoders[i].demand);
    }

    CHECK_THROWS_AS(io::parse_instance(json::parse(R"({"kind":"nope"})")), Error);
    CHECK_THROWS_AS(io::parse_instance(json::parse(R"({"kind":"discrete"})")), Error);
    CHECK_THROWS_AS(
        io::parse_instance(json::parse(R"({"kind":"odd-cycle","m":4,"flavor":"binary"})")),
        Error);
}

TEST_CASE("result records round-trip through JSON")
{
    io::ResultRecord r;
    r.bound = "achievable-lp";
    r.value = 2.5;
    r.exact = true;
    r.exact_value = Rational(5, 2);
    r.mode = "rational";
    r.eps = 0.001;
    r.fingerprint = "00ff00ff00ff00ff";
    r.stats = {12, 34, 56, true};
    json j = json::parse(io::to_json(r).dump());
    io::ResultRecord back = io::record_from_json(j);
    CHECK(back.bound == r.bound);
    CHECK(back.value == r.value);
    CHECK(back.exact == r.exact);
    CHECK(back.exact_value == r.exact_value);
    CHECK(back.mode == r.mode);
    CHECK(back.eps == r.eps);
    CHECK(back.fingerprint == r.fingerprint);
    CHECK(back.stats.rows == r.stats.rows);
    CHECK(back.stats.cols == r.stats.cols);
    CHECK(back.stats.pivots == r.stats.pivots);
    CHECK(back.stats.via_dual == r.stats.via_dual);
}

TEST_CASE("cli: odd-cycle verification lines")
{
    RunResult r = run_cli("odd-cycle --m 5 --flavor binary");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("upper=5/2 lower=5/2 MATCH") != std::string::npos);

    RunResult g = run_cli("odd-cycle --m 5 --flavor gaussian --D 0.25");
    CHECK(g.exit_code == 0);
    CHECK(g.out.find("upper=2.5 lower=2.5 MATCH bits") != std::string::npos);
}

TEST_CASE("cli: upper bound on a file instance, both orderings modes")
{
    std::string path = write_temp("wz.json", kWynerZiv);
    RunResult r = run_cli("upper --instance " + path + " --json");
    CHECK(r.exit_code == 0);
    json rec = json::parse(r.out);
    CHECK(rec.at("bound") == "achievable-lp");
    // I(X;U|Y1) for this doubly symmetric pair and BSC(0.1) message.
    io::ParsedInstance inst = io::parse_instance(json::parse(kWynerZiv));
    achievable::ExtendedModel model(*inst.problem, *inst.schedule);
    CHECK(rec.at("value").get<double>() ==
          doctest::Approx(model.mi({"X"}, {"U"}, {"Y1"})).epsilon(1e-9));

    RunResult all = run_cli("upper --instance " + path + " --orderings all --json");
    CHECK(all.exit_code == 0);
    CHECK(json::parse(all.out).at("bound") == "achievable-lp-best-order");
}

TEST_CASE("cli: identical runs produce byte-identical output")
{
    std::string path = write_temp("idx.json", kIndexCoding);
    RunResult a = run_cli("lower-index --instance " + path + " --json");
    RunResult b = run_cli("lower-index --instance " + path + " --json");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    // Two records, both 5/2; each round-trips through the record type and
    // re-serializes to the identical line.
    std::istringstream lines(a.out);
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) {
        json rec = json::parse(line);
        CHECK(rec.at("rational").at("num") == "5");
        CHECK(rec.at("rational").at("den") == "2");
        io::ResultRecord back = io::record_from_json(rec);
        CHECK(io::to_json(back).dump() == line);
        ++count;
    }
    CHECK(count == 2);
}

TEST_CASE("cli: lower-general and minimax")
{
    std::string oc =
        write_temp("oc.json", R"({"kind":"odd-cycle","m":5,"flavor":"gaussian","D":0.25})");
    RunResult r = run_cli("lower-general --instance " + oc + " --eps 1e-4 --json");
    CHECK(r.exit_code == 0);
    json rec = json::parse(r.out);
    double expect = 1.25 * std::log2(1.0 / 0.2501) - 1e-4;
    CHECK(rec.at("value").get<double>() == doctest::Approx(expect).epsilon(1e-6));

    RunResult mm = run_cli("minimax --instance " + oc + " --eps 1e-4 --json");
    CHECK(mm.exit_code == 0);
    json mrec = json::parse(mm.out);
    CHECK(mrec.at("value").get<double>() ==
          doctest::Approx(std::log2(1.0 / 0.2501) - 1e-4).epsilon(1e-6));

    std::string wz = write_temp("wz2.json", kWynerZiv);
    RunResult dm = run_cli("minimax --instance " + wz + " --json");
    CHECK(dm.exit_code == 0);
}

TEST_CASE("cli: dump-lp emits the documented plain-text format")
{
    std::string path = write_temp("idx2.json", kIndexCoding);
    RunResult r = run_cli("dump-lp --instance " + path + " --which relaxed");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("minimize: 1 K{}") != std::string::npos);
    CHECK(r.out.find(">=") != std::string::npos);

    std::string oc = write_temp("oc2.json", R"({"kind":"odd-cycle","m":5,"flavor":"binary"})");
    RunResult a = run_cli("dump-lp --instance " + oc + " --which achievable");
    CHECK(a.exit_code == 0);
    CHECK(a.out.find("rate{1,2}: 1 R{1,2} + 1 R'{1,2} >= 2") != std::string::npos);
}

TEST_CASE("cli: error paths use the documented exit codes")
{
    RunResult unknown = run_cli("no-such-command");
    CHECK(unknown.exit_code == 2);
    RunResult badflag = run_cli("odd-cycle --m 5 --flavor binary --bogus");
    CHECK(badflag.exit_code == 2);
    std::string bad = write_temp("bad.json", R"({"kind":"discrete"})");
    RunResult missing = run_cli("upper --instance " + bad);
    CHECK(missing.exit_code == 2);
    CHECK(missing.out.find("missing") != std::string::npos);
    std::string notjson = write_temp("notjson.json", "{nope");
    RunResult nj = run_cli("upper --instance " + notjson);
    CHECK(nj.exit_code == 2);
    RunResult nofile = run_cli("upper --instance /tmp/definitely_missing_rdlp.json");
    CHECK(nofile.exit_code == 2);
}

TEST_CASE("cli: RDLP_MODE env selects the default arithmetic")
{
    std::string oc = write_temp("oc3.json", R"({"kind":"odd-cycle","m":5,"flavor":"binary"})");
    RunResult r = run_cli("upper --instance " + oc + " --json", "RDLP_MODE=float");
    CHECK(r.exit_code == 0);
    CHECK(json::parse(r.out).at("mode") == "float");
    RunResult q = run_cli("upper --instance " + oc + " --json", "RDLP_MODE=rational");
    CHECK(q.exit_code == 0);
    json rec = json::parse(q.out);
    CHECK(rec.at("mode") == "rational");
    CHECK(rec.at("rational").at("num") == "5");
}
