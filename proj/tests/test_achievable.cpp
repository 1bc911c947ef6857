#include "doctest.h"

#include <random>

#include "rdlp/achievable.hpp"
#include "rdlp/instances.hpp"

using namespace rdlp;
using namespace rdlp::achievable;

namespace {

std::vector<std::vector<double>> random_kernel(std::mt19937& rng, std::size_t rows, int out)
{
    std::uniform_real_distribution<double> u(0.05, 1.0);
    std::vector<std::vector<double>> k(rows, std::vector<double>(out));
    for (auto& row : k) {
        double total = 0;
        for (auto& p : row) {
            p = u(rng);
            total += p;
        }
        for (auto& p : row) p /= total;
    }
    return k;
}

std::vector<double> random_dist(std::mt19937& rng, int n)
{
    auto k = random_kernel(rng, 1, n);
    return k[0];
}

// m = 1 instance: X with side information Y1 = channel(X), Hamming at max
// distortion so schedules are always feasible.
ProblemInstance one_decoder(std::mt19937& rng, int nx, int ny)
{
    pmf::JointPmf base = pmf::JointPmf::independent({{"X", nx}}, {random_dist(rng, nx)})
                             .attach_channel({"Y1", ny}, {"X"}, random_kernel(rng, nx, ny));
    ProblemInstance inst;
    inst.joint = std::move(base);
    inst.source = {"X"};
    DecoderSpec dec;
    dec.side_info = {"Y1"};
    dec.distortion = Distortion::from_table(instances::hamming_table(nx));
    dec.target = {1.0};
    inst.decoders.push_back(std::move(dec));
    return inst;
}

MessageSchedule single_message(std::mt19937& rng, int nx, int nu)
{
    Message msg;
    msg.subset = 1u;
    msg.discrete = DiscreteChannel{{"U", nu}, {"X"}, random_kernel(rng, nx, nu)};
    return {{msg}};
}

// Random two-decoder instance with U1 and U2 conditionally independent given
// (X, U12) by construction.
struct TwoDecoder {
    ProblemInstance inst;
    MessageSchedule sched;
};

TwoDecoder random_two_decoder(std::mt19937& rng)
{
    int nx = 2 + int(rng() % 2);
    pmf::JointPmf base = pmf::JointPmf::independent({{"X", nx}}, {random_dist(rng, nx)})
                             .attach_channel({"Y1", 2}, {"X"}, random_kernel(rng, nx, 2))
                             .attach_channel({"Y2", 2}, {"X"}, random_kernel(rng, nx, 2));
    TwoDecoder out;
    out.inst.joint = std::move(base);
    out.inst.source = {"X"};
    for (const char* y : {"Y1", "Y2"}) {
        DecoderSpec dec;
        dec.side_info = {y};
        dec.distortion = Distortion::from_table(instances::hamming_table(nx));
        dec.target = {1.0};
        out.inst.decoders.push_back(std::move(dec));
    }
    int n12 = 2, n1 = 2, n2 = 2;
    Message m12, m1, m2;
    m12.subset = 3u;
    m12.discrete = DiscreteChannel{{"U12", n12}, {"X"}, random_kernel(rng, nx, n12)};
    m1.subset = 1u;
    m1.discrete = DiscreteChannel{{"U1", n1}, {"X", "U12"}, random_kernel(rng, nx * n12, n1)};
    m2.subset = 2u;
    m2.discrete = DiscreteChannel{{"U2", n2}, {"X", "U12"}, random_kernel(rng, nx * n12, n2)};
    out.sched.order = {m12, m1, m2};
    return out;
}

}  // namespace

TEST_CASE("schedule validity: perfect messages and degenerate messages")
{
    // U = X at D = 0 is valid.
    pmf::JointPmf base = pmf::JointPmf::fair_bits({"X"}).attach_channel(
        {"Y1", 2}, {"X"}, {{0.5, 0.5}, {0.5, 0.5}});
    ProblemInstance inst;
    inst.joint = base;
    inst.source = {"X"};
    DecoderSpec dec;
    dec.side_info = {"Y1"};
    dec.distortion = Distortion::from_table(instances::hamming_table(2));
    dec.target = {0.0};
    inst.decoders.push_back(dec);

    MessageSchedule perfect;
    Message msg;
    msg.subset = 1u;
    msg.discrete = DiscreteChannel{{"U", 2}, {"X"}, {{1.0, 0.0}, {0.0, 1.0}}};
    perfect.order = {msg};
    CHECK(check_schedule_validity(inst, perfect).empty());

    // All-degenerate schedule cannot hit D = 0 when Y is useless.
    MessageSchedule empty;
    Message degen;
    degen.subset = 1u;
    empty.order = {degen};
    auto violations = check_schedule_validity(inst, empty);
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].find("decoder 1") != std::string::npos);
}

TEST_CASE("odd-cycle gaussian schedule is valid with MSE exactly D")
{
    instances::OddCycleSpec spec{5, instances::OddCycleSpec::Flavor::Gaussian, 0.25};
    auto build = instances::odd_cycle_instance(spec);
    CHECK(check_schedule_validity(build.problem, build.schedule).empty());
    // Tightening any target below D breaks it.
    auto tight = build;
    tight.problem.decoders[2].target[2] = 0.24;
    CHECK(!check_schedule_validity(tight.problem, tight.schedule).empty());
}

TEST_CASE("m=1 LP reduces to I(X;U|Y1)")
{
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        int nx = 2 + trial % 2, nu = 2 + trial % 3;
        ProblemInstance inst = one_decoder(rng, nx, 2 + trial % 3);
        MessageSchedule sched = single_message(rng, nx, nu);
        lp::LinearProgram prog = build_achievable_lp(inst, sched);
        lp::LpSolution sol = lp::solve(prog, lp::Mode::Float);
        REQUIRE(sol.status == lp::SolveStatus::Optimal);
        ExtendedModel model(inst, sched);
        double expect = model.mi({"X"}, {"U"}, {"Y1"});
        CHECK(sol.value == doctest::Approx(expect).epsilon(1e-9));
    }
}

TEST_CASE("odd-cycle binary achievable LP is exactly m/2")
{
    instances::OddCycleSpec spec{5, instances::OddCycleSpec::Flavor::BinaryIndex, 0};
    auto build = instances::odd_cycle_instance(spec);
    lp::LinearProgram prog = build_achievable_lp(build.problem, build.schedule,
                                                 lp::Mode::Rational);
    lp::LpSolution sol = lp::solve(prog, lp::Mode::Rational);
    REQUIRE(sol.status == lp::SolveStatus::Optimal);
    CHECK(sol.value_exact == Rational(5, 2));
}

TEST_CASE("odd-cycle gaussian achievable LP hits (m/4) log2(1/D)")
{
    for (double d : {0.1, 0.25, 0.5}) {
        instances::OddCycleSpec spec{5, instances::OddCycleSpec::Flavor::Gaussian, d};
        auto build = instances::odd_cycle_instance(spec);
        lp::LinearProgram prog = build_achievable_lp(build.problem, build.schedule);
        lp::LpSolution sol = lp::solve(prog, lp::Mode::Float);
        REQUIRE(sol.status == lp::SolveStatus::Optimal);
        CHECK(sol.value == doctest::Approx(1.25 * std::log2(1 / d)).epsilon(1e-9));
    }
}

TEST_CASE("degenerate messages are pruned without changing the optimum")
{
    std::mt19937 rng(7);
    TwoDecoder td = random_two_decoder(rng);
    MessageSchedule two;
    two.order = {td.sched.order[0], td.sched.order[1]};
    lp::LpSolution two_sol = lp::solve(build_achievable_lp(td.inst, two), lp::Mode::Float);
    MessageSchedule with_degen = two;
    Message degen;
    degen.subset = 2u;
    with_degen.order.push_back(degen);
    lp::LpSolution degen_sol =
        lp::solve(build_achievable_lp(td.inst, with_degen), lp::Mode::Float);
    CHECK(degen_sol.value == doctest::Approx(two_sol.value).epsilon(1e-12));
}

TEST_CASE("solve_upper_bound picks the better schedule")
{
    std::mt19937 rng(99);
    ProblemInstance inst = one_decoder(rng, 2, 2);
    Message good;
    good.subset = 1u;
    good.discrete = DiscreteChannel{{"U", 2}, {"X"}, {{0.95, 0.05}, {0.05, 0.95}}};
    Message junk;
    junk.subset = 1u;
    junk.discrete = DiscreteChannel{{"U", 2}, {"X"}, {{0.5, 0.5}, {0.5, 0.5}}};
    MessageSchedule sg{{good}}, sj{{junk}};
    UpperBoundResult only = solve_upper_bound(inst, {sg});
    lp::LpSolution direct = lp::solve(build_achievable_lp(inst, sg), lp::Mode::Float);
    CHECK(only.value == doctest::Approx(direct.value));
    UpperBoundResult both = solve_upper_bound(inst, {sg, sj});
    CHECK(both.best_schedule == 1);  // the useless message costs zero rate
    CHECK(both.value == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("solve_upper_bound errors when every schedule is invalid")
{
    // Tight target that no degenerate schedule can meet.
    pmf::JointPmf base = pmf::JointPmf::fair_bits({"X", "Y1"});
    ProblemInstance inst;
    inst.joint = base;
    inst.source = {"X"};
    DecoderSpec dec;
    dec.side_info = {"Y1"};
    dec.distortion = Distortion::from_table(instances::hamming_table(2));
    dec.target = {0.0};
    inst.decoders.push_back(dec);
    Message degen;
    degen.subset = 1u;
    MessageSchedule bad{{degen}};
    CHECK_THROWS_AS(solve_upper_bound(inst, {bad, bad}), Error);
    CHECK_THROWS_AS(solve_upper_bound(inst, {}), Error);
}

TEST_CASE("ordering enumeration caps at eight messages")
{
    instances::OddCycleSpec spec{9, instances::OddCycleSpec::Flavor::BinaryIndex, 0};
    auto build = instances::odd_cycle_instance(spec);
    CHECK_THROWS_AS(enumerate_orderings(build.schedule), Error);
    instances::OddCycleSpec small{5, instances::OddCycleSpec::Flavor::BinaryIndex, 0};
    auto build5 = instances::odd_cycle_instance(small);
    CHECK(enumerate_orderings(build5.schedule).size() == 120);
}

TEST_CASE("convexify")
{
    ConvexEnvelope one = convexify({{{0.5}, 2.0}});
    CHECK(one.query({0.5}).value() == doctest::Approx(2.0));
    CHECK(!one.query({0.4}).has_value());

    ConvexEnvelope line = convexify({{{0.0}, 4.0}, {{0.5}, 2.0}, {{1.0}, 0.0}});
    CHECK(line.query({0.5}).value() == doctest::Approx(2.0));
    CHECK(line.query({0.25}).value() == doctest::Approx(3.0));

    ConvexEnvelope seg = convexify({{{0.25}, 2.5}, {{1.0}, 0.0}});
    CHECK(seg.query({0.625}).value() == doctest::Approx(1.25));

    CHECK_THROWS_AS(convexify({}), Error);
}

TEST_CASE("two-decoder expression basics")
{
    std::mt19937 rng(5);
    // U12 = X with side information independent of X: the expression is H(X).
    pmf::JointPmf base = pmf::JointPmf::fair_bits({"X", "Y1", "Y2"});
    ProblemInstance inst;
    inst.joint = base;
    inst.source = {"X"};
    for (const char* y : {"Y1", "Y2"}) {
        DecoderSpec dec;
        dec.side_info = {y};
        dec.distortion = Distortion::from_table(instances::hamming_table(2));
        dec.target = {1.0};
        inst.decoders.push_back(dec);
    }
    Message m12, m1, m2;
    m12.subset = 3u;
    m12.discrete = DiscreteChannel{{"U12", 2}, {"X"}, {{1.0, 0.0}, {0.0, 1.0}}};
    m1.subset = 1u;
    m2.subset = 2u;
    MessageSchedule sched{{m12, m1, m2}};
    CHECK(sequential_two_decoder(inst, sched) == doctest::Approx(1.0));

    Message d12;
    d12.subset = 3u;
    MessageSchedule all_degenerate{{d12, m1, m2}};
    CHECK(sequential_two_decoder(inst, all_degenerate) == doctest::Approx(0.0));

    ProblemInstance wrong = one_decoder(rng, 2, 2);
    CHECK_THROWS_AS(sequential_two_decoder(wrong, sched), Error);
}

TEST_CASE("LP never exceeds the sequential two-decoder expression")
{
    std::mt19937 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        TwoDecoder td = random_two_decoder(rng);
        double expr = sequential_two_decoder(td.inst, td.sched);
        lp::LpSolution sol = lp::solve(build_achievable_lp(td.inst, td.sched), lp::Mode::Float);
        REQUIRE(sol.status == lp::SolveStatus::Optimal);
        CHECK(sol.value <= expr + 1e-9);
    }
}

TEST_CASE("gaussian odd-cycle value is monotone in D")
{
    double prev = std::numeric_limits<double>::infinity();
    for (double d : {0.1, 0.2, 0.4, 0.6, 0.8}) {
        instances::OddCycleSpec spec{5, instances::OddCycleSpec::Flavor::Gaussian, d};
        auto build = instances::odd_cycle_instance(spec);
        lp::LpSolution sol = lp::solve(build_achievable_lp(build.problem, build.schedule),
                                       lp::Mode::Float);
        CHECK(sol.value <= prev + 1e-9);
        prev = sol.value;
    }
}
