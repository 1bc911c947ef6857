#include "doctest.h"

#include "rdlp/instances.hpp"

using namespace rdlp;
using namespace rdlp::instances;

TEST_CASE("odd-cycle construction details")
{
    OddCycleSpec spec{5, OddCycleSpec::Flavor::BinaryIndex, 0};
    OddCycleBuild b = odd_cycle_instance(spec);
    CHECK(b.problem.m() == 5);
    CHECK(b.schedule.order.size() == 31);  // every nonempty subset appears
    int live = 0;
    for (const auto& m : b.schedule.order)
        if (!m.degenerate()) ++live;
    CHECK(live == 5);

    OddCycleSpec gs{5, OddCycleSpec::Flavor::Gaussian, 0.25};
    OddCycleBuild g = odd_cycle_instance(gs);
    // Noise variance 2D/(1-D) = 2/3 at D = 1/4.
    const auto& msg = g.schedule.order[0];
    REQUIRE(msg.gaussian.has_value());
    CHECK(msg.gaussian->noise_cov.at(0, 0) == doctest::Approx(2.0 / 3.0));

    OddCycleSpec seven{7, OddCycleSpec::Flavor::BinaryIndex, 0};
    OddCycleBuild b7 = odd_cycle_instance(seven);
    live = 0;
    for (const auto& m : b7.schedule.order)
        if (!m.degenerate()) ++live;
    CHECK(live == 7);

    CHECK_THROWS_AS(odd_cycle_instance({4, OddCycleSpec::Flavor::BinaryIndex, 0}), Error);
    CHECK_THROWS_AS(odd_cycle_instance({5, OddCycleSpec::Flavor::Gaussian, 1.5}), Error);
}

TEST_CASE("odd-cycle converse lattice structure")
{
    OddCycleSpec spec{5, OddCycleSpec::Flavor::Gaussian, 0.25};
    OddCycleConverse conv = odd_cycle_converse_lattice(spec);
    const auto& lat = conv.lattice;
    // The paper's alternation sets at m = 5, with both submodular joins kept
    // as explicit nodes.
    auto find = [&](const std::string& name) {
        for (const auto& n : lat.nodes)
            if (n.name == name) return n.members;
        throw Error("missing node " + name);
    };
    CHECK(find("O") == 0b00101u);   // {X1, X3}
    CHECK(find("E") == 0b01010u);   // {X2, X4}
    CHECK(find("M") == 0b00110u);   // {X2, X3}
    CHECK(find("O+") == 0b00111u);  // {X1, X2, X3}
    CHECK(find("E+") == 0b01110u);  // {X2, X3, X4}
    CHECK(find("MXm") == 0b10110u);
    CHECK(find("OE") == 0b01111u);
    CHECK(lat.nodes.size() == 10);

    OddCycleSpec seven{7, OddCycleSpec::Flavor::Gaussian, 0.25};
    CHECK(odd_cycle_converse_lattice(seven).lattice.nodes.size() == 10);
}

TEST_CASE("verify_odd_cycle binary m=5 and m=7")
{
    for (int m : {5, 7}) {
        OddCycleSpec spec{m, OddCycleSpec::Flavor::BinaryIndex, 0};
        OddCycleReport rep = verify_odd_cycle(spec);
        for (const auto& note : rep.notes) MESSAGE(note);
        CHECK(rep.pass);
        CHECK(rep.upper_exact == Rational(m, 2));
        CHECK(rep.lower_bound_lp == Rational(m, 2));
        CHECK(rep.lower_relaxed_lp == Rational(m, 2));
        CHECK(rep.feasible_point_ok);
        CHECK(rep.feasible_codewords == doctest::Approx(1.5));
        CHECK(rep.feasible_bins == doctest::Approx(0.5));
        long expect = 1;
        for (int i = 2; i <= m; ++i) expect *= i;
        CHECK(rep.orderings_checked == expect);
    }
}

TEST_CASE("verify_odd_cycle gaussian m=5 over the distortion grid")
{
    for (double d : {0.1, 0.25, 0.5}) {
        OddCycleSpec spec{5, OddCycleSpec::Flavor::Gaussian, d};
        OddCycleReport rep = verify_odd_cycle(spec);
        for (const auto& note : rep.notes) MESSAGE(note);
        CHECK(rep.pass);
        CHECK(rep.upper == doctest::Approx(1.25 * std::log2(1 / d)).epsilon(1e-9));
        CHECK(std::abs(rep.lower_extrapolated - rep.expected) <= 1e-6);
        CHECK(rep.feasible_point_ok);
        CHECK(rep.orderings_checked == 120);
    }
}

TEST_CASE("gaussian minimax sits strictly below the lattice bound")
{
    double d = 0.25, eps = 1e-5;
    OddCycleSpec spec{5, OddCycleSpec::Flavor::Gaussian, d};
    OddCycleBuild build = odd_cycle_instance(spec);
    converse::MinimaxAux aux;
    aux.common.subset = 0;
    double var = (d + eps) / (1 - d - eps);
    for (int i = 1; i <= 5; ++i) {
        achievable::Message u;
        u.subset = 1u << (i - 1);
        gauss::Matrix obs(1, 1), ncov(1, 1);
        obs.at(0, 0) = 1.0;
        ncov.at(0, 0) = var;
        u.gaussian = gauss::GaussianMessage{"UY" + std::to_string(i), {comp_name(i)}, obs, ncov};
        aux.per_decoder.push_back(std::move(u));
    }
    double minimax = converse::minimax_bound(build.problem, aux, eps);
    CHECK(minimax ==
          doctest::Approx((5 - 1) / 4.0 * std::log2(1 / (d + eps)) - eps).epsilon(1e-9));

    OddCycleConverse conv = odd_cycle_converse_lattice(spec);
    converse::GeneralLowerResult lattice =
        converse::solve_general_lower(conv.lattice, conv.oracle, eps);
    CHECK(minimax < lattice.value - 0.1);  // strictly suboptimal
}

TEST_CASE("wyner-ziv catalog instance")
{
    // Y = X: a perfect message costs nothing at D = 0.
    achievable::ProblemInstance inst = wyner_ziv_binary(0.0, 0.0);
    achievable::Message msg;
    msg.subset = 1u;
    msg.discrete = achievable::DiscreteChannel{{"U", 2}, {"X"}, {{1.0, 0.0}, {0.0, 1.0}}};
    achievable::MessageSchedule sched{{msg}};
    lp::LpSolution sol =
        lp::solve(achievable::build_achievable_lp(inst, sched), lp::Mode::Float);
    REQUIRE(sol.status == lp::SolveStatus::Optimal);
    CHECK(sol.value == doctest::Approx(0.0).epsilon(1e-9));

    // A noisy pair needs positive rate at D = 0 with a perfect message.
    achievable::ProblemInstance noisy = wyner_ziv_binary(0.1, 0.0);
    lp::LpSolution sol2 =
        lp::solve(achievable::build_achievable_lp(noisy, sched), lp::Mode::Float);
    achievable::ExtendedModel model(noisy, sched);
    CHECK(sol2.value == doctest::Approx(model.mi({"X"}, {"U"}, {"Y1"})).epsilon(1e-9));
}

TEST_CASE("mismatched catalog build passes its structural checks")
{
    auto bsc = [](double p) {
        return std::vector<std::vector<double>>{{1 - p, p}, {p, 1 - p}};
    };
    auto uniformk = [](std::size_t rows, int out) {
        return std::vector<std::vector<double>>(rows,
                                                std::vector<double>(out, 1.0 / double(out)));
    };
    MismatchedBuild wb =
        mismatched_product({0.5, 0.5}, bsc(0.1), bsc(0.2), {0.4, 0.6}, bsc(0.15), bsc(0.25),
                         bsc(0.3), bsc(0.35), uniformk(4, 2), uniformk(4, 2));
    CHECK(wb.inputs.base.mutual_information_general({"X1", "Y11", "Y21"}, {"X2", "Y12", "Y22"},
                                                    {}) <= 1e-9);
    CHECK(wb.inputs.base.is_markov_chain({"X1"}, {"Y11"}, {"Y21"}, 1e-9));
    CHECK(wb.inputs.base.is_markov_chain({"X2"}, {"Y22"}, {"Y12"}, 1e-9));
    CHECK(converse::mismatched_expression(wb.inputs) >= 0.0);
    CHECK(achievable::check_schedule_validity(wb.problem, wb.schedule).empty());
}

TEST_CASE("less-noisy catalog with identity map and trivial Y1")
{
    auto bsc = [](double p) {
        return std::vector<std::vector<double>>{{1 - p, p}, {p, 1 - p}};
    };
    // Y1 is a constant (alphabet 1): H(a(X)|Y1) = H(X) = 1 bit.
    pmf::JointPmf base = pmf::JointPmf::fair_bits({"X"})
                             .attach_channel({"Y2", 2}, {"X"}, bsc(0.2))
                             .attach_channel({"Y1", 1}, {"X"}, {{1.0}, {1.0}});
    LessNoisyBuild lb =
        less_noisy(base, "X", "Y1", "Y2", {0, 1},
                   achievable::DiscreteChannel{{"W", 2}, {"X"}, bsc(0.1)}, 1.0);
    double expr = converse::less_noisy_expression(lb.inputs);
    pmf::JointPmf j = base.attach_channel({"W", 2}, {"X"}, bsc(0.1));
    double second = j.mutual_information_general({"X"}, {"W"}, {"X", "Y2"});
    CHECK(expr == doctest::Approx(1.0 + second).epsilon(1e-9));
}

TEST_CASE("extrapolation helper")
{
    // Quadratic data is recovered exactly.
    auto f = [](double e) { return 3.25 - 2.0 * e + 7.0 * e * e; };
    std::vector<std::pair<double, double>> pts{{1e-3, f(1e-3)}, {1e-4, f(1e-4)}, {1e-5, f(1e-5)}};
    CHECK(extrapolate_to_zero(pts) == doctest::Approx(3.25).epsilon(1e-12));
}
