// Acceptance suite: one line per criterion, PASS or FAIL, with the measured
// values. Exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#include "rdlp/instances.hpp"
#include "rdlp/json_io.hpp"

using namespace rdlp;

namespace {

int failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const
    {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

void report(int criterion, bool pass, const std::string& detail, double seconds)
{
    std::printf("%s criterion %d: %s [%.2fs]\n", pass ? "PASS" : "FAIL", criterion,
                detail.c_str(), seconds);
    if (!pass) ++failures;
}

// Sandwich pairs collected across the run: (lower, upper, label).
std::vector<std::tuple<double, double, std::string>> sandwich;

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

std::vector<double> random_dist(std::mt19937& rng, int n) { return random_kernel(rng, 1, n)[0]; }

void criterion1()
{
    Timer t;
    bool pass = true;
    std::string detail = "odd-cycle index coding";
    for (int m : {5, 7, 9}) {
        Timer per;
        instances::OddCycleSpec spec{m, instances::OddCycleSpec::Flavor::BinaryIndex, 0};
        instances::OddCycleReport rep = instances::verify_odd_cycle(spec);
        Rational expect(m, 2);
        bool ok = rep.pass && rep.upper_exact == expect && rep.lower_bound_lp == expect &&
                  rep.lower_relaxed_lp == expect && rep.feasible_point_ok;
        if (per.seconds() > 10.0) {
            ok = false;
            detail += " (m=" + std::to_string(m) + " exceeded 10s)";
        }
        pass = pass && ok;
        detail += " m=" + std::to_string(m) + ":" + rep.upper_exact.to_string() + "/" +
                  rep.lower_bound_lp.to_string() + "/" + rep.lower_relaxed_lp.to_string() +
                  " orders=" + std::to_string(rep.orderings_checked);
        sandwich.push_back({rep.lower_bound_lp.to_double(), rep.upper_exact.to_double(),
                            "odd-cycle binary m=" + std::to_string(m)});
        if (!rep.pass)
            for (const auto& n : rep.notes) detail += " | " + n;
    }
    report(1, pass, detail, t.seconds());
}

void criterion2()
{
    Timer t;
    bool pass = true;
    std::string detail = "odd-cycle gaussian m=5";
    for (double d : {0.1, 0.25, 0.5}) {
        instances::OddCycleSpec spec{5, instances::OddCycleSpec::Flavor::Gaussian, d};
        instances::OddCycleReport rep = instances::verify_odd_cycle(spec);
        double expect = 1.25 * std::log2(1.0 / d);
        bool ok = rep.pass && std::abs(rep.upper - expect) <= 1e-9 && rep.feasible_point_ok &&
                  std::abs(rep.lower_extrapolated - expect) <= 1e-6;
        pass = pass && ok;
        char buf[128];
        std::snprintf(buf, sizeof buf, " D=%g:upper=%.9f,extrap=%.9f", d, rep.upper,
                      rep.lower_extrapolated);
        detail += buf;
        for (const auto& [eps, value] : rep.lattice_sequence)
            sandwich.push_back({value, rep.upper, "odd-cycle gaussian D=" + std::to_string(d) +
                                                      " eps=" + std::to_string(eps)});
        if (!rep.pass)
            for (const auto& n : rep.notes) detail += " | " + n;
    }
    bool in_time = t.seconds() < 5.0;
    if (!in_time) detail += " (exceeded 5s)";
    report(2, pass && in_time, detail, t.seconds());
}

void criterion3()
{
    Timer t;
    bool pass = true;
    std::string detail = "minimax evaluator";

    // Gaussian odd cycle with the closed-form auxiliaries.
    for (double eps : {1e-3, 1e-4}) {
        double d = 0.25;
        instances::OddCycleSpec spec{5, instances::OddCycleSpec::Flavor::Gaussian, d};
        instances::OddCycleBuild build = instances::odd_cycle_instance(spec);
        converse::MinimaxAux aux;
        aux.common.subset = (1u << 5) - 1;
        double var = (d + eps) / (1 - d - eps);
        for (int i = 1; i <= 5; ++i) {
            achievable::Message u;
            u.subset = 1u << (i - 1);
            gauss::Matrix obs(1, 1), ncov(1, 1);
            obs.at(0, 0) = 1.0;
            ncov.at(0, 0) = var;
            u.gaussian = gauss::GaussianMessage{"UY" + std::to_string(i),
                                                {instances::comp_name(i)}, obs, ncov};
            aux.per_decoder.push_back(std::move(u));
        }
        double got = converse::minimax_bound(build.problem, aux, eps);
        double expect = (5 - 1) / 4.0 * std::log2(1.0 / (d + eps)) - eps;
        if (std::abs(got - expect) > 1e-9) {
            pass = false;
            detail += " gaussian eps=" + std::to_string(eps) + " got " + std::to_string(got);
        }
        sandwich.push_back({got, 1.25 * std::log2(1.0 / d), "gaussian minimax eps=" +
                                                                std::to_string(eps)});
    }

    // Binary odd cycle with V empty and U_{Y_i} = X_i.
    {
        instances::OddCycleSpec spec{5, instances::OddCycleSpec::Flavor::BinaryIndex, 0};
        instances::OddCycleBuild build = instances::odd_cycle_instance(spec);
        converse::MinimaxAux aux;
        aux.common.subset = (1u << 5) - 1;
        for (int i = 1; i <= 5; ++i) {
            achievable::Message u;
            u.subset = 1u << (i - 1);
            u.discrete = achievable::DiscreteChannel{{"UY" + std::to_string(i), 2},
                                                     {instances::comp_name(i)},
                                                     {{1.0, 0.0}, {0.0, 1.0}}};
            aux.per_decoder.push_back(std::move(u));
        }
        double got = converse::minimax_bound(build.problem, aux, 0.0);
        if (std::abs(got - 2.0) > 1e-12 || !(got < 2.5)) {
            pass = false;
            detail += " binary got " + std::to_string(got);
        } else {
            detail += " binary=2 gaussian=((m-1)/4)log2(1/(D+eps))";
        }
        sandwich.push_back({got, 2.5, "binary minimax m=5"});
    }
    bool in_time = t.seconds() < 5.0;
    if (!in_time) detail += " (exceeded 5s)";
    report(3, pass && in_time, detail, t.seconds());
}

void criterion4()
{
    Timer t;
    bool pass = true;
    std::mt19937 rng(20260808);
    int equal_count = 0;
    for (int trial = 0; trial < 20; ++trial) {
        int k = 3 + trial % 4;  // 3..6 bits
        converse::IndexCodingInstance inst;
        inst.bits = k;
        int n = 1 + int(rng() % k);
        for (int i = 0; i < n; ++i) {
            unsigned side = unsigned(rng()) & inst.full_mask();
            unsigned rest = inst.full_mask() & ~side;
            if (!rest) continue;
            unsigned demand = unsigned(rng()) & rest;
            if (!demand) demand = rest & (~rest + 1);
            inst.decoders.push_back({side, demand});
        }
        converse::EquivalenceReport rep = converse::index_lp_equivalence(inst);
        if (rep.equal) ++equal_count;
        pass = pass && rep.equal;
    }
    bool in_time = t.seconds() < 60.0;
    report(4, pass && in_time,
           "bound/relaxation equivalence exact on " + std::to_string(equal_count) +
               "/20 random instances (k<=6)",
           t.seconds());
}

void criterion5()
{
    Timer t;
    bool pass = true;
    std::mt19937 rng(555);
    double worst = 0;
    for (int trial = 0; trial < 50; ++trial) {
        int nx = 2 + trial % 3, ny = 2 + (trial / 2) % 2, nu = 2 + (trial / 3) % 3;
        pmf::JointPmf base =
            pmf::JointPmf::independent({{"X", nx}}, {random_dist(rng, nx)})
                .attach_channel({"Y1", ny}, {"X"}, random_kernel(rng, nx, ny));
        achievable::ProblemInstance inst;
        inst.joint = std::move(base);
        inst.source = {"X"};
        achievable::DecoderSpec dec;
        dec.side_info = {"Y1"};
        dec.distortion = achievable::Distortion::from_table(instances::hamming_table(nx));
        dec.target = {1.0};
        inst.decoders.push_back(std::move(dec));
        achievable::Message msg;
        msg.subset = 1u;
        msg.discrete = achievable::DiscreteChannel{{"U", nu}, {"X"}, random_kernel(rng, nx, nu)};
        achievable::MessageSchedule sched{{msg}};
        lp::LpSolution sol =
            lp::solve(achievable::build_achievable_lp(inst, sched), lp::Mode::Float);
        achievable::ExtendedModel model(inst, sched);
        double expect = model.mi({"X"}, {"U"}, {"Y1"});
        worst = std::max(worst, std::abs(sol.value - expect));
        pass = pass && sol.status == lp::SolveStatus::Optimal &&
               std::abs(sol.value - expect) <= 1e-9;
    }
    report(5, pass, "Wyner-Ziv reduction on 50 random m=1 instances, worst gap " +
                        std::to_string(worst),
           t.seconds());
}

void criterion6()
{
    Timer t;
    bool pass = true;
    std::mt19937 rng(666);
    double worst_excess = -1;
    for (int trial = 0; trial < 100; ++trial) {
        int nx = 2 + trial % 2;
        pmf::JointPmf base =
            pmf::JointPmf::independent({{"X", nx}}, {random_dist(rng, nx)})
                .attach_channel({"Y1", 2}, {"X"}, random_kernel(rng, nx, 2))
                .attach_channel({"Y2", 2}, {"X"}, random_kernel(rng, nx, 2));
        achievable::ProblemInstance inst;
        inst.joint = std::move(base);
        inst.source = {"X"};
        for (const char* y : {"Y1", "Y2"}) {
            achievable::DecoderSpec dec;
            dec.side_info = {y};
            dec.distortion = achievable::Distortion::from_table(instances::hamming_table(nx));
            dec.target = {1.0};
            inst.decoders.push_back(std::move(dec));
        }
        int n12 = 2 + trial % 2;
        achievable::Message m12, m1, m2;
        m12.subset = 3u;
        m12.discrete =
            achievable::DiscreteChannel{{"U12", n12}, {"X"}, random_kernel(rng, nx, n12)};
        m1.subset = 1u;
        m1.discrete = achievable::DiscreteChannel{{"U1", 2},
                                                  {"X", "U12"},
                                                  random_kernel(rng, std::size_t(nx) * n12, 2)};
        m2.subset = 2u;
        m2.discrete = achievable::DiscreteChannel{{"U2", 2},
                                                  {"X", "U12"},
                                                  random_kernel(rng, std::size_t(nx) * n12, 2)};
        achievable::MessageSchedule sched{{m12, m1, m2}};
        double expr = achievable::sequential_two_decoder(inst, sched);
        lp::LpSolution sol =
            lp::solve(achievable::build_achievable_lp(inst, sched), lp::Mode::Float);
        double excess = sol.value - expr;
        worst_excess = std::max(worst_excess, excess);
        pass = pass && sol.status == lp::SolveStatus::Optimal && excess <= 1e-9;
    }
    report(6, pass,
           "simultaneous LP <= sequential expression on 100 random two-decoder instances, "
           "worst excess " +
               std::to_string(worst_excess),
           t.seconds());
}

void criterion7()
{
    Timer t;
    bool pass = true;
    std::string detail;
    std::mt19937 rng(777);

    // Information identities on 500 random small pmfs at 1e-10.
    {
        double worst = 0;
        std::uniform_real_distribution<double> u(0.01, 1.0);
        for (int trial = 0; trial < 500; ++trial) {
            std::vector<pmf::VariableId> vars{{"A", 2 + trial % 2}, {"B", 2}, {"C", 2 + trial % 3}};
            std::size_t cells = 1;
            for (const auto& v : vars) cells *= v.alphabet_size;
            std::vector<double> mass(cells);
            double total = 0;
            for (auto& p : mass) {
                p = u(rng);
                total += p;
            }
            for (auto& p : mass) p /= total;
            pmf::JointPmf p(vars, std::move(mass));
            double chain = std::abs(p.conditional_mutual_information({"A", "B"}, {"C"}, {}) -
                                    p.conditional_mutual_information({"A"}, {"C"}, {}) -
                                    p.conditional_mutual_information({"B"}, {"C"}, {"A"}));
            double submod = p.entropy({"B"}) + p.entropy({"A", "B", "C"}) -
                            p.entropy({"A", "B"}) - p.entropy({"B", "C"});
            pmf::JointPmf q =
                p.attach_channel({"U", 2}, {"A"}, random_kernel(rng, p.alphabet_of(0), 2));
            double dpi = q.conditional_mutual_information({"U"}, {"C"}, {}) -
                         q.conditional_mutual_information({"A"}, {"C"}, {});
            double neg = -std::min(0.0, p.conditional_mutual_information({"A"}, {"C"}, {"B"}));
            worst = std::max({worst, chain, submod, dpi, neg});
        }
        if (worst > 1e-10) {
            pass = false;
            detail += " information identities worst " + std::to_string(worst) + ";";
        } else {
            detail += "identities<=1e-10 on 500 pmfs;";
        }
    }

    // Strong duality certificates on every solve of a random LP batch.
    {
        bool duality_ok = true;
        std::uniform_int_distribution<int> coeff(-4, 4);
        std::uniform_int_distribution<int> point(0, 3);
        for (int trial = 0; trial < 200; ++trial) {
            int n = 2 + trial % 4, m = 2 + trial % 6;
            lp::LinearProgram p;
            for (int j = 0; j < n; ++j) p.add_variable("x" + std::to_string(j));
            std::vector<int> x0(n);
            for (auto& v : x0) v = point(rng);
            for (int i = 0; i < m; ++i) {
                std::vector<std::pair<int, lp::Coef>> terms;
                long lhs = 0;
                for (int j = 0; j < n; ++j) {
                    int c = coeff(rng);
                    if (c == 0) continue;
                    terms.push_back({j, lp::Coef(c)});
                    lhs += c * x0[j];
                }
                if (terms.empty()) continue;
                p.add_constraint("c" + std::to_string(i), terms, lp::Relation::GreaterEq,
                                 lp::Coef(static_cast<std::int64_t>(lhs - trial % 2)));
            }
            std::vector<std::pair<int, lp::Coef>> obj;
            for (int j = 0; j < n; ++j) obj.push_back({j, lp::Coef(1 + (j + trial) % 2)});
            p.set_objective(obj);
            for (bool dual_route : {false, true}) {
                lp::SolveOptions o;
                o.force_primal = !dual_route;
                o.force_dual = dual_route;
                lp::LpSolution s = lp::solve(p, lp::Mode::Rational, o);
                if (s.status != lp::SolveStatus::Optimal) continue;
                Rational dual_value(0);
                for (std::size_t i = 0; i < p.constraints().size(); ++i)
                    dual_value += s.duals_exact[i] * p.constraints()[i].rhs.rat;
                if (dual_value != s.value_exact) duality_ok = false;
                lp::SolutionCheck chk = lp::check_solution(p, s);
                if (chk.max_primal_violation > 1e-9) duality_ok = false;
            }
        }
        if (!duality_ok) {
            pass = false;
            detail += " duality certificate mismatch;";
        } else {
            detail += " duality exact on 200 LPs x2 routes;";
        }
    }

    // Schur-complement PSD on 200 random systems.
    {
        bool psd_ok = true;
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        for (int trial = 0; trial < 200; ++trial) {
            int n = 3 + trial % 3;
            gauss::Matrix a(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) a.at(i, j) = u(rng);
            gauss::Matrix sigma = a * a.transpose();
            for (int i = 0; i < n; ++i) sigma.at(i, i) += 0.2;
            std::vector<std::pair<std::string, int>> blocks;
            for (int i = 0; i < n; ++i) blocks.push_back({"B" + std::to_string(i), 1});
            gauss::GaussianSystem sys(std::move(blocks), std::move(sigma));
            gauss::Matrix k = sys.conditional_covariance(
                {"B0", "B1"}, n > 3 ? std::vector<std::string>{"B2", "B3"}
                                    : std::vector<std::string>{"B2"});
            auto eig = gauss::symmetric_eigenvalues(k);
            if (eig.front() < -1e-9) psd_ok = false;
            gauss::Matrix before = sys.conditional_covariance({"B0", "B1"}, {});
            for (int i = 0; i < 2; ++i)
                if (k.at(i, i) > before.at(i, i) + 1e-9) psd_ok = false;
        }
        if (!psd_ok) {
            pass = false;
            detail += " Schur PSD failure;";
        } else {
            detail += " Schur PSD on 200 systems";
        }
    }
    report(7, pass, detail, t.seconds());
}

void criterion8()
{
    Timer t;
    bool pass = true;
    double worst = -std::numeric_limits<double>::infinity();
    std::string offender;
    for (const auto& [lower, upper, label] : sandwich) {
        double gap = lower - upper;
        if (gap > worst) {
            worst = gap;
            offender = label;
        }
        if (gap > 1e-9) pass = false;
    }
    report(8, pass,
           "sandwich on " + std::to_string(sandwich.size()) + " (lower,upper) pairs, max "
           "lower-upper = " +
               std::to_string(worst) + " (" + offender + ")",
           t.seconds());
}

}  // namespace

int main()
{
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    if (failures == 0)
        std::printf("acceptance: all criteria passed\n");
    else
        std::printf("acceptance: %d criteria FAILED\n", failures);
    return failures;
}
