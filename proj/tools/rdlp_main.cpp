// rdlp: upper and lower bounds on rate-distortion functions with side
// information at multiple decoders, driven by JSON instance files.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "rdlp/json_io.hpp"

using namespace rdlp;
using nlohmann::ordered_json;

namespace {

struct Options {
    std::string instance_path;
    double eps = 0.0;
    std::string mode = "";  // "", "rational", "float"
    std::string orderings = "given";
    bool json = false;
    int m = 5;
    std::string flavor = "binary";
    double d = 0.25;
    std::string which = "achievable";
};

lp::Mode pick_mode(const Options& opt, lp::Mode fallback)
{
    std::string m = opt.mode;
    if (m.empty()) {
        const char* env = std::getenv("RDLP_MODE");
        if (env) m = env;
    }
    if (m == "rational") return lp::Mode::Rational;
    if (m == "float") return lp::Mode::Float;
    if (m.empty()) return fallback;
    throw Error("mode must be 'rational' or 'float'");
}

const char* mode_name(lp::Mode m) { return m == lp::Mode::Rational ? "rational" : "float"; }

std::string value_text(const io::ResultRecord& r)
{
    if (r.exact) return r.exact_value.to_string();
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", r.value);
    return buf;
}

void emit(const Options& opt, const io::ResultRecord& r)
{
    if (opt.json) {
        std::cout << io::to_json(r).dump() << "\n";
    } else {
        std::printf("%-22s %-14s mode=%-9s eps=%-8g rows=%d cols=%d pivots=%ld%s\n",
                    r.bound.c_str(), value_text(r).c_str(), r.mode.c_str(), r.eps, r.stats.rows,
                    r.stats.cols, r.stats.pivots, r.stats.via_dual ? " (dual)" : "");
    }
}

io::ResultRecord make_record(const std::string& bound, const lp::LpSolution& sol, lp::Mode mode,
                             double eps, const std::string& fingerprint_text)
{
    io::ResultRecord r;
    r.bound = bound;
    r.value = sol.value;
    if (mode == lp::Mode::Rational) {
        r.exact = true;
        r.exact_value = sol.value_exact;
    }
    r.mode = mode_name(mode);
    r.eps = eps;
    r.fingerprint = io::fingerprint_of(fingerprint_text);
    r.stats = sol.stats;
    return r;
}

struct Loaded {
    io::ParsedInstance parsed;
    std::optional<instances::OddCycleBuild> oc;
};

Loaded load(const Options& opt)
{
    if (opt.instance_path.empty()) throw Error("--instance is required");
    Loaded l{io::load_instance(opt.instance_path), {}};
    if (l.parsed.kind == io::InstanceKind::OddCycle)
        l.oc = instances::odd_cycle_instance(*l.parsed.odd_cycle);
    return l;
}

const achievable::ProblemInstance& problem_of(const Loaded& l)
{
    if (l.oc) return l.oc->problem;
    if (!l.parsed.problem) throw Error("this subcommand needs a discrete or gaussian instance");
    return *l.parsed.problem;
}

const achievable::MessageSchedule& schedule_of(const Loaded& l)
{
    if (l.oc) return l.oc->schedule;
    if (!l.parsed.schedule) throw Error("this subcommand needs a 'schedule' section");
    return *l.parsed.schedule;
}

converse::IndexCodingInstance index_of(const Loaded& l)
{
    if (l.parsed.index) return *l.parsed.index;
    if (l.parsed.odd_cycle &&
        l.parsed.odd_cycle->flavor == instances::OddCycleSpec::Flavor::BinaryIndex)
        return converse::IndexCodingInstance::odd_cycle(l.parsed.odd_cycle->m);
    throw Error("this subcommand needs an index-coding or binary odd-cycle instance");
}

int run_upper(const Options& opt, bool gaussian_expected)
{
    Loaded l = load(opt);
    const achievable::ProblemInstance& inst = problem_of(l);
    if (inst.discrete() == gaussian_expected)
        throw Error(gaussian_expected ? "upper-gauss needs a gaussian instance"
                                      : "upper needs a discrete instance");
    lp::Mode fallback = inst.discrete() && l.oc ? lp::Mode::Rational : lp::Mode::Float;
    lp::Mode mode = pick_mode(opt, fallback);
    const achievable::MessageSchedule& sched = schedule_of(l);

    std::string fp = "upper";
    for (const auto& m : sched.order) fp += "|" + achievable::subset_text(m.subset) + m.name();

    if (opt.orderings == "all") {
        std::vector<achievable::MessageSchedule> all = achievable::enumerate_orderings(sched);
        achievable::UpperBoundResult best = achievable::solve_upper_bound(inst, all, mode);
        io::ResultRecord r;
        r.bound = "achievable-lp-best-order";
        r.value = best.value;
        r.exact = best.exact;
        r.exact_value = best.value_exact;
        r.mode = mode_name(mode);
        r.eps = 0;
        r.fingerprint = io::fingerprint_of(fp + "|all");
        emit(opt, r);
    } else if (opt.orderings == "given") {
        lp::LinearProgram prog = achievable::build_achievable_lp(inst, sched, mode);
        lp::LpSolution sol = lp::solve(prog, mode);
        if (sol.status != lp::SolveStatus::Optimal)
            throw SolverError("achievable LP did not reach optimality");
        emit(opt, make_record("achievable-lp", sol, mode, 0, prog.dump()));
    } else {
        throw Error("--orderings must be 'all' or 'given'");
    }
    return 0;
}

int run_lower_index(const Options& opt)
{
    Loaded l = load(opt);
    converse::IndexCodingInstance inst = index_of(l);
    converse::IndexLpResult hat = converse::index_bound_lp(inst);
    if (hat.status != lp::SolveStatus::Optimal)
        throw SolverError("index bound LP did not reach optimality");
    io::ResultRecord r1;
    r1.bound = "index-bound-lp";
    r1.value = hat.value_f;
    r1.exact = hat.exact;
    r1.exact_value = hat.value;
    r1.mode = "rational";
    r1.eps = 0;
    r1.fingerprint = io::fingerprint_of(hat.program.dump());
    r1.stats = hat.solution.stats;
    emit(opt, r1);

    converse::IndexLpResult rel = converse::relaxed_index_lp(inst, opt.eps);
    if (rel.status != lp::SolveStatus::Optimal)
        throw SolverError("relaxed index LP did not reach optimality");
    io::ResultRecord r2;
    r2.bound = "index-relaxed-lp";
    r2.value = rel.value_f;
    r2.exact = rel.exact;
    r2.exact_value = rel.value;
    r2.mode = rel.exact ? "rational" : "float";
    r2.eps = opt.eps;
    r2.fingerprint = io::fingerprint_of(rel.program.dump());
    r2.stats = rel.solution.stats;
    emit(opt, r2);

    if (opt.eps == 0 && !opt.json) {
        bool equal = hat.value == rel.value;
        std::printf("equivalence: %s\n", equal ? "exact" : "MISMATCH");
    }
    return 0;
}

converse::SideInfoLattice subset_lattice(const converse::IndexCodingInstance& inst)
{
    if (inst.bits > 7) throw Error("subset lattice limited to 7 bits; use lower-index instead");
    converse::SideInfoLattice lat;
    unsigned n = 1u << inst.bits;
    std::vector<int> node(n);
    for (unsigned a = 0; a < n; ++a) node[a] = lat.add_node(converse::subset_label(a), a);
    lat.empty_node = node[0];
    lat.full_node = node[n - 1];
    for (unsigned b = 1; b < n; ++b)
        for (unsigned a = (b - 1) & b;; a = (a - 1) & b) {
            if (a != b) {
                lat.mono.push_back({node[a], node[b]});
                lat.mono_plus.push_back({node[a], node[b]});
            }
            if (a == 0) break;
        }
    for (unsigned a = 0; a < n; ++a)
        for (unsigned b = a + 1; b < n; ++b)
            if ((a & ~b) && (b & ~a))
                lat.submod.push_back({node[a], node[b], node[a & b], node[a | b]});
    return lat;
}

converse::RdOracle lossless_oracle(const converse::IndexCodingInstance& inst)
{
    converse::RdOracle oracle;
    oracle.backend = converse::RdBackend::SeparableLossless;
    oracle.components = inst.bits;
    for (const auto& d : inst.decoders) {
        oracle.decoder_side.push_back(d.side);
        oracle.decoder_demand.push_back(d.demand);
    }
    return oracle;
}

int run_lower_general(const Options& opt)
{
    Loaded l = load(opt);
    converse::SideInfoLattice lat;
    converse::RdOracle oracle;
    lp::Mode mode;
    if (l.parsed.odd_cycle &&
        l.parsed.odd_cycle->flavor == instances::OddCycleSpec::Flavor::Gaussian) {
        auto conv = instances::odd_cycle_converse_lattice(*l.parsed.odd_cycle);
        lat = conv.lattice;
        oracle = conv.oracle;
        mode = lp::Mode::Float;
    } else {
        converse::IndexCodingInstance inst = index_of(l);
        lat = subset_lattice(inst);
        oracle = lossless_oracle(inst);
        mode = pick_mode(opt, lp::Mode::Rational);
    }
    converse::GeneralLowerResult res = converse::solve_general_lower(lat, oracle, opt.eps, mode);
    io::ResultRecord r;
    r.bound = res.heuristic ? "general-lattice-lp (heuristic-lower)" : "general-lattice-lp";
    r.value = res.value;
    r.exact = res.exact;
    r.exact_value = res.value_exact;
    r.mode = mode_name(mode);
    r.eps = opt.eps;
    r.fingerprint = io::fingerprint_of(res.program.dump());
    r.stats = res.solution.stats;
    emit(opt, r);
    return 0;
}

converse::MinimaxAux canonical_odd_cycle_aux(const instances::OddCycleSpec& spec, double eps)
{
    converse::MinimaxAux aux;
    aux.common.subset = (1u << spec.m) - 1;
    for (int i = 1; i <= spec.m; ++i) {
        achievable::Message u;
        u.subset = 1u << (i - 1);
        if (spec.flavor == instances::OddCycleSpec::Flavor::BinaryIndex) {
            u.discrete = achievable::DiscreteChannel{{"UY" + std::to_string(i), 2},
                                                     {instances::comp_name(i)},
                                                     {{1.0, 0.0}, {0.0, 1.0}}};
        } else {
            double var = (spec.d + eps) / (1 - spec.d - eps);
            gauss::Matrix obs(1, 1), ncov(1, 1);
            obs.at(0, 0) = 1.0;
            ncov.at(0, 0) = var;
            u.gaussian = gauss::GaussianMessage{"UY" + std::to_string(i),
                                                {instances::comp_name(i)}, obs, ncov};
        }
        aux.per_decoder.push_back(std::move(u));
    }
    return aux;
}

int run_minimax(const Options& opt)
{
    Loaded l = load(opt);
    const achievable::ProblemInstance& inst = problem_of(l);
    converse::MinimaxAux aux;
    if (l.parsed.aux)
        aux = *l.parsed.aux;
    else if (l.parsed.odd_cycle)
        aux = canonical_odd_cycle_aux(*l.parsed.odd_cycle, opt.eps);
    else
        throw Error("minimax needs an 'auxiliaries' section or an odd-cycle instance");
    double value = converse::minimax_bound(inst, aux, opt.eps);
    io::ResultRecord r;
    r.bound = "minimax";
    r.value = value;
    r.mode = "float";
    r.eps = opt.eps;
    r.fingerprint = io::fingerprint_of("minimax|" + opt.instance_path);
    emit(opt, r);
    return 0;
}

int run_odd_cycle(const Options& opt)
{
    instances::OddCycleSpec spec;
    spec.m = opt.m;
    if (opt.flavor == "binary")
        spec.flavor = instances::OddCycleSpec::Flavor::BinaryIndex;
    else if (opt.flavor == "gaussian")
        spec.flavor = instances::OddCycleSpec::Flavor::Gaussian;
    else
        throw Error("--flavor must be 'binary' or 'gaussian'");
    spec.d = opt.d;
    spec.validate();
    instances::OddCycleReport rep = instances::verify_odd_cycle(spec);
    bool binary = spec.flavor == instances::OddCycleSpec::Flavor::BinaryIndex;
    if (opt.json) {
        ordered_json j;
        j["kind"] = "odd-cycle";
        j["m"] = spec.m;
        j["flavor"] = opt.flavor;
        if (!binary) j["D"] = spec.d;
        if (binary) {
            j["upper"] = {{"num", rep.upper_exact.num_string()},
                          {"den", rep.upper_exact.den_string()}};
            j["lower"] = {{"num", rep.lower_bound_lp.num_string()},
                          {"den", rep.lower_bound_lp.den_string()}};
        } else {
            j["upper"] = rep.upper;
            j["lower"] = rep.lower_extrapolated;
            j["expected"] = rep.expected;
        }
        j["match"] = rep.pass;
        j["orderings_checked"] = rep.orderings_checked;
        j["distinct_programs"] = rep.distinct_programs;
        j["feasible_point_ok"] = rep.feasible_point_ok;
        j["notes"] = rep.notes;
        std::cout << j.dump() << "\n";
    } else {
        if (binary)
            std::printf("upper=%s lower=%s %s\n", rep.upper_exact.to_string().c_str(),
                        rep.lower_bound_lp.to_string().c_str(), rep.pass ? "MATCH" : "MISMATCH");
        else
            std::printf("upper=%.9g lower=%.9g %s bits\n", rep.upper, rep.lower_extrapolated,
                        rep.pass ? "MATCH" : "MISMATCH");
        std::printf("orderings=%ld distinct-programs=%ld feasible-point=%s\n",
                    rep.orderings_checked, rep.distinct_programs,
                    rep.feasible_point_ok ? "ok" : "VIOLATED");
        for (const auto& n : rep.notes) std::printf("note: %s\n", n.c_str());
    }
    return rep.pass ? 0 : 3;
}

int run_compare(const Options& opt)
{
    Loaded l = load(opt);
    if (l.parsed.odd_cycle) {
        Options o = opt;
        o.m = l.parsed.odd_cycle->m;
        o.flavor = l.parsed.odd_cycle->flavor == instances::OddCycleSpec::Flavor::BinaryIndex
                       ? "binary"
                       : "gaussian";
        o.d = l.parsed.odd_cycle->d;
        return run_odd_cycle(o);
    }
    if (l.parsed.kind == io::InstanceKind::IndexCoding) {
        return run_lower_index(opt);
    }
    const achievable::ProblemInstance& inst = problem_of(l);
    const achievable::MessageSchedule& sched = schedule_of(l);
    lp::Mode mode = pick_mode(opt, lp::Mode::Float);
    lp::LinearProgram prog = achievable::build_achievable_lp(inst, sched, mode);
    lp::LpSolution sol = lp::solve(prog, mode);
    emit(opt, make_record("achievable-lp", sol, mode, 0, prog.dump()));
    double upper = sol.value;
    double lower = -std::numeric_limits<double>::infinity();
    if (l.parsed.aux) {
        double mm = converse::minimax_bound(inst, *l.parsed.aux, opt.eps);
        io::ResultRecord r;
        r.bound = "minimax";
        r.value = mm;
        r.mode = "float";
        r.eps = opt.eps;
        r.fingerprint = io::fingerprint_of("minimax|" + opt.instance_path);
        emit(opt, r);
        lower = std::max(lower, mm);
    }
    if (!opt.json) {
        if (lower == -std::numeric_limits<double>::infinity())
            std::printf("sandwich: upper=%.9g (no lower bound requested)\n", upper);
        else
            std::printf("sandwich: %.9g <= R <= %.9g %s\n", lower, upper,
                        upper - lower <= 1e-6 ? "MATCH" : "GAP");
    }
    return 0;
}

int run_dump(const Options& opt)
{
    Loaded l = load(opt);
    if (opt.which == "achievable") {
        const achievable::ProblemInstance& inst = problem_of(l);
        lp::Mode mode =
            pick_mode(opt, inst.discrete() && l.oc ? lp::Mode::Rational : lp::Mode::Float);
        std::cout << achievable::build_achievable_lp(inst, schedule_of(l), mode).dump();
    } else if (opt.which == "bound") {
        std::cout << converse::index_bound_lp(index_of(l)).program.dump();
    } else if (opt.which == "relaxed") {
        std::cout << converse::relaxed_index_lp(index_of(l), opt.eps).program.dump();
    } else if (opt.which == "general") {
        if (l.parsed.odd_cycle &&
            l.parsed.odd_cycle->flavor == instances::OddCycleSpec::Flavor::Gaussian) {
            auto conv = instances::odd_cycle_converse_lattice(*l.parsed.odd_cycle);
            std::cout
                << converse::build_general_lower_lp(conv.lattice, conv.oracle, opt.eps).dump();
        } else {
            converse::IndexCodingInstance inst = index_of(l);
            std::cout << converse::build_general_lower_lp(subset_lattice(inst),
                                                          lossless_oracle(inst), opt.eps,
                                                          lp::Mode::Rational)
                             .dump();
        }
    } else {
        throw Error("--which must be achievable, bound, relaxed, or general");
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"LP bounds for rate-distortion with side information at multiple decoders"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--instance", opt.instance_path, "JSON instance file")->required();
        sub->add_option("--eps", opt.eps, "epsilon slack");
        sub->add_option("--mode", opt.mode, "rational|float (default: RDLP_MODE or per-command)");
        sub->add_flag("--json", opt.json, "one JSON record per line");
    };

    CLI::App* upper = app.add_subcommand("upper", "achievable LP for a discrete instance");
    add_common(upper);
    upper->add_option("--orderings", opt.orderings, "all|given (default given)");
    CLI::App* upper_gauss =
        app.add_subcommand("upper-gauss", "achievable LP for a gaussian instance");
    add_common(upper_gauss);
    upper_gauss->add_option("--orderings", opt.orderings, "all|given (default given)");
    CLI::App* lower_index =
        app.add_subcommand("lower-index", "index-coding LP bound and its relaxation");
    add_common(lower_index);
    CLI::App* lower_general =
        app.add_subcommand("lower-general", "generalized side-information lattice LP");
    add_common(lower_general);
    CLI::App* minimax = app.add_subcommand("minimax", "minimax bound for fixed auxiliaries");
    add_common(minimax);
    CLI::App* compare = app.add_subcommand("compare", "every applicable bound on one instance");
    add_common(compare);
    CLI::App* odd = app.add_subcommand("odd-cycle", "verify an odd-cycle instance end to end");
    odd->add_option("--m", opt.m, "odd cycle length >= 5")->required();
    odd->add_option("--flavor", opt.flavor, "binary|gaussian")->required();
    odd->add_option("--D", opt.d, "MSE target for the gaussian flavor");
    odd->add_flag("--json", opt.json, "JSON report");
    CLI::App* dump = app.add_subcommand("dump-lp", "print a generated LP as plain text");
    add_common(dump);
    dump->add_option("--which", opt.which, "achievable|bound|relaxed|general");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (upper->parsed()) return run_upper(opt, false);
        if (upper_gauss->parsed()) return run_upper(opt, true);
        if (lower_index->parsed()) return run_lower_index(opt);
        if (lower_general->parsed()) return run_lower_general(opt);
        if (minimax->parsed()) return run_minimax(opt);
        if (compare->parsed()) return run_compare(opt);
        if (odd->parsed()) return run_odd_cycle(opt);
        if (dump->parsed()) return run_dump(opt);
        std::fprintf(stderr, "no subcommand\n");
        return 2;
    } catch (const SolverError& e) {
        std::fprintf(stderr, "solver error: %s\n", e.what());
        return 3;
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "internal error: %s\n", e.what());
        return 3;
    }
}
