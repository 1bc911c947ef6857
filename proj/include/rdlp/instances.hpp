#ifndef RDLP_INSTANCES_HPP
#define RDLP_INSTANCES_HPP

// Canonical instance builders and end-to-end verifiers for the odd-cycle
// index-coding and odd-cycle Gaussian problems, plus the classical
// two-decoder constructions (Wyner-Ziv, mismatched product, conditionally
// less noisy).

#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "rdlp/achievable.hpp"
#include "rdlp/converse.hpp"

namespace rdlp::instances {

struct OddCycleSpec {
    enum class Flavor { BinaryIndex, Gaussian };
    int m = 5;
    Flavor flavor = Flavor::BinaryIndex;
    double d = 0.25;  // gaussian flavor only

    void validate() const
    {
        if (m < 5 || m % 2 == 0)
            throw Error("OddCycleSpec: m must be odd and at least 5, got " + std::to_string(m));
        if (flavor == Flavor::Gaussian && !(d > 0 && d < 1))
            throw Error("OddCycleSpec: gaussian distortion must lie in (0,1)");
    }
};

inline std::string comp_name(int i) { return "X" + std::to_string(i); }

// Hamming distortion on component `bit` of an m-bit packed source.
inline std::vector<std::vector<double>> component_hamming(int m, int bit)
{
    std::size_t cells = std::size_t(1) << m;
    std::vector<std::vector<double>> table(cells, std::vector<double>(2, 0.0));
    for (std::size_t x = 0; x < cells; ++x) {
        int value = static_cast<int>(x >> (m - 1 - bit) & 1u);  // first variable packs high
        table[x][0] = value == 0 ? 0.0 : 1.0;
        table[x][1] = value == 1 ? 0.0 : 1.0;
    }
    return table;
}

struct OddCycleBuild {
    achievable::ProblemInstance problem;
    achievable::MessageSchedule schedule;  // pair messages first, the rest degenerate
    std::vector<std::size_t> pair_positions;
};

inline OddCycleBuild odd_cycle_instance(const OddCycleSpec& spec)
{
    spec.validate();
    int m = spec.m;
    OddCycleBuild out;
    std::vector<std::string> names;
    for (int i = 1; i <= m; ++i) names.push_back(comp_name(i));

    if (spec.flavor == OddCycleSpec::Flavor::BinaryIndex) {
        out.problem.joint = pmf::JointPmf::fair_bits(names);
    } else {
        out.problem.system = gauss::GaussianSystem::independent_units(names);
    }
    out.problem.source = names;
    for (int i = 1; i <= m; ++i) {
        achievable::DecoderSpec dec;
        int prev = (i + m - 2) % m + 1, next = i % m + 1;
        dec.side_info = {comp_name(prev), comp_name(next)};
        if (spec.flavor == OddCycleSpec::Flavor::BinaryIndex) {
            dec.distortion = achievable::Distortion::from_table(component_hamming(m, i - 1));
            dec.target = {0.0};
        } else {
            dec.distortion = achievable::Distortion::mse();
            dec.target.assign(m, std::numeric_limits<double>::infinity());
            dec.target[i - 1] = spec.d;
        }
        out.problem.decoders.push_back(std::move(dec));
    }

    // Pair messages U_{j,j+1}; every other nonempty subset is degenerate.
    double noise = spec.flavor == OddCycleSpec::Flavor::Gaussian ? 2 * spec.d / (1 - spec.d) : 0;
    std::vector<bool> used(std::size_t(1) << m, false);
    for (int j = 1; j <= m; ++j) {
        int k = j % m + 1;
        achievable::Message msg;
        msg.subset = (1u << (j - 1)) | (1u << (k - 1));
        std::string uname = "U" + std::to_string(j) + "_" + std::to_string(k);
        if (spec.flavor == OddCycleSpec::Flavor::BinaryIndex) {
            std::vector<std::vector<double>> ident(4, std::vector<double>(4, 0.0));
            for (int r = 0; r < 4; ++r) ident[r][r] = 1.0;
            msg.discrete = achievable::DiscreteChannel{
                {uname, 4}, {comp_name(j), comp_name(k)}, std::move(ident)};
        } else {
            gauss::Matrix obs = gauss::Matrix::identity(2);
            gauss::Matrix ncov(2, 2);
            ncov.at(0, 0) = ncov.at(1, 1) = noise;
            msg.gaussian = gauss::GaussianMessage{uname, {comp_name(j), comp_name(k)}, obs, ncov};
        }
        used[msg.subset] = true;
        out.pair_positions.push_back(out.schedule.order.size());
        out.schedule.order.push_back(std::move(msg));
    }
    for (unsigned s = 1; s < (1u << m); ++s) {
        if (used[s]) continue;
        achievable::Message msg;
        msg.subset = s;
        out.schedule.order.push_back(std::move(msg));
    }
    return out;
}

// The converse structure: the full subset family for the binary flavor, and
// the fixed node family built from the odd/even alternation sets for the
// gaussian flavor. Index masks use bit i-1 for component X_i.
struct OddCycleConverse {
    converse::IndexCodingInstance index;     // binary flavor
    converse::SideInfoLattice lattice;       // gaussian flavor
    converse::RdOracle oracle;               // gaussian flavor
};

inline OddCycleConverse odd_cycle_converse_lattice(const OddCycleSpec& spec)
{
    spec.validate();
    int m = spec.m;
    OddCycleConverse out;
    out.index = converse::IndexCodingInstance::odd_cycle(m);
    if (spec.flavor == OddCycleSpec::Flavor::BinaryIndex) return out;

    unsigned odd = 0, even = 0, oplus = 0, eplus = 0, mid = 0, full = (1u << m) - 1;
    for (int i = 1; i <= m; ++i) {
        if (i % 2 == 1 && i != m) odd |= 1u << (i - 1);
        if (i % 2 == 0) even |= 1u << (i - 1);
        if (i <= m - 2) oplus |= 1u << (i - 1);
        if (i >= 2 && i <= m - 1) eplus |= 1u << (i - 1);
        if (i >= 2 && i <= m - 2) mid |= 1u << (i - 1);
    }
    unsigned xm = 1u << (m - 1);
    unsigned join = oplus | eplus;  // X minus the last component
    unsigned mxm = mid | xm;

    converse::SideInfoLattice& lat = out.lattice;
    int n_empty = lat.add_node("{}", 0u);
    int n_odd = lat.add_node("O", odd);
    int n_even = lat.add_node("E", even);
    int n_xm = lat.add_node("Xm", xm);
    int n_oplus = lat.add_node("O+", oplus);
    int n_eplus = lat.add_node("E+", eplus);
    int n_mid = lat.add_node("M", mid);
    int n_join = lat.add_node("OE", join);
    int n_mxm = lat.add_node("MXm", mxm);
    int n_full = lat.add_node("X", full);
    lat.empty_node = n_empty;
    lat.full_node = n_full;
    lat.mono = {{n_empty, n_odd}, {n_empty, n_even}, {n_empty, n_xm}};
    lat.mono_plus = {{n_odd, n_oplus}, {n_even, n_eplus}, {n_join, n_full}, {n_mxm, n_full}};
    lat.submod = {{n_oplus, n_eplus, n_mid, n_join}, {n_mid, n_xm, n_empty, n_mxm}};

    out.oracle.backend = converse::RdBackend::SeparableGaussian;
    out.oracle.components = m;
    for (const auto& dec : out.index.decoders) {
        out.oracle.decoder_side.push_back(dec.side);
        out.oracle.decoder_demand.push_back(dec.demand);
        out.oracle.decoder_distortion.push_back(spec.d);
    }
    return out;
}

// Quadratic (three-point Lagrange) extrapolation of (eps, value) samples to
// eps = 0.
inline double extrapolate_to_zero(const std::vector<std::pair<double, double>>& pts)
{
    double acc = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        double w = 1;
        for (std::size_t j = 0; j < pts.size(); ++j) {
            if (i == j) continue;
            w *= (0.0 - pts[j].first) / (pts[i].first - pts[j].first);
        }
        acc += w * pts[i].second;
    }
    return acc;
}

struct OddCycleReport {
    bool pass = true;
    std::vector<std::string> notes;

    long orderings_checked = 0;
    long distinct_programs = 0;

    // binary flavor
    Rational upper_exact;
    Rational lower_bound_lp;      // subset-entropy LP
    Rational lower_relaxed_lp;    // relaxation at eps = 0

    // gaussian flavor
    double upper = 0;
    double expected = 0;
    double lower_extrapolated = 0;
    std::vector<std::pair<double, double>> lattice_sequence;

    bool feasible_point_ok = false;
    double feasible_bins = 0;       // the explicit point's R_{jk}
    double feasible_codewords = 0;  // the explicit point's R'_{jk}

    void fail(std::string why)
    {
        pass = false;
        notes.push_back(std::move(why));
    }
};

namespace detail {

// Decoder-relative order signature: per decoder, which of its two pair
// messages comes first. Two orderings with equal signatures generate the
// same LP data for this instance family; representatives of every signature
// are built and solved, and a sample of orderings is cross-checked
// row-for-row against its representative.
inline unsigned ordering_signature(const std::vector<int>& perm, int m)
{
    std::vector<int> position(m);
    for (int pos = 0; pos < m; ++pos) position[perm[pos]] = pos;
    unsigned sig = 0;
    for (int dec = 0; dec < m; ++dec) {
        int left = (dec + m - 1) % m;  // message U_{left+1, dec+1}
        if (position[left] < position[dec]) sig |= 1u << dec;
    }
    return sig;
}

inline achievable::MessageSchedule permute_pairs(const OddCycleBuild& build,
                                                 const std::vector<int>& perm)
{
    achievable::MessageSchedule sched;
    for (int idx : perm) sched.order.push_back(build.schedule.order[build.pair_positions[idx]]);
    return sched;
}

// Order-insensitive rendering of a program: rows as sorted term lists keyed
// by variable name, the row set sorted, constraint names dropped. Exact
// coefficients print exactly; floats are rounded enough to absorb summation
// jitter.
inline std::string canonical_program(const lp::LinearProgram& p)
{
    auto coef_text = [](const lp::Coef& c) {
        if (c.exact) return c.rat.to_string();
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.9g", c.value);
        return std::string(buf);
    };
    std::vector<std::string> rows;
    for (const auto& con : p.constraints()) {
        std::map<std::string, std::string> terms;
        for (const auto& [v, c] : con.terms) terms[p.variable_name(v)] = coef_text(c);
        std::string row = lp::relation_text(con.rel);
        for (const auto& [name, c] : terms) row += "|" + name + ":" + c;
        row += "|" + coef_text(con.rhs);
        rows.push_back(std::move(row));
    }
    std::sort(rows.begin(), rows.end());
    std::map<std::string, std::string> obj;
    for (const auto& [v, c] : p.objective()) obj[p.variable_name(v)] = coef_text(c);
    std::string out = "min";
    for (const auto& [name, c] : obj) out += "|" + name + ":" + c;
    for (const auto& r : rows) out += "\n" + r;
    return out;
}

}  // namespace detail

inline OddCycleReport verify_odd_cycle(const OddCycleSpec& spec)
{
    spec.validate();
    OddCycleReport rep;
    const int m = spec.m;
    OddCycleBuild build = odd_cycle_instance(spec);
    const bool binary = spec.flavor == OddCycleSpec::Flavor::BinaryIndex;
    const lp::Mode mode = binary ? lp::Mode::Rational : lp::Mode::Float;

    // The schedule's validity does not depend on the message order; check it
    // once up front.
    {
        std::vector<std::string> violations =
            achievable::check_schedule_validity(build.problem, build.schedule);
        for (const auto& v : violations) rep.fail("schedule invalid: " + v);
        if (!rep.pass) return rep;
    }

    // Upper bound: the achievable LP over every ordering of the pair
    // messages, solved once per distinct order signature.
    std::vector<int> perm(m);
    for (int i = 0; i < m; ++i) perm[i] = i;
    std::map<unsigned, std::pair<Rational, double>> cache;
    std::map<unsigned, std::string> canonical_dump;
    long cross_checked = 0;
    const Rational binary_expect(m, 2);
    const double gauss_expect = m / 4.0 * std::log2(1.0 / spec.d);
    auto build_for = [&](const std::vector<int>& order) {
        achievable::MessageSchedule sched = detail::permute_pairs(build, order);
        achievable::ExtendedModel model(build.problem, sched);
        return achievable::detail::build_from_model(model, mode);
    };
    // Small cycles solve every ordering outright; larger ones solve one
    // program per decoder-relative order signature and spot-check that the
    // signature pins the program down.
    const bool memoize = m > 5;
    do {
        ++rep.orderings_checked;
        unsigned sig = detail::ordering_signature(perm, m);
        auto it = memoize ? cache.find(sig) : cache.end();
        if (it == cache.end()) {
            lp::LinearProgram prog = build_for(perm);
            lp::LpSolution sol = lp::solve(prog, mode);
            if (sol.status != lp::SolveStatus::Optimal)
                throw Error("verify_odd_cycle: achievable LP failed to solve");
            it = cache.insert_or_assign(sig, std::make_pair(sol.value_exact, sol.value)).first;
            canonical_dump[sig] = detail::canonical_program(prog);
        } else if (cross_checked < 64 && rep.orderings_checked % 97 == 0) {
            if (detail::canonical_program(build_for(perm)) != canonical_dump[sig])
                rep.fail("ordering signature mismatch: two orderings with one signature "
                         "produced different programs");
            ++cross_checked;
        }
        const auto& [exact, approx] = it->second;
        if (binary) {
            if (exact != binary_expect)
                rep.fail("achievable LP for an ordering gave " + exact.to_string() +
                         ", expected " + binary_expect.to_string());
        } else if (std::abs(approx - gauss_expect) > 1e-9) {
            rep.fail("achievable LP for an ordering gave " + std::to_string(approx) +
                     ", expected " + std::to_string(gauss_expect));
        }
    } while (std::next_permutation(perm.begin(), perm.end()) && rep.pass);
    rep.distinct_programs = static_cast<long>(cache.size());
    if (binary)
        rep.upper_exact = cache.begin()->second.first;
    else
        rep.upper = cache.begin()->second.second;
    rep.expected = binary ? binary_expect.to_double() : gauss_expect;

    // The paper's explicit feasible point satisfies every constraint of the
    // canonical ordering's program.
    {
        std::vector<int> ident(m);
        for (int i = 0; i < m; ++i) ident[i] = i;
        lp::LinearProgram prog = build_for(ident);
        double rp, r;
        if (binary) {
            rp = 1.5;
            r = 0.5;
        } else {
            double d = spec.d;
            rp = 0.5 * std::log2((1 + d) / (2 * d)) +
                 0.25 * std::log2((1 + d) * (1 + d) / (4 * d));
            r = std::log2((1 + d) / (2 * d)) - rp;
        }
        rep.feasible_bins = r;
        rep.feasible_codewords = rp;
        std::vector<double> point(prog.num_variables());
        for (int v = 0; v < prog.num_variables(); ++v)
            point[v] = prog.variable_name(v)[1] == '\'' ? rp : r;
        rep.feasible_point_ok = true;
        for (const auto& con : prog.constraints()) {
            double lhs = 0;
            for (const auto& [v, c] : con.terms) lhs += c.value * point[v];
            double rhs = con.rhs.value;
            bool ok = con.rel == lp::Relation::GreaterEq ? lhs >= rhs - 1e-9
                      : con.rel == lp::Relation::LessEq  ? lhs <= rhs + 1e-9
                                                         : std::abs(lhs - rhs) <= 1e-9;
            if (!ok) {
                rep.feasible_point_ok = false;
                rep.fail("paper feasible point violates " + con.name);
            }
        }
        double total = 0;
        for (int v = 0; v < prog.num_variables(); ++v)
            if (prog.variable_name(v)[1] != '\'') total += point[v];
        double expect_total = binary ? binary_expect.to_double() : gauss_expect;
        if (std::abs(total - expect_total) > 1e-9)
            rep.fail("paper feasible point total " + std::to_string(total) +
                     " misses the optimum");
    }

    // Converse side.
    OddCycleConverse conv = odd_cycle_converse_lattice(spec);
    if (binary) {
        converse::IndexLpResult hat = converse::index_bound_lp(conv.index);
        converse::IndexLpResult rel = converse::relaxed_index_lp(conv.index, 0.0);
        rep.lower_bound_lp = hat.value;
        rep.lower_relaxed_lp = rel.value;
        if (hat.value != binary_expect)
            rep.fail("index-coding bound LP gave " + hat.value.to_string());
        if (rel.value != binary_expect)
            rep.fail("relaxed index LP gave " + rel.value.to_string());
        if (rep.pass && rep.upper_exact != hat.value) rep.fail("upper and lower bounds differ");
    } else {
        for (double eps : {1e-3, 1e-4, 1e-5}) {
            converse::GeneralLowerResult low =
                converse::solve_general_lower(conv.lattice, conv.oracle, eps, lp::Mode::Float);
            rep.lattice_sequence.push_back({eps, low.value});
        }
        rep.lower_extrapolated = extrapolate_to_zero(rep.lattice_sequence);
        if (std::abs(rep.lower_extrapolated - gauss_expect) > 1e-6)
            rep.fail("lattice LP extrapolates to " + std::to_string(rep.lower_extrapolated) +
                     ", expected " + std::to_string(gauss_expect));
        for (const auto& [eps, value] : rep.lattice_sequence)
            if (value > rep.upper + 1e-9)
                rep.fail("lattice lower bound exceeds the upper bound at eps = " +
                         std::to_string(eps));
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Classical two-decoder constructions
// ---------------------------------------------------------------------------

inline std::vector<std::vector<double>> hamming_table(int n)
{
    std::vector<std::vector<double>> t(n, std::vector<double>(n, 1.0));
    for (int i = 0; i < n; ++i) t[i][i] = 0.0;
    return t;
}

// Doubly symmetric binary Wyner-Ziv instance: fair X, Y1 = BSC(crossover).
inline achievable::ProblemInstance wyner_ziv_binary(double crossover, double target)
{
    pmf::JointPmf base = pmf::JointPmf::fair_bits({"X"}).attach_channel(
        {"Y1", 2}, {"X"}, {{1 - crossover, crossover}, {crossover, 1 - crossover}});
    achievable::ProblemInstance inst;
    inst.joint = std::move(base);
    inst.source = {"X"};
    achievable::DecoderSpec dec;
    dec.side_info = {"Y1"};
    dec.distortion = achievable::Distortion::from_table(hamming_table(2));
    dec.target = {target};
    inst.decoders.push_back(std::move(dec));
    return inst;
}

struct MismatchedBuild {
    converse::MismatchedInputs inputs;
    achievable::ProblemInstance problem;   // m = 2 with the product structure
    achievable::MessageSchedule schedule;  // U12 = (W1,W2) packed, U1, U2
};

// Product-structure instance: (X1,Y11,Y21) independent of (X2,Y12,Y22),
// with X1 <-> Y11 <-> Y21 and X2 <-> Y22 <-> Y12 by construction. Kernels:
// w1k over x1, w2k over x2, u1k rows indexed x1*|W1|+w1, u2k rows indexed
// x2*|W2|+w2. The schedule's common message packs (w1, w2) as w1*|W2|+w2.
inline MismatchedBuild mismatched_product(const std::vector<double>& px1,
                                      const std::vector<std::vector<double>>& y11_given_x1,
                                      const std::vector<std::vector<double>>& y21_given_y11,
                                      const std::vector<double>& px2,
                                      const std::vector<std::vector<double>>& y22_given_x2,
                                      const std::vector<std::vector<double>>& y12_given_y22,
                                      const std::vector<std::vector<double>>& w1k,
                                      const std::vector<std::vector<double>>& w2k,
                                      const std::vector<std::vector<double>>& u1k,
                                      const std::vector<std::vector<double>>& u2k)
{
    int nx1 = static_cast<int>(px1.size()), nx2 = static_cast<int>(px2.size());
    int ny11 = static_cast<int>(y11_given_x1[0].size());
    int ny21 = static_cast<int>(y21_given_y11[0].size());
    int ny22 = static_cast<int>(y22_given_x2[0].size());
    int ny12 = static_cast<int>(y12_given_y22[0].size());
    int nw1 = static_cast<int>(w1k[0].size()), nw2 = static_cast<int>(w2k[0].size());
    int nu1 = static_cast<int>(u1k[0].size()), nu2 = static_cast<int>(u2k[0].size());
    pmf::JointPmf base = pmf::JointPmf::independent({{"X1", nx1}}, {px1})
                             .attach_channel({"Y11", ny11}, {"X1"}, y11_given_x1)
                             .attach_channel({"Y21", ny21}, {"Y11"}, y21_given_y11)
                             .attach_channel({"X2", nx2}, {}, {px2})
                             .attach_channel({"Y22", ny22}, {"X2"}, y22_given_x2)
                             .attach_channel({"Y12", ny12}, {"Y22"}, y12_given_y22);

    MismatchedBuild out{converse::MismatchedInputs{base, "X1", "X2", "Y11", "Y12", "Y21", "Y22",
                                               {{"W1", nw1}, {"X1"}, w1k},
                                               {{"W2", nw2}, {"X2"}, w2k},
                                               {{"U1", nu1}, {"X1", "W1"}, u1k},
                                               {{"U2", nu2}, {"X2", "W2"}, u2k}},
                      {}, {}};

    out.problem.joint = base;
    out.problem.source = {"X1", "X2"};
    achievable::DecoderSpec d1, d2;
    d1.side_info = {"Y11", "Y12"};
    d2.side_info = {"Y21", "Y22"};
    // The comparison harness studies rates; maximal distortion targets keep
    // every schedule feasible.
    d1.distortion = achievable::Distortion::from_table(hamming_table(nx1 * nx2));
    d2.distortion = achievable::Distortion::from_table(hamming_table(nx1 * nx2));
    d1.target = {1.0};
    d2.target = {1.0};
    out.problem.decoders = {d1, d2};

    // U12 = (W1, W2) as one product channel over (X1, X2).
    std::vector<std::vector<double>> packed(std::size_t(nx1) * nx2,
                                            std::vector<double>(std::size_t(nw1) * nw2));
    for (int x1 = 0; x1 < nx1; ++x1)
        for (int x2 = 0; x2 < nx2; ++x2)
            for (int w1 = 0; w1 < nw1; ++w1)
                for (int w2 = 0; w2 < nw2; ++w2)
                    packed[std::size_t(x1) * nx2 + x2][std::size_t(w1) * nw2 + w2] =
                        w1k[x1][w1] * w2k[x2][w2];
    // U1 given (X1, U12) replays u1k on the w1 part; likewise U2.
    std::vector<std::vector<double>> u1_packed(std::size_t(nx1) * nw1 * nw2);
    for (int x1 = 0; x1 < nx1; ++x1)
        for (int w1 = 0; w1 < nw1; ++w1)
            for (int w2 = 0; w2 < nw2; ++w2)
                u1_packed[(std::size_t(x1) * nw1 + w1) * nw2 + w2] = u1k[std::size_t(x1) * nw1 + w1];
    std::vector<std::vector<double>> u2_packed(std::size_t(nx2) * nw1 * nw2);
    for (int x2 = 0; x2 < nx2; ++x2)
        for (int w1 = 0; w1 < nw1; ++w1)
            for (int w2 = 0; w2 < nw2; ++w2)
                u2_packed[(std::size_t(x2) * nw1 + w1) * nw2 + w2] = u2k[std::size_t(x2) * nw2 + w2];

    achievable::Message m12, m1, m2;
    m12.subset = 3u;
    m12.discrete = achievable::DiscreteChannel{{"U12", nw1 * nw2}, {"X1", "X2"}, packed};
    m1.subset = 1u;
    m1.discrete = achievable::DiscreteChannel{{"U1", nu1}, {"X1", "U12"}, u1_packed};
    m2.subset = 2u;
    m2.discrete = achievable::DiscreteChannel{{"U2", nu2}, {"X2", "U12"}, u2_packed};
    out.schedule.order = {m12, m1, m2};
    return out;
}

struct LessNoisyBuild {
    converse::LessNoisyInputs inputs;
    achievable::ProblemInstance problem;
    achievable::MessageSchedule schedule;  // U12 = a(X), U1 degenerate, U2 = W
    int a_alphabet = 0;
};

inline LessNoisyBuild less_noisy(pmf::JointPmf base, const std::string& x,
                                 const std::string& y1, const std::string& y2,
                                 std::vector<int> a_map, achievable::DiscreteChannel w,
                                 double d2_target)
{
    int x_size = base.alphabet_of(base.index_of(x));
    if (static_cast<int>(a_map.size()) != x_size)
        throw Error("less_noisy: a(X) table must cover the source alphabet");
    LessNoisyBuild out{converse::LessNoisyInputs{base, x, y1, y2, a_map, w}, {}, {}, 0};
    out.a_alphabet = 1 + *std::max_element(a_map.begin(), a_map.end());

    out.problem.joint = base;
    out.problem.source = {x};
    achievable::DecoderSpec d1, d2;
    d1.side_info = {y1};
    // Decoder 1 must recover a(X) exactly: indicator distortion at target 0.
    std::vector<std::vector<double>> ind(x_size, std::vector<double>(out.a_alphabet, 1.0));
    for (int v = 0; v < x_size; ++v) ind[v][a_map[v]] = 0.0;
    d1.distortion = achievable::Distortion::from_table(ind);
    d1.target = {0.0};
    d2.side_info = {y2};
    d2.distortion = achievable::Distortion::from_table(hamming_table(x_size));
    d2.target = {d2_target};
    out.problem.decoders = {d1, d2};

    achievable::Message m12, m1, m2;
    m12.subset = 3u;
    std::vector<std::vector<double>> akernel(x_size, std::vector<double>(out.a_alphabet, 0.0));
    for (int v = 0; v < x_size; ++v) akernel[v][a_map[v]] = 1.0;
    m12.discrete = achievable::DiscreteChannel{{"aX", out.a_alphabet}, {x}, akernel};
    m1.subset = 1u;  // degenerate
    m2.subset = 2u;
    m2.discrete = w;
    out.schedule.order = {m12, m1, m2};
    return out;
}

}  // namespace rdlp::instances

#endif
