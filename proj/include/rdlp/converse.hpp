#ifndef RDLP_CONVERSE_HPP
#define RDLP_CONVERSE_HPP

// Converse side: the index-coding LP bound and its relaxation, their exact
// equivalence check, the computable generalized-side-information lattice LP,
// and the minimax / mismatched / conditionally-less-noisy evaluators for
// fixed auxiliaries.

#include <bit>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "rdlp/achievable.hpp"
#include "rdlp/lp.hpp"

namespace rdlp::converse {

// ---------------------------------------------------------------------------
// Index coding instances and the decode relation
// ---------------------------------------------------------------------------

struct IndexCodingDecoder {
    unsigned side = 0;    // bitmask over source bits
    unsigned demand = 0;  // disjoint from side
};

struct IndexCodingInstance {
    int bits = 0;
    std::vector<IndexCodingDecoder> decoders;

    void validate() const
    {
        if (bits < 1 || bits > 12)
            throw Error("IndexCodingInstance: bit count " + std::to_string(bits) +
                        " outside [1,12]");
        unsigned all = full_mask();
        for (const auto& d : decoders) {
            if (d.side & ~all) throw Error("IndexCodingInstance: side set outside the source");
            if (d.demand & ~all) throw Error("IndexCodingInstance: demand outside the source");
            if (d.side & d.demand)
                throw Error("IndexCodingInstance: demand overlaps own side information");
        }
    }

    unsigned full_mask() const { return (1u << bits) - 1; }

    static IndexCodingInstance odd_cycle(int m)
    {
        if (m < 5 || m % 2 == 0) throw Error("odd cycle needs odd m >= 5");
        IndexCodingInstance inst;
        inst.bits = m;
        for (int i = 0; i < m; ++i) {
            unsigned prev = 1u << ((i + m - 1) % m), next = 1u << ((i + 1) % m);
            inst.decoders.push_back({prev | next, 1u << i});
        }
        return inst;
    }
};

// S(A): every bit demanded by a decoder whose side information lies in A.
inline unsigned decode_set(const IndexCodingInstance& inst, unsigned a)
{
    unsigned s = 0;
    for (const auto& d : inst.decoders)
        if ((d.side & ~a) == 0) s |= d.demand;
    return s;
}

// A ~> B: A is contained in B and everything in B \ A is decodable from A.
inline bool leads_to(const IndexCodingInstance& inst, unsigned a, unsigned b)
{
    if (a & ~b) return false;
    return (b & ~a & ~decode_set(inst, a)) == 0;
}

// Fixpoint of A <- A | S(A).
inline unsigned decode_closure(const IndexCodingInstance& inst, unsigned a)
{
    for (;;) {
        unsigned next = a | decode_set(inst, a);
        if (next == a) return a;
        a = next;
    }
}

inline std::string subset_label(unsigned mask)
{
    std::string out = "{";
    bool first = true;
    for (int i = 0; mask >> i; ++i)
        if (mask >> i & 1u) {
            if (!first) out += ",";
            first = false;
            out += std::to_string(i + 1);
        }
    return out + "}";
}

// ---------------------------------------------------------------------------
// Index-coding LP builders: the entropy-space bound and its K-space relaxation
// ---------------------------------------------------------------------------

struct IndexLpOptions {
    bool starred_rows = false;     // initialize*/slope* variant of the bound LP
    int full_family_max_bits = 6;  // generating rows + closure merging beyond this
    lp::SolveOptions solver;
};

struct IndexLpResult {
    lp::SolveStatus status = lp::SolveStatus::Optimal;
    Rational value;  // exact optimum when `exact`
    double value_f = 0.0;
    bool exact = false;
    lp::LinearProgram program;
    lp::LpSolution solution;
    bool reduced = false;  // generating rows over decode-closure classes
};

namespace detail {

// One LP variable per subset, or per decode-closure class in reduced builds.
// In the relaxation's K-space the merge carries the affine offset
// K(A) = K(cl A) + |cl A \ A| that its own slope and monotonicity+ rows force.
struct IndexVars {
    std::vector<int> var_of;
    std::vector<Rational> offset;
    int count = 0;
};

inline IndexVars make_index_vars(const IndexCodingInstance& inst, lp::LinearProgram& prog,
                                 bool reduced, bool relaxed_offsets)
{
    unsigned n = 1u << inst.bits;
    IndexVars v;
    v.var_of.assign(n, -1);
    v.offset.assign(n, Rational(0));
    std::map<unsigned, int> var_of_rep;
    for (unsigned a = 0; a < n; ++a) {
        unsigned r = reduced ? decode_closure(inst, a) : a;
        if (relaxed_offsets && reduced) v.offset[a] = Rational(std::popcount(r & ~a));
        auto it = var_of_rep.find(r);
        if (it == var_of_rep.end()) {
            it = var_of_rep.insert({r, prog.add_variable("K" + subset_label(r))}).first;
            ++v.count;
        }
        v.var_of[a] = it->second;
    }
    return v;
}

// Accumulates rows in canonical form and drops duplicates and tautologies.
class RowSet {
public:
    explicit RowSet(lp::LinearProgram* prog) : prog_(prog) {}

    void add(std::string name, const std::map<int, Rational>& terms_in, lp::Relation rel,
             const Rational& rhs)
    {
        std::map<int, Rational> terms;
        for (const auto& [v, c] : terms_in)
            if (!c.is_zero()) terms.insert({v, c});
        if (terms.empty()) {
            bool ok = rel == lp::Relation::GreaterEq ? rhs.sign() <= 0
                      : rel == lp::Relation::LessEq  ? rhs.sign() >= 0
                                                     : rhs.is_zero();
            if (!ok) throw Error("index LP: contradictory degenerate row " + name);
            return;
        }
        std::string key = rel == lp::Relation::GreaterEq ? "G" : rel == lp::Relation::LessEq ? "L" : "E";
        for (const auto& [v, c] : terms) key += "|" + std::to_string(v) + ":" + c.to_string();
        key += "|" + rhs.to_string();
        if (!seen_.insert(std::move(key)).second) return;
        std::vector<std::pair<int, lp::Coef>> out;
        for (const auto& [v, c] : terms) out.push_back({v, lp::Coef(c)});
        prog_->add_constraint(std::move(name), std::move(out), rel, lp::Coef(rhs));
    }

private:
    lp::LinearProgram* prog_;
    std::set<std::string> seen_;
};

// A row over subset masks; representative variables and offsets are folded
// in, with offsets moving to the right-hand side.
struct MaskRow {
    const IndexVars* vars;
    std::map<int, Rational> terms;
    Rational rhs_shift;

    explicit MaskRow(const IndexVars& v) : vars(&v) {}
    MaskRow& add(unsigned mask, int sign)
    {
        Rational& slot = terms[vars->var_of[mask]];
        slot = slot + Rational(sign);
        rhs_shift = rhs_shift - Rational(sign) * vars->offset[mask];
        return *this;
    }
};

// Enumerates strict subset pairs a < b of [0, 2^k) by submask iteration.
template <class Fn>
void for_each_strict_pair(unsigned n, Fn&& fn)
{
    for (unsigned b = 0; b < n; ++b) {
        if (b == 0) continue;
        for (unsigned a = (b - 1) & b;; a = (a - 1) & b) {
            fn(a, b);
            if (a == 0) break;
        }
    }
}

}  // namespace detail

// The entropy-space LP bound for index coding over subsets of the source:
// initialize, slope, monotonicity, decode equalities, submodularity. Solved
// in exact rational arithmetic.
inline IndexLpResult index_bound_lp(const IndexCodingInstance& inst, IndexLpOptions opt = {})
{
    inst.validate();
    unsigned n = 1u << inst.bits;
    bool reduced = inst.bits > opt.full_family_max_bits;
    IndexLpResult res;
    res.reduced = reduced;
    lp::LinearProgram& prog = res.program;
    detail::IndexVars vars = detail::make_index_vars(inst, prog, reduced, false);
    detail::RowSet rows(&prog);
    unsigned full = inst.full_mask();

    rows.add("initialize", detail::MaskRow(vars).add(full, +1).terms,
             opt.starred_rows ? lp::Relation::Equal : lp::Relation::GreaterEq,
             Rational(inst.bits));

    auto slope_row = [&](unsigned a, unsigned b) {
        unsigned free_bits = opt.starred_rows ? b & ~(decode_set(inst, a) | a) : b & ~a;
        rows.add("slope" + subset_label(a) + subset_label(b),
                 detail::MaskRow(vars).add(a, +1).add(b, -1).terms, lp::Relation::GreaterEq,
                 Rational(-std::popcount(free_bits)));
    };
    auto mono_row = [&](unsigned a, unsigned b) {
        rows.add("mono" + subset_label(a) + subset_label(b),
                 detail::MaskRow(vars).add(b, +1).add(a, -1).terms, lp::Relation::GreaterEq,
                 Rational(0));
    };
    auto submod_row = [&](unsigned a, unsigned b) {
        rows.add("submod" + subset_label(a) + subset_label(b),
                 detail::MaskRow(vars).add(a, +1).add(b, +1).add(a & b, -1).add(a | b, -1).terms,
                 lp::Relation::GreaterEq, Rational(0));
    };

    if (!reduced) {
        detail::for_each_strict_pair(n, [&](unsigned a, unsigned b) {
            slope_row(a, b);
            mono_row(a, b);
            if (leads_to(inst, a, b))
                rows.add("decode" + subset_label(a) + subset_label(b),
                         detail::MaskRow(vars).add(a, +1).add(b, -1).terms, lp::Relation::Equal,
                         Rational(0));
        });
        for (unsigned a = 0; a < n; ++a)
            for (unsigned b = a + 1; b < n; ++b) {
                if ((a & ~b) == 0 || (b & ~a) == 0) continue;
                submod_row(a, b);
            }
    } else {
        for (unsigned s = 0; s < n; ++s)
            for (int i = 0; i < inst.bits; ++i) {
                if (s >> i & 1u) continue;
                unsigned si = s | 1u << i;
                slope_row(s, si);
                mono_row(s, si);
                for (int j = i + 1; j < inst.bits; ++j) {
                    if (s >> j & 1u) continue;
                    unsigned sj = s | 1u << j;
                    rows.add("submod" + subset_label(s) + "+" + std::to_string(i + 1) + "," +
                                 std::to_string(j + 1),
                             detail::MaskRow(vars)
                                 .add(si, +1)
                                 .add(sj, +1)
                                 .add(s, -1)
                                 .add(si | sj, -1)
                                 .terms,
                             lp::Relation::GreaterEq, Rational(0));
                }
            }
    }
    prog.set_objective({{vars.var_of[0], lp::Coef(1)}});
    res.solution = lp::solve(prog, lp::Mode::Rational, opt.solver);
    res.status = res.solution.status;
    if (res.status == lp::SolveStatus::Optimal) {
        res.value = res.solution.value_exact;
        res.value_f = res.solution.value;
        res.exact = true;
    }
    return res;
}

// The K-space relaxation of the generalized-side-information LP specialized
// to index coding: initialize K(X) = 0, non-negative variables, slope,
// monotonicity, monotonicity+ with the -eps log2|S(A)| slack, submodularity,
// objective K(empty) - eps. Exact rational at eps = 0; floating otherwise
// since log2|S(A)| need not be rational.
inline IndexLpResult relaxed_index_lp(const IndexCodingInstance& inst, double eps,
                                      IndexLpOptions opt = {})
{
    inst.validate();
    if (eps < 0) throw Error("relaxed_index_lp: eps must be >= 0");
    unsigned n = 1u << inst.bits;
    bool rational = eps == 0.0;
    bool reduced = rational && inst.bits > opt.full_family_max_bits;
    IndexLpResult res;
    res.reduced = reduced;
    lp::LinearProgram& prog = res.program;
    detail::IndexVars vars = detail::make_index_vars(inst, prog, reduced, true);
    detail::RowSet rows(&prog);
    unsigned full = inst.full_mask();

    auto eps_slack = [&](unsigned a) {
        int s = std::popcount(decode_set(inst, a));
        return s > 1 ? eps * std::log2(double(s)) : 0.0;
    };

    {
        detail::MaskRow r(vars);
        r.add(full, +1);
        rows.add("initialize", r.terms, lp::Relation::Equal, r.rhs_shift);
    }

    auto pair_rows = [&](unsigned a, unsigned b) {
        int gap = std::popcount(b & ~a);
        int decodable = std::popcount(b & decode_set(inst, a) & ~a);
        {
            detail::MaskRow r(vars);
            r.add(b, +1).add(a, -1);
            rows.add("slope" + subset_label(a) + subset_label(b), r.terms,
                     lp::Relation::GreaterEq, Rational(-gap) + r.rhs_shift);
        }
        {
            detail::MaskRow r(vars);
            r.add(a, +1).add(b, -1);
            rows.add("mono" + subset_label(a) + subset_label(b), r.terms, lp::Relation::GreaterEq,
                     r.rhs_shift);
        }
        double slack = eps_slack(a);
        if (decodable > 0 || slack > 0) {
            detail::MaskRow r(vars);
            r.add(a, +1).add(b, -1);
            if (rational)
                rows.add("monoplus" + subset_label(a) + subset_label(b), r.terms,
                         lp::Relation::GreaterEq, Rational(decodable) + r.rhs_shift);
            else {
                std::vector<std::pair<int, lp::Coef>> terms;
                for (const auto& [v, c] : r.terms)
                    if (!c.is_zero()) terms.push_back({v, lp::Coef(c)});
                prog.add_constraint("monoplus" + subset_label(a) + subset_label(b),
                                    std::move(terms), lp::Relation::GreaterEq,
                                    lp::Coef(double(decodable) - slack + r.rhs_shift.to_double()));
            }
        }
    };
    auto submod_row = [&](unsigned a, unsigned b, const std::string& name) {
        detail::MaskRow r(vars);
        r.add(a, +1).add(b, +1).add(a & b, -1).add(a | b, -1);
        rows.add(name, r.terms, lp::Relation::GreaterEq, r.rhs_shift);
    };

    if (!reduced) {
        detail::for_each_strict_pair(n, pair_rows);
        for (unsigned a = 0; a < n; ++a)
            for (unsigned b = a + 1; b < n; ++b) {
                if ((a & ~b) == 0 || (b & ~a) == 0) continue;
                submod_row(a, b, "submod" + subset_label(a) + subset_label(b));
            }
    } else {
        for (unsigned s = 0; s < n; ++s)
            for (int i = 0; i < inst.bits; ++i) {
                if (s >> i & 1u) continue;
                unsigned si = s | 1u << i;
                pair_rows(s, si);
                for (int j = i + 1; j < inst.bits; ++j) {
                    if (s >> j & 1u) continue;
                    submod_row(si, s | 1u << j,
                               "submod" + subset_label(s) + "+" + std::to_string(i + 1) + "," +
                                   std::to_string(j + 1));
                }
            }
    }
    prog.set_objective({{vars.var_of[0], lp::Coef(1)}});
    res.solution = lp::solve(prog, rational ? lp::Mode::Rational : lp::Mode::Float, opt.solver);
    res.status = res.solution.status;
    if (res.status == lp::SolveStatus::Optimal) {
        if (rational) {
            res.value = res.solution.value_exact + vars.offset[0];
            res.value_f = res.value.to_double();
            res.exact = true;
        } else {
            res.value_f = res.solution.value + vars.offset[0].to_double() - eps;
        }
    }
    return res;
}

struct EquivalenceReport {
    bool equal = false;
    Rational bound_value;       // entropy-space bound optimum
    Rational relaxation_value;  // relaxation optimum at eps = 0
};

// The bound LP and the eps = 0 relaxation are reparametrizations of each
// other (K^(A) = K(A) + H(A)); their optima must agree exactly.
inline EquivalenceReport index_lp_equivalence(const IndexCodingInstance& inst,
                                              IndexLpOptions opt = {})
{
    if (inst.bits > 10) throw Error("index_lp_equivalence: limited to 10 bits");
    IndexLpResult hat = index_bound_lp(inst, opt);
    IndexLpResult rel = relaxed_index_lp(inst, 0.0, opt);
    if (hat.status != lp::SolveStatus::Optimal || rel.status != lp::SolveStatus::Optimal)
        throw Error("index_lp_equivalence: LP did not solve");
    EquivalenceReport rep;
    rep.bound_value = hat.value;
    rep.relaxation_value = rel.value;
    rep.equal = hat.value == rel.value;
    return rep;
}

// ---------------------------------------------------------------------------
// Conditional rate-distortion backends for the lattice monotonicity+ rows
// ---------------------------------------------------------------------------

enum class RdBackend { SeparableLossless, SeparableGaussian, ExhaustiveSmallAlphabet };

// Separable problems: independent source components demanded by decoders
// whose side information is a component subset. The per-edge value of
// R(D_A + eps) chains down to a sum over the components of B \ A that some
// A-covered decoder demands.
struct RdOracle {
    RdBackend backend = RdBackend::SeparableLossless;
    int components = 0;
    std::vector<unsigned> decoder_side;
    std::vector<unsigned> decoder_demand;
    std::vector<double> decoder_distortion;  // per decoder, gaussian backend
    // Optional externally supplied evaluator (e.g. the exhaustive search);
    // values from it are heuristic upper bounds on the true minimum.
    std::function<double(unsigned a, unsigned b, double eps)> custom;

    bool heuristic() const { return backend == RdBackend::ExhaustiveSmallAlphabet; }

    double edge_rate(unsigned a, unsigned b, double eps, const std::string& edge_name) const
    {
        if (backend == RdBackend::ExhaustiveSmallAlphabet) {
            if (!custom)
                throw Error("RdOracle: exhaustive backend has no evaluator for edge " + edge_name);
            return custom(a, b, eps);
        }
        double total = 0;
        for (std::size_t i = 0; i < decoder_side.size(); ++i) {
            if (decoder_side[i] & ~a) continue;  // not degraded w.r.t. A
            unsigned comps = decoder_demand[i] & b & ~a;
            int cnt = std::popcount(comps);
            if (cnt == 0) continue;
            if (backend == RdBackend::SeparableLossless) {
                total += cnt;  // H(X_i) = one bit per demanded component
            } else {
                double d = decoder_distortion.at(i) + eps;
                if (d <= 0)
                    throw Error("RdOracle: nonpositive gaussian distortion on edge " + edge_name);
                // Unit-variance components need no rate at or beyond D = 1.
                if (d < 1) total += cnt * 0.5 * std::log2(1.0 / d);
            }
        }
        return total;
    }
};

// Exhaustive small-alphabet search for R(D_A) = min I(B;V|A) subject to the
// covered decoders reconstructing within their targets. A grid search over
// conditional kernels p(v|b); the result is an upper bound on the true
// minimum and is flagged as such by callers.
struct RdRequest {
    pmf::JointPmf joint;
    pmf::NameList b_vars;
    pmf::NameList a_vars;
    struct Covered {
        pmf::NameList side;
        std::vector<std::vector<double>> distortion;  // over packed source values
        pmf::NameList source;
        double target = 0;
    };
    std::vector<Covered> covered;
    int v_alphabet = 2;   // <= 6
    int resolution = 4;   // grid steps per kernel row
};

struct RdValue {
    double value = 0;
    bool heuristic_upper_bound = true;
    long kernels_searched = 0;
};

inline RdValue conditional_rate_distortion_exhaustive(const RdRequest& req)
{
    if (req.v_alphabet < 1 || req.v_alphabet > 6)
        throw Error("exhaustive rate-distortion: |V| must lie in [1,6]");
    std::size_t bcells = 1;
    for (int idx : req.joint.resolve(req.b_vars))
        bcells *= req.joint.alphabet_of(idx);
    if (req.joint.cells() * req.v_alphabet > (std::size_t(1) << 16))
        throw Error("exhaustive rate-distortion: alphabet product exceeds 2^16");
    // All compositions of `resolution` into v_alphabet parts.
    std::vector<std::vector<double>> rows;
    std::vector<int> comp(req.v_alphabet, 0);
    std::function<void(int, int)> gen = [&](int pos, int left) {
        if (pos == req.v_alphabet - 1) {
            comp[pos] = left;
            std::vector<double> row(req.v_alphabet);
            for (int i = 0; i < req.v_alphabet; ++i)
                row[i] = double(comp[i]) / double(req.resolution);
            rows.push_back(std::move(row));
            return;
        }
        for (int take = 0; take <= left; ++take) {
            comp[pos] = take;
            gen(pos + 1, left - take);
        }
    };
    gen(0, req.resolution);
    double combos = std::pow(double(rows.size()), double(bcells));
    if (combos > 2e6)
        throw Error("exhaustive rate-distortion: " + std::to_string(rows.size()) + "^" +
                    std::to_string(bcells) + " kernels exceed the search limit");
    RdValue best;
    best.value = std::numeric_limits<double>::infinity();
    std::vector<std::size_t> pick(bcells, 0);
    for (;;) {
        std::vector<std::vector<double>> kernel(bcells);
        for (std::size_t r = 0; r < bcells; ++r) kernel[r] = rows[pick[r]];
        pmf::JointPmf with_v =
            req.joint.attach_channel({"Vrd", req.v_alphabet}, req.b_vars, kernel);
        ++best.kernels_searched;
        bool feasible = true;
        for (const auto& cov : req.covered) {
            pmf::NameList known = cov.side;
            known.push_back("Vrd");
            double got = achievable::optimal_expected_distortion(with_v, known, cov.source,
                                                                 cov.distortion);
            if (got > cov.target + 1e-9) {
                feasible = false;
                break;
            }
        }
        if (feasible) {
            double rate = with_v.mutual_information_general(req.b_vars, {"Vrd"}, req.a_vars);
            best.value = std::min(best.value, rate);
        }
        // advance the odometer
        std::size_t pos = 0;
        while (pos < bcells) {
            if (++pick[pos] < rows.size()) break;
            pick[pos] = 0;
            ++pos;
        }
        if (pos == bcells) break;
    }
    return best;
}

// ---------------------------------------------------------------------------
// The generalized-side-information lattice LP
// ---------------------------------------------------------------------------

struct SideInfoLattice {
    struct Node {
        std::string name;
        bool has_members = false;
        unsigned members = 0;  // subset of source components when meaningful
    };
    struct MonoEdge {
        int a, b;  // K(a) >= K(b)
    };
    struct MonoPlusEdge {
        int a, b;  // K(a) >= K(b) + R(D_a + eps 1)
    };
    struct SubmodTriple {
        int a, b, meet, join;  // K(a) + K(b) >= K(meet) + K(join)
    };

    std::vector<Node> nodes;
    int empty_node = -1;
    int full_node = -1;
    std::vector<MonoEdge> mono;
    std::vector<MonoPlusEdge> mono_plus;
    std::vector<SubmodTriple> submod;

    int add_node(std::string name)
    {
        nodes.push_back({std::move(name), false, 0});
        return static_cast<int>(nodes.size()) - 1;
    }
    int add_node(std::string name, unsigned members)
    {
        nodes.push_back({std::move(name), true, members});
        return static_cast<int>(nodes.size()) - 1;
    }

    void validate() const
    {
        if (empty_node < 0 || full_node < 0)
            throw Error("SideInfoLattice: the empty and full nodes are required");
        auto in_range = [&](int i) { return i >= 0 && i < static_cast<int>(nodes.size()); };
        for (const auto& e : mono)
            if (!in_range(e.a) || !in_range(e.b))
                throw Error("SideInfoLattice: monotonicity edge references a missing node");
        for (const auto& e : mono_plus) {
            if (!in_range(e.a) || !in_range(e.b))
                throw Error("SideInfoLattice: monotonicity+ edge references a missing node");
            if (nodes[e.a].has_members && nodes[e.b].has_members &&
                (nodes[e.a].members & ~nodes[e.b].members))
                throw Error("SideInfoLattice: degraded edge " + nodes[e.a].name + " -> " +
                            nodes[e.b].name + " is not a containment");
        }
        for (const auto& t : submod) {
            if (!in_range(t.a) || !in_range(t.b) || !in_range(t.meet) || !in_range(t.join))
                throw Error("SideInfoLattice: submodularity triple references a missing node");
            if (nodes[t.a].has_members && nodes[t.b].has_members && nodes[t.meet].has_members &&
                nodes[t.join].has_members) {
                if (nodes[t.meet].members != (nodes[t.a].members & nodes[t.b].members) ||
                    nodes[t.join].members != (nodes[t.a].members | nodes[t.b].members))
                    throw Error("SideInfoLattice: submodularity triple (" + nodes[t.a].name +
                                ", " + nodes[t.b].name + ") has wrong meet/join");
            }
        }
        // Degraded edges must flow toward the full node: containment gives a
        // DAG whenever member sets are declared.
    }
};

inline lp::LinearProgram build_general_lower_lp(const SideInfoLattice& lattice,
                                                const RdOracle& oracle, double eps,
                                                lp::Mode mode = lp::Mode::Float)
{
    lattice.validate();
    lp::LinearProgram prog;
    std::vector<int> var;
    for (const auto& node : lattice.nodes) var.push_back(prog.add_variable("K" + node.name));
    auto coef = [&](double v) {
        return mode == lp::Mode::Rational ? lp::Coef(Rational::snap(v)) : lp::Coef(v);
    };
    prog.add_constraint("initialize", {{var[lattice.full_node], lp::Coef(1)}},
                        lp::Relation::Equal, lp::Coef(0));
    for (std::size_t i = 0; i < lattice.mono.size(); ++i) {
        const auto& e = lattice.mono[i];
        prog.add_constraint("mono_" + lattice.nodes[e.a].name + "_" + lattice.nodes[e.b].name,
                            {{var[e.a], lp::Coef(1)}, {var[e.b], lp::Coef(-1)}},
                            lp::Relation::GreaterEq, lp::Coef(0));
    }
    for (std::size_t i = 0; i < lattice.mono_plus.size(); ++i) {
        const auto& e = lattice.mono_plus[i];
        std::string name =
            "monoplus_" + lattice.nodes[e.a].name + "_" + lattice.nodes[e.b].name;
        if (!lattice.nodes[e.a].has_members || !lattice.nodes[e.b].has_members)
            throw Error("build_general_lower_lp: edge " + name +
                        " has no member sets; the rate oracle cannot evaluate it");
        double rate = oracle.edge_rate(lattice.nodes[e.a].members, lattice.nodes[e.b].members,
                                       eps, name);
        prog.add_constraint(name, {{var[e.a], lp::Coef(1)}, {var[e.b], lp::Coef(-1)}},
                            lp::Relation::GreaterEq, coef(rate));
    }
    for (std::size_t i = 0; i < lattice.submod.size(); ++i) {
        const auto& t = lattice.submod[i];
        prog.add_constraint("submod_" + lattice.nodes[t.a].name + "_" + lattice.nodes[t.b].name,
                            {{var[t.a], lp::Coef(1)},
                             {var[t.b], lp::Coef(1)},
                             {var[t.meet], lp::Coef(-1)},
                             {var[t.join], lp::Coef(-1)}},
                            lp::Relation::GreaterEq, lp::Coef(0));
    }
    prog.set_objective({{var[lattice.empty_node], lp::Coef(1)}});
    return prog;
}

struct GeneralLowerResult {
    double value = 0;  // K(empty) optimum - eps
    Rational value_exact;
    bool exact = false;
    bool heuristic = false;  // some edge used the flagged exhaustive backend
    lp::LinearProgram program;
    lp::LpSolution solution;
};

inline GeneralLowerResult solve_general_lower(const SideInfoLattice& lattice,
                                              const RdOracle& oracle, double eps,
                                              lp::Mode mode = lp::Mode::Float)
{
    GeneralLowerResult res;
    res.program = build_general_lower_lp(lattice, oracle, eps, mode);
    res.solution = lp::solve(res.program, mode);
    if (res.solution.status != lp::SolveStatus::Optimal)
        throw Error("solve_general_lower: lattice LP did not solve to optimality");
    res.heuristic = oracle.heuristic();
    res.value = res.solution.value - eps;
    if (mode == lp::Mode::Rational) {
        res.exact = true;
        res.value_exact = res.solution.value_exact - Rational::snap(eps);
    }
    return res;
}

// ---------------------------------------------------------------------------
// Minimax lower-bound evaluator (fixed auxiliaries)
// ---------------------------------------------------------------------------

struct MinimaxAux {
    achievable::Message common;                  // V; may be degenerate
    std::vector<achievable::Message> per_decoder;  // U_{Y_i}, one per decoder
};

// Evaluates the permutation-maximized telescoping sum for the supplied
// auxiliaries, minus eps. This is the inner value for fixed auxiliaries: it
// upper-bounds the sup-inf only when the caller supplies the minimizing
// auxiliaries.
inline double minimax_bound(const achievable::ProblemInstance& inst, const MinimaxAux& aux,
                            double eps)
{
    inst.validate();
    int m = inst.m();
    if (m > 8) throw Error("minimax_bound: permutation enumeration capped at m = 8");
    if (static_cast<int>(aux.per_decoder.size()) != m)
        throw Error("minimax_bound: need one auxiliary per decoder");

    achievable::Model model(inst);
    pmf::NameList common_group;
    if (!aux.common.degenerate()) common_group.push_back(model.attach(aux.common));
    std::vector<pmf::NameList> u_groups(m);
    for (int i = 0; i < m; ++i)
        if (!aux.per_decoder[i].degenerate())
            u_groups[i].push_back(model.attach(aux.per_decoder[i]));

    // Condition 2 checks: Markov structure and per-decoder distortion
    // achievability with (V, U_{Y_i}, Y_i).
    std::vector<std::string> failures;
    {
        pmf::NameList all_aux = common_group, all_side;
        for (const auto& g : u_groups)
            for (const auto& n : g) all_aux.push_back(n);
        for (int l = 0; l < m; ++l)
            for (const auto& n : model.side_group(l)) all_side.push_back(n);
        if (!all_aux.empty()) {
            double leak = model.mi(all_side, all_aux, model.source_group());
            if (leak > 1e-9)
                failures.push_back("auxiliaries break (Y1..Ym) <-> X <-> (V,U): I = " +
                                   std::to_string(leak));
        }
    }
    for (int l = 0; l < m; ++l) {
        const auto& dec = inst.decoders[l];
        pmf::NameList known = model.side_group(l);
        for (const auto& n : common_group) known.push_back(n);
        for (const auto& n : u_groups[l]) known.push_back(n);
        if (inst.discrete()) {
            double got = achievable::optimal_expected_distortion(model.joint(), known,
                                                                 inst.source,
                                                                 dec.distortion.table);
            if (got > dec.target.at(0) + eps + 1e-9)
                failures.push_back("decoder " + std::to_string(l + 1) + " distortion " +
                                   std::to_string(got) + " exceeds target + eps");
        } else {
            std::vector<double> diag =
                achievable::conditional_diagonal(model.system(), inst.source, known);
            for (std::size_t i = 0; i < diag.size(); ++i)
                if (diag[i] > dec.target.at(i) + eps + 1e-9) {
                    failures.push_back("decoder " + std::to_string(l + 1) + " component " +
                                       std::to_string(i + 1) + " MSE " + std::to_string(diag[i]) +
                                       " exceeds target + eps");
                    break;
                }
        }
    }
    if (!failures.empty()) {
        std::string what = "minimax_bound: invalid auxiliaries:";
        for (const auto& f : failures) what += "\n  " + f;
        throw Error(what);
    }

    std::vector<int> perm(m);
    for (int i = 0; i < m; ++i) perm[i] = i;
    pmf::NameList x = model.source_group();
    double best = -std::numeric_limits<double>::infinity();
    do {
        double total = 0;
        pmf::NameList seen_u = common_group, seen_y;
        for (int pos = 0; pos < m; ++pos) {
            int l = perm[pos];
            for (const auto& n : model.side_group(l)) seen_y.push_back(n);
            pmf::NameList cond = seen_y;
            pmf::NameList target = u_groups[l];
            if (pos == 0) {
                for (const auto& n : common_group) target.push_back(n);
            } else {
                for (const auto& n : seen_u) cond.push_back(n);
            }
            if (!target.empty()) total += model.mi(x, target, cond);
            for (const auto& n : u_groups[l]) seen_u.push_back(n);
        }
        best = std::max(best, total);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best - eps;
}

// ---------------------------------------------------------------------------
// Mismatched two-decoder expression (fixed auxiliaries)
// ---------------------------------------------------------------------------

struct MismatchedInputs {
    pmf::JointPmf base;  // joint over the six named variables below
    std::string x1, x2, y11, y12, y21, y22;
    achievable::DiscreteChannel w1;  // given {x1}
    achievable::DiscreteChannel w2;  // given {x2}
    achievable::DiscreteChannel u1;  // given {x1, w1}
    achievable::DiscreteChannel u2;  // given {x2, w2}
};

// max{R1, R2} of the mismatched rate-distortion expression for the supplied
// auxiliaries. The instance must satisfy the product and degradation
// structure; violations are errors.
inline double mismatched_expression(const MismatchedInputs& in)
{
    const pmf::JointPmf& p = in.base;
    if (p.mutual_information_general({in.x1, in.y11, in.y21}, {in.x2, in.y12, in.y22}, {}) > 1e-9)
        throw Error("mismatched_expression: the two component triples are not independent");
    if (!p.is_markov_chain({in.x1}, {in.y11}, {in.y21}, 1e-9))
        throw Error("mismatched_expression: X1 <-> Y11 <-> Y21 fails");
    if (!p.is_markov_chain({in.x2}, {in.y22}, {in.y12}, 1e-9))
        throw Error("mismatched_expression: X2 <-> Y22 <-> Y12 fails");
    pmf::JointPmf j = p.attach_channel(in.w1.var, in.w1.given, in.w1.kernel)
                          .attach_channel(in.w2.var, in.w2.given, in.w2.kernel);
    j = j.attach_channel(in.u1.var, in.u1.given, in.u1.kernel)
            .attach_channel(in.u2.var, in.u2.given, in.u2.kernel);
    std::string w1 = in.w1.var.name, w2 = in.w2.var.name;
    std::string u1 = in.u1.var.name, u2 = in.u2.var.name;
    double tail = j.mutual_information_general({in.x1}, {u1}, {in.y11, w1}) +
                  j.mutual_information_general({in.x2}, {u2}, {in.y22, w2});
    double r1 = j.mutual_information_general({in.x1}, {w1}, {in.y11}) +
                j.mutual_information_general({in.x2}, {w2}, {in.y12}) + tail;
    double r2 = j.mutual_information_general({in.x1}, {w1}, {in.y21}) +
                j.mutual_information_general({in.x2}, {w2}, {in.y22}) + tail;
    return std::max(r1, r2);
}

// ---------------------------------------------------------------------------
// Conditionally-less-noisy expression (fixed W)
// ---------------------------------------------------------------------------

struct LessNoisyInputs {
    pmf::JointPmf base;  // joint over {x, y1, y2}
    std::string x, y1, y2;
    std::vector<int> a_map;          // a(X), one value per source letter
    achievable::DiscreteChannel w;   // given {x}
};

// H(a(X)|Y1) + I(X; W | a(X), Y2) for the supplied deterministic map and W.
inline double less_noisy_expression(const LessNoisyInputs& in)
{
    if (in.a_map.empty()) throw Error("less_noisy_expression: missing deterministic map a");
    int x_idx = in.base.index_of(in.x);
    int x_size = in.base.alphabet_of(x_idx);
    if (static_cast<int>(in.a_map.size()) != x_size)
        throw Error("less_noisy_expression: a(X) table size mismatch");
    int a_size = 1 + *std::max_element(in.a_map.begin(), in.a_map.end());
    pmf::JointPmf j = in.base.attach_function({"aX", a_size}, {in.x}, in.a_map);
    j = j.attach_channel(in.w.var, in.w.given, in.w.kernel);
    double h = j.entropy({"aX", in.y1}) - j.entropy({in.y1});
    return h + j.mutual_information_general({in.x}, {in.w.var.name}, {"aX", in.y2});
}

}  // namespace rdlp::converse

#endif
