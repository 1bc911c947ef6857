#ifndef RDLP_ACHIEVABLE_HPP
#define RDLP_ACHIEVABLE_HPP

// Achievable side: builds the simultaneous-decoding LP from a problem
// instance, an ordered message schedule, and the information quantities of
// the induced joint model; checks distortion feasibility; computes lower
// convex envelopes over distortion points; evaluates the sequential
// two-decoder comparison expression.

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rdlp/gauss.hpp"
#include "rdlp/lp.hpp"
#include "rdlp/pmf.hpp"

namespace rdlp::achievable {

// Subsets of decoders [1..m] as bitmasks (bit l-1 = decoder l).
using DecoderSet = unsigned;

inline std::string subset_text(DecoderSet s)
{
    std::string out = "{";
    bool first = true;
    for (int l = 0; s >> l; ++l)
        if (s >> l & 1u) {
            if (!first) out += ",";
            first = false;
            out += std::to_string(l + 1);
        }
    return out + "}";
}

struct Distortion {
    enum class Kind { Table, ComponentMse };
    Kind kind = Kind::Table;
    // d(x, xhat) with x the packed source value; entries finite and >= 0.
    std::vector<std::vector<double>> table;

    static Distortion mse() { return {Kind::ComponentMse, {}}; }
    static Distortion from_table(std::vector<std::vector<double>> t)
    {
        for (const auto& row : t)
            for (double v : row)
                if (!(v >= 0) || !std::isfinite(v))
                    throw Error("Distortion: entries must be finite and nonnegative");
        return {Kind::Table, std::move(t)};
    }
};

struct DecoderSpec {
    pmf::NameList side_info;      // variables (discrete) or blocks (gaussian)
    Distortion distortion;
    std::vector<double> target;   // D_l; one entry per source component for MSE
};

struct DiscreteChannel {
    pmf::VariableId var;
    pmf::NameList given;
    std::vector<std::vector<double>> kernel;
};

struct Message {
    DecoderSet subset = 0;
    std::optional<DiscreteChannel> discrete;
    std::optional<gauss::GaussianMessage> gaussian;

    bool degenerate() const { return !discrete && !gaussian; }
    std::string name() const
    {
        if (discrete) return discrete->var.name;
        if (gaussian) return gaussian->name;
        return "U" + subset_text(subset);
    }
};

struct MessageSchedule {
    std::vector<Message> order;  // v = S_1, ..., S_j; subsets distinct, nonempty
};

struct ProblemInstance {
    std::optional<pmf::JointPmf> joint;     // discrete model
    std::optional<gauss::GaussianSystem> system;  // gaussian model
    pmf::NameList source;                   // variables / blocks forming X
    std::vector<DecoderSpec> decoders;

    bool discrete() const { return joint.has_value(); }
    int m() const { return static_cast<int>(decoders.size()); }

    void validate() const
    {
        if (joint.has_value() == system.has_value())
            throw Error("ProblemInstance: exactly one of the discrete/gaussian models required");
        if (decoders.empty()) throw Error("ProblemInstance: needs at least one decoder");
        if (source.empty()) throw Error("ProblemInstance: empty source");
        auto known = [&](const std::string& s) {
            return discrete() ? joint->has_variable(s) : system->has_block(s);
        };
        for (const auto& s : source)
            if (!known(s)) throw Error("ProblemInstance: unknown source name '" + s + "'");
        for (const auto& d : decoders)
            for (const auto& s : d.side_info)
                if (!known(s)) throw Error("ProblemInstance: unknown side-info name '" + s + "'");
    }
};

// An instance's model plus any attached auxiliary variables, behind one
// information oracle. Attachments go through channels / linear messages, so
// aux <-> X <-> Y structure holds by construction.
class Model {
public:
    explicit Model(const ProblemInstance& inst) : inst_(&inst)
    {
        inst.validate();
        if (inst.discrete())
            joint_ = *inst.joint;
        else
            system_ = *inst.system;
    }

    const ProblemInstance& instance() const { return *inst_; }
    const pmf::JointPmf& joint() const { return *joint_; }
    const gauss::GaussianSystem& system() const { return *system_; }
    bool discrete() const { return inst_->discrete(); }

    // Attaches a non-degenerate message payload; returns its name.
    std::string attach(const Message& msg)
    {
        if (msg.degenerate()) throw Error("Model::attach: degenerate message");
        if (discrete()) {
            if (!msg.discrete) throw Error("Model::attach: gaussian message on a discrete model");
            joint_ = joint_->attach_channel(msg.discrete->var, msg.discrete->given,
                                            msg.discrete->kernel);
            return msg.discrete->var.name;
        }
        if (!msg.gaussian) throw Error("Model::attach: discrete message on a gaussian model");
        system_ = system_->attach_message(*msg.gaussian);
        return msg.gaussian->name;
    }

    pmf::NameList source_group() const { return inst_->source; }
    pmf::NameList side_group(int l) const { return inst_->decoders[l].side_info; }

    // I(A;B|C) over name groups; empty groups contribute nothing.
    double mi(const pmf::NameList& A, const pmf::NameList& B, const pmf::NameList& C) const
    {
        if (A.empty() || B.empty()) return 0.0;
        if (discrete()) return joint_->mutual_information_general(A, B, C);
        return system_->mutual_information(A, B, C);
    }

    // H(A|C) in bits (discrete models).
    double conditional_entropy(const pmf::NameList& A, const pmf::NameList& C) const
    {
        if (!discrete()) throw Error("conditional_entropy: discrete models only");
        pmf::NameList ac = A;
        for (const auto& n : C)
            if (std::find(ac.begin(), ac.end(), n) == ac.end()) ac.push_back(n);
        return joint_->entropy(ac) - joint_->entropy(C);
    }

private:
    const ProblemInstance* inst_;
    std::optional<pmf::JointPmf> joint_;
    std::optional<gauss::GaussianSystem> system_;
};

// The model extended with every non-degenerate message of a schedule.
class ExtendedModel {
public:
    ExtendedModel(const ProblemInstance& inst, const MessageSchedule& sched) : model_(inst)
    {
        for (const auto& msg : sched.order) {
            if (msg.subset == 0) throw Error("MessageSchedule: empty decoder subset");
            if (msg.subset >> inst.m())
                throw Error("MessageSchedule: subset " + subset_text(msg.subset) +
                            " references a missing decoder");
            for (const auto& other : order_)
                if (other == msg.subset)
                    throw Error("MessageSchedule: duplicate subset " + subset_text(msg.subset));
            order_.push_back(msg.subset);
            names_.push_back(msg.degenerate() ? "" : model_.attach(msg));
        }
    }

    const ProblemInstance& instance() const { return model_.instance(); }
    const std::vector<DecoderSet>& order() const { return order_; }
    bool degenerate(std::size_t j) const { return names_[j].empty(); }
    const pmf::JointPmf& joint() const { return model_.joint(); }
    const gauss::GaussianSystem& system() const { return model_.system(); }

    pmf::NameList source_group() const { return model_.source_group(); }
    pmf::NameList side_group(int l) const { return model_.side_group(l); }
    pmf::NameList message_group(std::size_t j) const
    {
        if (degenerate(j)) return {};
        return {names_[j]};
    }

    double mi(const pmf::NameList& A, const pmf::NameList& B, const pmf::NameList& C) const
    {
        return model_.mi(A, B, C);
    }

private:
    Model model_;
    std::vector<DecoderSet> order_;
    std::vector<std::string> names_;
};

inline pmf::NameList concat(std::initializer_list<pmf::NameList> lists)
{
    pmf::NameList out;
    for (const auto& l : lists)
        for (const auto& n : l) out.push_back(n);
    return out;
}

// Diagonal of K_{target | given} assembled per target block, in block order.
// A target block that also appears in the conditioning is known exactly and
// contributes zeros.
inline std::vector<double> conditional_diagonal(const gauss::GaussianSystem& sys,
                                                const pmf::NameList& target_blocks,
                                                const pmf::NameList& given)
{
    auto known = [&](const std::string& b) {
        return std::find(given.begin(), given.end(), b) != given.end();
    };
    pmf::NameList open;
    for (const auto& b : target_blocks)
        if (!known(b)) open.push_back(b);
    gauss::Matrix k(0, 0);
    if (!open.empty()) k = sys.conditional_covariance(open, given);
    std::vector<double> diag;
    int cursor = 0;
    for (const auto& b : target_blocks) {
        int dim = sys.block_dim(b);
        if (known(b)) {
            for (int i = 0; i < dim; ++i) diag.push_back(0.0);
        } else {
            for (int i = 0; i < dim; ++i) diag.push_back(k.at(cursor + i, cursor + i));
            cursor += dim;
        }
    }
    return diag;
}

// Expected distortion of the best deterministic reconstruction map
// g(known) -> xhat, ties broken toward the lowest reconstruction index.
inline double optimal_expected_distortion(const pmf::JointPmf& joint, const pmf::NameList& known,
                                          const pmf::NameList& source,
                                          const std::vector<std::vector<double>>& table)
{
    std::vector<int> kidx = joint.resolve(known);
    std::vector<int> sidx = joint.resolve(source);
    std::size_t kcells = 1, scells = 1;
    for (int i : kidx) kcells *= joint.alphabet_of(i);
    for (int i : sidx) scells *= joint.alphabet_of(i);
    if (table.size() != scells)
        throw Error("distortion table has " + std::to_string(table.size()) +
                    " rows, source alphabet has " + std::to_string(scells));
    std::size_t nhat = table.empty() ? 0 : table[0].size();
    if (scells != 0 && kcells > pmf::JointPmf::kMaxCells / scells)
        throw Error("distortion check: known-variable alphabet product too large");
    // p(x, g) accumulated over the joint.
    std::vector<double> cond(kcells * scells, 0.0);
    for (std::size_t cell = 0; cell < joint.cells(); ++cell) {
        double p = joint.mass()[cell];
        if (p == 0.0) continue;
        std::size_t kpos = 0, spos = 0;
        for (int i : kidx) kpos = kpos * joint.alphabet_of(i) + joint.digit(cell, i);
        for (int i : sidx) spos = spos * joint.alphabet_of(i) + joint.digit(cell, i);
        cond[kpos * scells + spos] += p;
    }
    double expected = 0;
    for (std::size_t g = 0; g < kcells; ++g) {
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t xhat = 0; xhat < nhat; ++xhat) {
            double acc = 0;
            for (std::size_t x = 0; x < scells; ++x) {
                double p = cond[g * scells + x];
                if (p > 0) acc += p * table[x][xhat];
            }
            if (acc < best - 1e-15) best = acc;  // strict improvement keeps lowest index on ties
        }
        if (nhat > 0 && std::isfinite(best)) expected += best;
    }
    return expected;
}

// Conditions 1-3 of the achievable constraint set; violations are data.
inline std::vector<std::string> check_schedule_validity(const ProblemInstance& inst,
                                                        const MessageSchedule& sched)
{
    ExtendedModel model(inst, sched);
    std::vector<std::string> violations;

    // 1) The base marginal is untouched by construction; verify anyway.
    if (inst.discrete()) {
        pmf::NameList base_names;
        for (const auto& v : inst.joint->variables()) base_names.push_back(v.name);
        pmf::JointPmf got = model.joint().marginalize(base_names);
        pmf::JointPmf want = inst.joint->marginalize(base_names);
        double worst = 0;
        for (std::size_t i = 0; i < got.mass().size(); ++i)
            worst = std::max(worst, std::abs(got.mass()[i] - want.mass()[i]));
        if (worst > 1e-9)
            violations.push_back("marginal mismatch: base distribution deviates by " +
                                 std::to_string(worst));
    }

    // 2) Markov condition U <-> X <-> (Y_1..Y_m).
    pmf::NameList all_msgs, all_side;
    for (std::size_t j = 0; j < model.order().size(); ++j)
        for (const auto& n : model.message_group(j)) all_msgs.push_back(n);
    for (int l = 0; l < inst.m(); ++l)
        for (const auto& n : model.side_group(l)) all_side.push_back(n);
    if (!all_msgs.empty()) {
        double leak = model.mi(all_msgs, all_side, model.source_group());
        if (leak > 1e-9)
            violations.push_back("markov violation: I(U;Y|X) = " + std::to_string(leak));
    }

    // 3) Distortion feasibility through the optimal reconstruction maps.
    for (int l = 0; l < inst.m(); ++l) {
        const DecoderSpec& dec = inst.decoders[l];
        pmf::NameList known = model.side_group(l);
        for (std::size_t j = 0; j < model.order().size(); ++j)
            if (model.order()[j] >> l & 1u)
                for (const auto& n : model.message_group(j)) known.push_back(n);
        if (inst.discrete()) {
            if (dec.distortion.kind != Distortion::Kind::Table)
                throw Error("discrete instance needs a distortion table");
            double got = optimal_expected_distortion(model.joint(), known, inst.source,
                                                     dec.distortion.table);
            if (got > dec.target.at(0) + 1e-9)
                violations.push_back("decoder " + std::to_string(l + 1) +
                                     ": expected distortion " + std::to_string(got) +
                                     " exceeds target " + std::to_string(dec.target.at(0)));
        } else {
            if (dec.distortion.kind != Distortion::Kind::ComponentMse)
                throw Error("gaussian instance needs componentwise MSE distortion");
            std::vector<double> diag = conditional_diagonal(model.system(), inst.source, known);
            if (dec.target.size() != diag.size())
                throw Error("decoder " + std::to_string(l + 1) + ": MSE target has " +
                            std::to_string(dec.target.size()) + " entries, source spans " +
                            std::to_string(diag.size()));
            for (std::size_t i = 0; i < diag.size(); ++i) {
                if (dec.target[i] <= 0) throw Error("MSE targets must be positive");
                if (diag[i] > dec.target[i] + 1e-9) {
                    violations.push_back("decoder " + std::to_string(l + 1) + ": component " +
                                         std::to_string(i + 1) + " MSE " +
                                         std::to_string(diag[i]) + " exceeds " +
                                         std::to_string(dec.target[i]));
                    break;
                }
            }
        }
    }
    return violations;
}

namespace detail {

inline lp::Coef make_coef(double v, lp::Mode mode)
{
    if (mode == lp::Mode::Rational) return lp::Coef(Rational::snap(v));
    return lp::Coef(v);
}

}  // namespace detail

namespace detail {

// LP assembly for an already-validated schedule model.
inline lp::LinearProgram build_from_model(const ExtendedModel& model, lp::Mode mode)
{
    const ProblemInstance& inst = model.instance();
    const auto& order = model.order();

    lp::LinearProgram prog;
    std::map<std::size_t, std::pair<int, int>> vars;  // schedule position -> (R, R')
    for (std::size_t j = 0; j < order.size(); ++j) {
        if (model.degenerate(j)) continue;
        int r = prog.add_variable("R" + subset_text(order[j]));
        int rp = prog.add_variable("R'" + subset_text(order[j]));
        vars[j] = {r, rp};
    }
    if (vars.empty()) throw Error("build_achievable_lp: every message is degenerate");

    // R_S + R'_S >= I(X, U^-_S ; U_S).
    for (auto& [j, vpair] : vars) {
        pmf::NameList earlier;
        for (std::size_t i = 0; i < j; ++i)
            for (const auto& n : model.message_group(i)) earlier.push_back(n);
        double rhs = model.mi(concat({model.source_group(), earlier}), model.message_group(j), {});
        prog.add_constraint("rate" + subset_text(order[j]),
                            {{vpair.first, 1}, {vpair.second, 1}}, lp::Relation::GreaterEq,
                            detail::make_coef(rhs, mode));
    }

    // For every decoder l and nonempty subset D' of its message set:
    //   sum_{S in D'} R'_S <= sum_{S in D'} I(U_S ; U^-_{S,D'}, U_{D\D'}, Y_l).
    for (int l = 0; l < inst.m(); ++l) {
        std::vector<std::size_t> dl;
        for (std::size_t j = 0; j < order.size(); ++j)
            if ((order[j] >> l & 1u) && !model.degenerate(j)) dl.push_back(j);
        if (dl.size() > 12)
            throw Error("build_achievable_lp: decoder " + std::to_string(l + 1) + " has " +
                        std::to_string(dl.size()) + " messages; 2^|D_l| rows would be excessive");
        for (unsigned pick = 1; pick < (1u << dl.size()); ++pick) {
            std::vector<std::size_t> chosen, rest;
            for (std::size_t t = 0; t < dl.size(); ++t)
                (pick >> t & 1u ? chosen : rest).push_back(dl[t]);
            double rhs = 0;
            std::vector<std::pair<int, lp::Coef>> terms;
            for (std::size_t j : chosen) {
                pmf::NameList cond = model.side_group(l);
                for (std::size_t i : rest)
                    for (const auto& n : model.message_group(i)) cond.push_back(n);
                for (std::size_t i : chosen)
                    if (i < j)
                        for (const auto& n : model.message_group(i)) cond.push_back(n);
                rhs += model.mi(model.message_group(j), cond, {});
                terms.push_back({vars.at(j).second, lp::Coef(1)});
            }
            prog.add_constraint("dec" + std::to_string(l + 1) + "_" + std::to_string(pick), terms,
                                lp::Relation::LessEq, detail::make_coef(rhs, mode));
        }
    }

    std::vector<std::pair<int, lp::Coef>> obj;
    for (auto& [j, vpair] : vars) obj.push_back({vpair.first, lp::Coef(1)});
    prog.set_objective(obj);
    return prog;
}

}  // namespace detail

// The simultaneous-decoding LP for one schedule. Variables R_S and R'_S per
// non-degenerate message; degenerate messages are pruned (their rates are
// zero and their information terms vanish).
inline lp::LinearProgram build_achievable_lp(const ProblemInstance& inst,
                                             const MessageSchedule& sched,
                                             lp::Mode mode = lp::Mode::Float)
{
    std::vector<std::string> violations = check_schedule_validity(inst, sched);
    if (!violations.empty()) {
        std::string what = "build_achievable_lp: invalid schedule:";
        for (const auto& v : violations) what += "\n  " + v;
        throw Error(what);
    }
    ExtendedModel model(inst, sched);
    return detail::build_from_model(model, mode);
}

struct RatePair {
    DecoderSet subset;
    double bins;        // R_S
    double codewords;   // R'_S
};

struct UpperBoundResult {
    double value = std::numeric_limits<double>::infinity();
    Rational value_exact;
    bool exact = false;
    std::size_t best_schedule = 0;
    std::vector<RatePair> assignment;
    std::vector<std::string> skipped;  // schedules rejected as invalid
};

inline UpperBoundResult solve_upper_bound(const ProblemInstance& inst,
                                          const std::vector<MessageSchedule>& schedules,
                                          lp::Mode mode = lp::Mode::Float)
{
    if (schedules.empty()) throw Error("solve_upper_bound: no schedules supplied");
    UpperBoundResult best;
    bool found = false;
    for (std::size_t s = 0; s < schedules.size(); ++s) {
        std::vector<std::string> violations = check_schedule_validity(inst, schedules[s]);
        if (!violations.empty()) {
            std::string what = "schedule " + std::to_string(s) + ":";
            for (const auto& v : violations) what += " " + v + ";";
            best.skipped.push_back(what);
            continue;
        }
        lp::LinearProgram prog = build_achievable_lp(inst, schedules[s], mode);
        lp::LpSolution sol = lp::solve(prog, mode);
        if (sol.status != lp::SolveStatus::Optimal)
            throw Error("solve_upper_bound: achievable LP did not solve to optimality");
        bool better = !found || (mode == lp::Mode::Rational
                                     ? sol.value_exact < best.value_exact
                                     : sol.value < best.value - 1e-15);
        if (better) {
            found = true;
            best.value = sol.value;
            best.value_exact = sol.value_exact;
            best.exact = mode == lp::Mode::Rational;
            best.best_schedule = s;
            best.assignment.clear();
            ExtendedModel model(inst, schedules[s]);
            int vi = 0;
            for (std::size_t j = 0; j < model.order().size(); ++j) {
                if (model.degenerate(j)) continue;
                best.assignment.push_back({model.order()[j], sol.assignment[vi],
                                           sol.assignment[vi + 1]});
                vi += 2;
            }
        }
    }
    if (!found) {
        std::string what = "solve_upper_bound: every schedule is invalid";
        for (const auto& v : best.skipped) what += "\n  " + v;
        throw Error(what);
    }
    return best;
}

// All orderings of the non-degenerate messages (degenerate ones cannot
// affect the LP and are dropped). Hard cap at 8 messages.
inline std::vector<MessageSchedule> enumerate_orderings(const MessageSchedule& sched)
{
    std::vector<Message> live;
    for (const auto& m : sched.order)
        if (!m.degenerate()) live.push_back(m);
    if (live.size() > 8)
        throw Error("enumerate_orderings: " + std::to_string(live.size()) +
                    " non-degenerate messages; full enumeration is capped at 8");
    std::vector<std::size_t> perm(live.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::vector<MessageSchedule> out;
    do {
        MessageSchedule s;
        for (std::size_t i : perm) s.order.push_back(live[i]);
        out.push_back(std::move(s));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

// Lower convex envelope of (D, rate) points, queried through a small LP:
// the best convex combination of the points hitting the query distortion.
class ConvexEnvelope {
public:
    explicit ConvexEnvelope(std::vector<std::pair<std::vector<double>, double>> points)
        : points_(std::move(points))
    {
        if (points_.empty()) throw Error("ConvexEnvelope: no points");
        dim_ = points_[0].first.size();
        for (const auto& [d, r] : points_) {
            if (d.size() != dim_) throw Error("ConvexEnvelope: inconsistent dimensions");
            if (!std::isfinite(r)) throw Error("ConvexEnvelope: non-finite rate");
            for (double v : d)
                if (!std::isfinite(v)) throw Error("ConvexEnvelope: non-finite distortion");
        }
    }

    std::optional<double> query(const std::vector<double>& d) const
    {
        if (d.size() != dim_) throw Error("ConvexEnvelope: query dimension mismatch");
        lp::LinearProgram p;
        std::vector<int> lambda;
        for (std::size_t i = 0; i < points_.size(); ++i)
            lambda.push_back(p.add_variable("l" + std::to_string(i)));
        std::vector<std::pair<int, lp::Coef>> ones;
        for (int v : lambda) ones.push_back({v, lp::Coef(1)});
        p.add_constraint("simplex", ones, lp::Relation::Equal, lp::Coef(1));
        for (std::size_t k = 0; k < dim_; ++k) {
            std::vector<std::pair<int, lp::Coef>> terms;
            for (std::size_t i = 0; i < points_.size(); ++i)
                terms.push_back({lambda[i], lp::Coef(points_[i].first[k])});
            p.add_constraint("d" + std::to_string(k), terms, lp::Relation::Equal,
                             lp::Coef(d[k]));
        }
        std::vector<std::pair<int, lp::Coef>> obj;
        for (std::size_t i = 0; i < points_.size(); ++i)
            obj.push_back({lambda[i], lp::Coef(points_[i].second)});
        p.set_objective(obj);
        lp::LpSolution sol = lp::solve(p, lp::Mode::Float);
        if (sol.status != lp::SolveStatus::Optimal) return std::nullopt;
        return sol.value;
    }

private:
    std::vector<std::pair<std::vector<double>, double>> points_;
    std::size_t dim_ = 0;
};

inline ConvexEnvelope convexify(std::vector<std::pair<std::vector<double>, double>> points)
{
    return ConvexEnvelope(std::move(points));
}

// Sequential two-decoder rate expression:
//   max_i I(X;U12|Yi) + I(X;U1|U12,Y1) + I(X;U2|U12,Y2).
// The schedule must carry subsets {1,2}, {1}, {2} (degenerate allowed).
inline double sequential_two_decoder(const ProblemInstance& inst, const MessageSchedule& sched)
{
    if (inst.m() != 2) throw Error("sequential_two_decoder: needs exactly two decoders");
    ExtendedModel model(inst, sched);
    pmf::NameList u12, u1, u2;
    for (std::size_t j = 0; j < model.order().size(); ++j) {
        pmf::NameList g = model.message_group(j);
        if (model.order()[j] == 3u)
            u12 = g;
        else if (model.order()[j] == 1u)
            u1 = g;
        else if (model.order()[j] == 2u)
            u2 = g;
        else
            throw Error("sequential_two_decoder: unexpected subset " + subset_text(model.order()[j]));
    }
    pmf::NameList x = model.source_group();
    double common = std::max(model.mi(x, u12, model.side_group(0)),
                             model.mi(x, u12, model.side_group(1)));
    double t1 = model.mi(x, u1, concat({u12, model.side_group(0)}));
    double t2 = model.mi(x, u2, concat({u12, model.side_group(1)}));
    return common + t1 + t2;
}

}  // namespace rdlp::achievable

#endif
