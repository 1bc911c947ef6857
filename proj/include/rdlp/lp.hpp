#ifndef RDLP_LP_HPP
#define RDLP_LP_HPP

// Linear-program representation plus a self-contained dense two-phase
// simplex. Supports exact-rational and floating arithmetic. Programs with
// many more constraints than variables are solved through their dual, which
// keeps the tableau narrow; the primal solution is recovered from the dual
// certificate.

#include <cstdio>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rdlp/rational.hpp"

namespace rdlp::lp {

enum class Mode { Rational, Float };
enum class Relation { LessEq, GreaterEq, Equal };
enum class VarKind { NonNegative, Free };
enum class SolveStatus { Optimal, Infeasible, Unbounded };

inline const char* relation_text(Relation r)
{
    switch (r) {
        case Relation::LessEq: return "<=";
        case Relation::GreaterEq: return ">=";
        default: return "=";
    }
}

// A coefficient always carries a double; builders attach the exact rational
// when they know it. Rational-mode solves refuse coefficients without one.
struct Coef {
    double value = 0.0;
    bool exact = false;
    Rational rat;

    Coef() = default;
    Coef(double v) : value(v) {}                                        // NOLINT
    Coef(int v) : value(v), exact(true), rat(v) {}                      // NOLINT
    Coef(std::int64_t v) : value(double(v)), exact(true), rat(v) {}     // NOLINT
    Coef(const Rational& r) : value(r.to_double()), exact(true), rat(r) {}  // NOLINT

    std::string text() const
    {
        if (exact) return rat.to_string();
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", value);
        return buf;
    }
};

struct Constraint {
    std::string name;
    std::vector<std::pair<int, Coef>> terms;
    Relation rel = Relation::GreaterEq;
    Coef rhs;
};

struct SolveStats {
    int rows = 0;
    int cols = 0;
    long pivots = 0;
    bool via_dual = false;
};

struct LpSolution {
    SolveStatus status = SolveStatus::Optimal;
    Mode mode = Mode::Float;
    double value = 0.0;
    Rational value_exact;                // rational mode only
    std::vector<double> assignment;      // per declared variable
    std::vector<Rational> assignment_exact;
    std::vector<double> duals;           // per constraint
    std::vector<Rational> duals_exact;
    SolveStats stats;
};

class LinearProgram {
public:
    int add_variable(std::string name, VarKind kind = VarKind::NonNegative)
    {
        vars_.push_back({std::move(name), kind});
        return static_cast<int>(vars_.size()) - 1;
    }

    void add_constraint(std::string name, std::vector<std::pair<int, Coef>> terms, Relation rel,
                        Coef rhs)
    {
        for (auto& [v, c] : terms) check_var(v);
        cons_.push_back({std::move(name), std::move(terms), rel, std::move(rhs)});
    }

    void set_objective(std::vector<std::pair<int, Coef>> terms)
    {
        for (auto& [v, c] : terms) check_var(v);
        objective_ = std::move(terms);
    }

    int num_variables() const { return static_cast<int>(vars_.size()); }
    int num_constraints() const { return static_cast<int>(cons_.size()); }
    const std::string& variable_name(int i) const { return vars_[i].first; }
    VarKind variable_kind(int i) const { return vars_[i].second; }
    const std::vector<Constraint>& constraints() const { return cons_; }
    const std::vector<std::pair<int, Coef>>& objective() const { return objective_; }

    // Plain-text rendering, one constraint per line: `name: sum REL rhs`.
    std::string dump() const
    {
        std::ostringstream out;
        out << "minimize: " << render_sum(objective_) << "\n";
        for (const auto& c : cons_)
            out << c.name << ": " << render_sum(c.terms) << " " << relation_text(c.rel) << " "
                << c.rhs.text() << "\n";
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i].second == VarKind::Free) out << "free: " << vars_[i].first << "\n";
        return out.str();
    }

private:
    std::vector<std::pair<std::string, VarKind>> vars_;
    std::vector<Constraint> cons_;
    std::vector<std::pair<int, Coef>> objective_;

    void check_var(int v) const
    {
        if (v < 0 || v >= static_cast<int>(vars_.size()))
            throw Error("LinearProgram: reference to undeclared variable index " +
                        std::to_string(v));
    }

    std::string render_sum(const std::vector<std::pair<int, Coef>>& terms) const
    {
        if (terms.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (const auto& [v, c] : terms) {
            if (!first) out << " + ";
            first = false;
            out << c.text() << " " << vars_[v].first;
        }
        return out.str();
    }
};

namespace detail {

template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static bool is_zero(const Rational& x) { return x.is_zero(); }
    static bool is_neg(const Rational& x) { return x.sign() < 0; }
    static bool is_pos(const Rational& x) { return x.sign() > 0; }
    static Rational from_coef(const Coef& c)
    {
        if (!c.exact)
            throw Error("rational solve requested but a coefficient has no exact value (" +
                        std::to_string(c.value) + "); use float mode");
        return c.rat;
    }
    static double to_double(const Rational& x) { return x.to_double(); }
};

template <>
struct ScalarTraits<double> {
    static constexpr double kEps = 1e-11;
    static double zero() { return 0.0; }
    static double one() { return 1.0; }
    static bool is_zero(double x) { return x > -kEps && x < kEps; }
    static bool is_neg(double x) { return x <= -kEps; }
    static bool is_pos(double x) { return x >= kEps; }
    static double from_coef(const Coef& c) { return c.value; }
    static double to_double(double x) { return x; }
};

// Canonical form: min c'x with rows a'x >= b or a'x == b, all x >= 0.
template <class T>
struct Canon {
    int ncols = 0;
    std::vector<T> c;
    struct Row {
        std::vector<std::pair<int, T>> a;
        T b;
        bool eq = false;
    };
    std::vector<Row> rows;
};

// Mapping from canonical columns back to declared variables: x_var = sum of
// signed column values.
struct VarMap {
    struct Part {
        int var;
        int sign;
    };
    std::vector<Part> col_to_var;
    int num_vars = 0;
};

template <class T>
void canonicalize(const LinearProgram& p, Canon<T>& canon, VarMap& map)
{
    using Tr = ScalarTraits<T>;
    map.num_vars = p.num_variables();
    std::vector<std::pair<int, int>> var_cols(p.num_variables(), {-1, -1});
    for (int v = 0; v < p.num_variables(); ++v) {
        var_cols[v].first = canon.ncols;
        map.col_to_var.push_back({v, +1});
        ++canon.ncols;
        if (p.variable_kind(v) == VarKind::Free) {
            var_cols[v].second = canon.ncols;
            map.col_to_var.push_back({v, -1});
            ++canon.ncols;
        }
    }
    canon.c.assign(canon.ncols, Tr::zero());
    for (const auto& [v, coef] : p.objective()) {
        T t = Tr::from_coef(coef);
        canon.c[var_cols[v].first] = canon.c[var_cols[v].first] + t;
        if (var_cols[v].second >= 0)
            canon.c[var_cols[v].second] = canon.c[var_cols[v].second] - t;
    }
    for (const auto& con : p.constraints()) {
        typename Canon<T>::Row row;
        bool negate = con.rel == Relation::LessEq;
        row.eq = con.rel == Relation::Equal;
        for (const auto& [v, coef] : con.terms) {
            T t = Tr::from_coef(coef);
            if (negate) t = Tr::zero() - t;
            if (Tr::is_zero(t)) continue;
            row.a.push_back({var_cols[v].first, t});
            if (var_cols[v].second >= 0) row.a.push_back({var_cols[v].second, Tr::zero() - t});
        }
        row.b = Tr::from_coef(con.rhs);
        if (negate) row.b = Tr::zero() - row.b;
        canon.rows.push_back(std::move(row));
    }
}

// Dual of the canonical program, itself in canonical form.
//   primal: min c'x, G x >= h, E x = f, x >= 0
//   dual:   max h'l + f'm, G'l + E'm <= c, l >= 0, m free
template <class T>
Canon<T> build_dual(const Canon<T>& p)
{
    using Tr = ScalarTraits<T>;
    Canon<T> d;
    // Columns: one per >= row; two (split) per = row.
    std::vector<std::pair<int, int>> row_cols(p.rows.size(), {-1, -1});
    for (std::size_t i = 0; i < p.rows.size(); ++i) {
        row_cols[i].first = d.ncols++;
        if (p.rows[i].eq) row_cols[i].second = d.ncols++;
    }
    d.c.assign(d.ncols, Tr::zero());
    for (std::size_t i = 0; i < p.rows.size(); ++i) {
        d.c[row_cols[i].first] = Tr::zero() - p.rows[i].b;
        if (row_cols[i].second >= 0) d.c[row_cols[i].second] = p.rows[i].b;
    }
    // One >= row per primal column: -sum_i A_ij y_i >= -c_j.
    std::vector<typename Canon<T>::Row> rows(p.ncols);
    for (int j = 0; j < p.ncols; ++j) {
        rows[j].b = Tr::zero() - p.c[j];
        rows[j].eq = false;
    }
    for (std::size_t i = 0; i < p.rows.size(); ++i) {
        for (const auto& [j, aij] : p.rows[i].a) {
            rows[j].a.push_back({row_cols[i].first, Tr::zero() - aij});
            if (row_cols[i].second >= 0) rows[j].a.push_back({row_cols[i].second, aij});
        }
    }
    d.rows = std::move(rows);
    return d;
}

template <class T>
struct CoreResult {
    SolveStatus status = SolveStatus::Optimal;
    std::vector<T> x;      // per canonical column
    std::vector<T> duals;  // per canonical row
    long pivots = 0;
};

// Dense two-phase simplex on the canonical form. Bland's rule throughout:
// entering column is the lowest-index column with negative reduced cost,
// leaving row breaks ratio ties by the lowest basic variable index.
template <class T>
class SimplexCore {
public:
    using Tr = ScalarTraits<T>;

    explicit SimplexCore(const Canon<T>& p) : p_(p) {}

    CoreResult<T> run()
    {
        build_tableau();
        CoreResult<T> res;
        if (!phase1()) {
            res.status = SolveStatus::Infeasible;
            res.pivots = pivots_;
            return res;
        }
        int ph2 = phase2();
        res.pivots = pivots_;
        if (ph2 < 0) {
            res.status = SolveStatus::Unbounded;
            return res;
        }
        res.status = SolveStatus::Optimal;
        res.x.assign(p_.ncols, Tr::zero());
        for (int i = 0; i < nrows_; ++i)
            if (!row_dropped_[i] && basis_[i] < p_.ncols) res.x[basis_[i]] = rhs(i);
        res.duals = extract_duals();
        return res;
    }

private:
    const Canon<T>& p_;
    int nrows_ = 0;
    int ncols_ = 0;  // structural + surplus/slack + artificial
    int art_begin_ = 0;
    std::vector<T> tab_;   // (nrows+1) x (ncols+1); last row = reduced costs, last col = rhs
    std::vector<int> basis_;
    std::vector<bool> row_dropped_;
    std::vector<bool> row_flipped_;
    std::vector<int> aux_col_;   // per row: its slack/surplus column or -1
    std::vector<int> art_col_;   // per row: its artificial column or -1
    long pivots_ = 0;
    static constexpr long kMaxPivots = 4000000;

    T& at(int r, int c) { return tab_[static_cast<std::size_t>(r) * (ncols_ + 1) + c]; }
    T& rhs(int r) { return tab_[static_cast<std::size_t>(r) * (ncols_ + 1) + ncols_]; }
    T& obj(int c) { return tab_[static_cast<std::size_t>(nrows_) * (ncols_ + 1) + c]; }

    void build_tableau()
    {
        nrows_ = static_cast<int>(p_.rows.size());
        row_flipped_.assign(nrows_, false);
        aux_col_.assign(nrows_, -1);
        art_col_.assign(nrows_, -1);
        row_dropped_.assign(nrows_, false);
        // Count aux columns. A >= row with b <= 0 flips into a slack row.
        int naux = 0, nart = 0;
        for (int i = 0; i < nrows_; ++i) {
            bool bneg = Tr::is_neg(p_.rows[i].b);
            if (p_.rows[i].eq) {
                ++nart;
            } else {
                ++naux;
                if (!bneg) ++nart;  // surplus + artificial
            }
        }
        int aux_base = p_.ncols;
        art_begin_ = aux_base + naux;
        ncols_ = art_begin_ + nart;
        tab_.assign(static_cast<std::size_t>(nrows_ + 1) * (ncols_ + 1), Tr::zero());
        basis_.assign(nrows_, -1);
        int next_aux = aux_base, next_art = art_begin_;
        for (int i = 0; i < nrows_; ++i) {
            const auto& row = p_.rows[i];
            bool flip = Tr::is_neg(row.b);
            row_flipped_[i] = flip;
            for (const auto& [j, a] : row.a) at(i, j) = at(i, j) + (flip ? Tr::zero() - a : a);
            rhs(i) = flip ? Tr::zero() - row.b : row.b;
            if (row.eq) {
                art_col_[i] = next_art;
                at(i, next_art) = Tr::one();
                basis_[i] = next_art;
                ++next_art;
            } else if (!flip) {
                // a'x - s = b, s >= 0, plus artificial to seed the basis.
                aux_col_[i] = next_aux;
                at(i, next_aux) = Tr::zero() - Tr::one();
                ++next_aux;
                art_col_[i] = next_art;
                at(i, next_art) = Tr::one();
                basis_[i] = next_art;
                ++next_art;
            } else {
                // Flipped >= row becomes -a'x + s = -b with s basic.
                aux_col_[i] = next_aux;
                at(i, next_aux) = Tr::one();
                basis_[i] = next_aux;
                ++next_aux;
            }
        }
    }

    void rebuild_objective(const std::vector<T>& cost)
    {
        for (int j = 0; j <= ncols_; ++j) obj(j) = Tr::zero();
        for (int j = 0; j < static_cast<int>(cost.size()); ++j) obj(j) = cost[j];
        for (int i = 0; i < nrows_; ++i) {
            if (row_dropped_[i]) continue;
            int b = basis_[i];
            if (b < static_cast<int>(cost.size()) && !Tr::is_zero(cost[b])) {
                T mult = cost[b];
                for (int j = 0; j <= ncols_; ++j)
                    if (!Tr::is_zero(at(i, j))) obj(j) = obj(j) - mult * at(i, j);
            }
        }
    }

    void pivot(int prow, int pcol)
    {
        ++pivots_;
        if (pivots_ > kMaxPivots) throw SolverError("simplex: pivot limit exceeded");
        T piv = at(prow, pcol);
        for (int j = 0; j <= ncols_; ++j)
            if (!Tr::is_zero(at(prow, j))) at(prow, j) = at(prow, j) / piv;
        at(prow, pcol) = Tr::one();
        for (int i = 0; i <= nrows_; ++i) {
            if (i == prow || (i < nrows_ && row_dropped_[i])) continue;
            T factor = at(i, pcol);
            if (Tr::is_zero(factor)) continue;
            for (int j = 0; j <= ncols_; ++j) {
                if (Tr::is_zero(at(prow, j))) continue;
                at(i, j) = at(i, j) - factor * at(prow, j);
            }
            at(i, pcol) = Tr::zero();
        }
        basis_[prow] = pcol;
    }

    // Returns the leaving row per Bland, or -1 if the column is unbounded.
    int ratio_test(int pcol)
    {
        int best = -1;
        for (int i = 0; i < nrows_; ++i) {
            if (row_dropped_[i]) continue;
            if (!Tr::is_pos(at(i, pcol))) continue;
            if (best < 0) {
                best = i;
                continue;
            }
            T lhs = rhs(i) * at(best, pcol);
            T rhsv = rhs(best) * at(i, pcol);
            if (lhs < rhsv || (lhs == rhsv && basis_[i] < basis_[best])) best = i;
        }
        return best;
    }

    // Runs pricing until optimal (0) or unbounded (-1). `allow` filters
    // columns eligible to enter.
    template <class Allow>
    int iterate(const Allow& allow)
    {
        for (;;) {
            int pcol = -1;
            for (int j = 0; j < ncols_; ++j) {
                if (!allow(j)) continue;
                if (Tr::is_neg(obj(j))) {
                    pcol = j;
                    break;
                }
            }
            if (pcol < 0) return 0;
            int prow = ratio_test(pcol);
            if (prow < 0) return -1;
            pivot(prow, pcol);
        }
    }

    bool phase1()
    {
        bool any_art = false;
        for (int i = 0; i < nrows_; ++i) any_art |= art_col_[i] >= 0;
        if (any_art) {
            std::vector<T> cost(ncols_, Tr::zero());
            for (int j = art_begin_; j < ncols_; ++j) cost[j] = Tr::one();
            rebuild_objective(cost);
            int r = iterate([](int) { return true; });
            if (r < 0) throw SolverError("simplex: phase 1 unbounded (internal error)");
            // Infeasible iff the artificial sum is positive.
            T total = Tr::zero();
            for (int i = 0; i < nrows_; ++i)
                if (!row_dropped_[i] && basis_[i] >= art_begin_) total = total + rhs(i);
            if (Tr::is_pos(total)) return false;
            // Drive zero-valued artificials out of the basis.
            for (int i = 0; i < nrows_; ++i) {
                if (row_dropped_[i] || basis_[i] < art_begin_) continue;
                int pcol = -1;
                for (int j = 0; j < art_begin_; ++j)
                    if (!Tr::is_zero(at(i, j))) {
                        pcol = j;
                        break;
                    }
                if (pcol >= 0)
                    pivot(i, pcol);
                else
                    row_dropped_[i] = true;  // redundant constraint
            }
        }
        return true;
    }

    int phase2()
    {
        std::vector<T> cost(ncols_, Tr::zero());
        for (int j = 0; j < p_.ncols; ++j) cost[j] = p_.c[j];
        rebuild_objective(cost);
        int art_begin = art_begin_;
        return iterate([art_begin](int j) { return j < art_begin; });
    }

    std::vector<T> extract_duals()
    {
        // y_i from the reduced cost of the row's own unit column:
        //   slack (+e_i, c=0): reduced = -y_i.  surplus (-e_i): reduced = y_i.
        //   artificial (+e_i, phase-2 cost 0): reduced = -y_i.
        std::vector<T> duals(nrows_, Tr::zero());
        for (int i = 0; i < nrows_; ++i) {
            if (row_dropped_[i]) continue;
            T y;
            if (art_col_[i] >= 0)
                y = Tr::zero() - obj(art_col_[i]);
            else if (aux_col_[i] >= 0 && !row_flipped_[i])
                y = obj(aux_col_[i]);
            else
                y = Tr::zero() - obj(aux_col_[i]);
            duals[i] = row_flipped_[i] ? Tr::zero() - y : y;
        }
        return duals;
    }
};

template <class T>
CoreResult<T> solve_canon(const Canon<T>& p)
{
    SimplexCore<T> core(p);
    return core.run();
}

struct SolveOptions {
    // Dualize when the row/column ratio crosses this factor; <= 0 disables.
    double dualize_ratio = 2.5;
    bool force_primal = false;
    bool force_dual = false;
};

template <class T>
LpSolution solve_typed(const LinearProgram& p, Mode mode, const SolveOptions& opt)
{
    using Tr = ScalarTraits<T>;
    if (p.num_variables() == 0) throw Error("solve: program has no variables");
    Canon<T> canon;
    VarMap map;
    canonicalize(p, canon, map);

    bool dualize = opt.force_dual;
    if (!opt.force_primal && !dualize && opt.dualize_ratio > 0)
        dualize = canon.rows.size() > 64 &&
                  static_cast<double>(canon.rows.size()) >
                      opt.dualize_ratio * static_cast<double>(canon.ncols);

    LpSolution sol;
    sol.mode = mode;
    std::vector<T> x, duals;
    if (dualize) {
        Canon<T> dual = build_dual(canon);
        CoreResult<T> res = solve_canon(dual);
        sol.stats.via_dual = true;
        sol.stats.rows = static_cast<int>(dual.rows.size());
        sol.stats.cols = dual.ncols;
        sol.stats.pivots = res.pivots;
        if (res.status == SolveStatus::Unbounded) {
            sol.status = SolveStatus::Infeasible;
            return sol;
        }
        if (res.status == SolveStatus::Infeasible) {
            // Primal is unbounded or infeasible; settle it directly.
            CoreResult<T> direct = solve_canon(canon);
            sol.stats.via_dual = false;
            sol.stats.rows = static_cast<int>(canon.rows.size());
            sol.stats.cols = canon.ncols;
            sol.stats.pivots += direct.pivots;
            sol.status = direct.status == SolveStatus::Optimal ? SolveStatus::Unbounded
                                                               : direct.status;
            return sol;
        }
        // Primal solution = duals of the dual's rows; primal duals = the
        // dual's column values (mu = mu+ - mu- for equality rows).
        x = std::move(res.duals);
        duals.assign(canon.rows.size(), Tr::zero());
        int col = 0;
        for (std::size_t i = 0; i < canon.rows.size(); ++i) {
            duals[i] = res.x[col];
            ++col;
            if (canon.rows[i].eq) {
                duals[i] = duals[i] - res.x[col];
                ++col;
            }
        }
    } else {
        CoreResult<T> res = solve_canon(canon);
        sol.stats.rows = static_cast<int>(canon.rows.size());
        sol.stats.cols = canon.ncols;
        sol.stats.pivots = res.pivots;
        if (res.status != SolveStatus::Optimal) {
            sol.status = res.status;
            return sol;
        }
        x = std::move(res.x);
        duals = std::move(res.duals);
    }

    sol.status = SolveStatus::Optimal;
    // Canonicalization negates <= rows; report duals in the original
    // orientation so sum(y_i * b_i) equals the objective value.
    for (std::size_t i = 0; i < duals.size(); ++i)
        if (p.constraints()[i].rel == Relation::LessEq) duals[i] = Tr::zero() - duals[i];
    std::vector<T> var_values(map.num_vars, Tr::zero());
    for (std::size_t col = 0; col < map.col_to_var.size(); ++col) {
        const auto& part = map.col_to_var[col];
        if (part.sign > 0)
            var_values[part.var] = var_values[part.var] + x[col];
        else
            var_values[part.var] = var_values[part.var] - x[col];
    }
    T value = Tr::zero();
    for (const auto& [v, coef] : p.objective()) value = value + Tr::from_coef(coef) * var_values[v];

    sol.value = Tr::to_double(value);
    sol.assignment.resize(map.num_vars);
    for (int v = 0; v < map.num_vars; ++v) sol.assignment[v] = Tr::to_double(var_values[v]);
    sol.duals.resize(duals.size());
    for (std::size_t i = 0; i < duals.size(); ++i) sol.duals[i] = Tr::to_double(duals[i]);
    if constexpr (std::is_same_v<T, Rational>) {
        sol.value_exact = value;
        sol.assignment_exact = std::move(var_values);
        sol.duals_exact = std::move(duals);
    }
    return sol;
}

}  // namespace detail

using detail::SolveOptions;

inline LpSolution solve(const LinearProgram& p, Mode mode, const SolveOptions& opt = {})
{
    if (mode == Mode::Rational) return detail::solve_typed<Rational>(p, mode, opt);
    return detail::solve_typed<double>(p, mode, opt);
}

// Residuals of a claimed optimal solution; used by tests and the acceptance
// suite to confirm primal feasibility and the zero duality gap.
struct SolutionCheck {
    double max_primal_violation = 0.0;
    double duality_gap = 0.0;
    bool dual_value_matches = false;
};

inline SolutionCheck check_solution(const LinearProgram& p, const LpSolution& sol)
{
    SolutionCheck chk;
    if (sol.status != SolveStatus::Optimal) return chk;
    for (std::size_t i = 0; i < p.constraints().size(); ++i) {
        const auto& con = p.constraints()[i];
        double lhs = 0;
        for (const auto& [v, c] : con.terms) lhs += c.value * sol.assignment[v];
        double viol = 0;
        double rhs = con.rhs.value;
        if (con.rel == Relation::LessEq) viol = lhs - rhs;
        if (con.rel == Relation::GreaterEq) viol = rhs - lhs;
        if (con.rel == Relation::Equal) viol = std::abs(lhs - rhs);
        chk.max_primal_violation = std::max(chk.max_primal_violation, viol);
    }
    double dual_value = 0;
    for (std::size_t i = 0; i < p.constraints().size(); ++i)
        dual_value += sol.duals[i] * p.constraints()[i].rhs.value;
    chk.duality_gap = std::abs(dual_value - sol.value);
    chk.dual_value_matches = chk.duality_gap <= 1e-9 * (1.0 + std::abs(sol.value));
    return chk;
}

}  // namespace rdlp::lp

#endif
