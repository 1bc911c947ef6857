#ifndef RDLP_PMF_HPP
#define RDLP_PMF_HPP

// Discrete probability core: joint pmfs over named finite-alphabet variables
// and the Shannon quantities the bound builders consume. Deterministic
// attachments (one-hot kernels) become derived variables evaluated on the
// fly, so function-of-the-source messages never blow up the dense table.
// Everything is immutable after construction; operations return new values.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "rdlp/rational.hpp"

namespace rdlp::pmf {

struct VariableId {
    std::string name;
    int alphabet_size = 2;
};

using NameList = std::vector<std::string>;

class JointPmf {
public:
    static constexpr std::size_t kMaxCells = std::size_t(1) << 24;
    static constexpr double kZeroMass = 1e-15;

    JointPmf(std::vector<VariableId> vars, std::vector<double> mass)
        : base_(std::move(vars)), mass_(std::move(mass))
    {
        std::size_t cells = 1;
        for (const auto& v : base_) {
            if (v.alphabet_size < 1)
                throw Error("JointPmf: variable '" + v.name + "' has empty alphabet");
            if (cells > kMaxCells / static_cast<std::size_t>(v.alphabet_size))
                throw Error("JointPmf: alphabet product exceeds 2^24 cells");
            cells *= static_cast<std::size_t>(v.alphabet_size);
        }
        if (mass_.size() != cells)
            throw Error("JointPmf: mass table has " + std::to_string(mass_.size()) +
                        " entries, expected " + std::to_string(cells));
        double total = 0;
        for (double p : mass_) {
            if (p < -1e-12) throw Error("JointPmf: negative mass entry");
            total += p;
        }
        if (std::abs(total - 1.0) > 1e-12)
            throw Error("JointPmf: mass sums to " + std::to_string(total) + ", expected 1");
        check_names();
        build_strides();
    }

    // Product of independent uniform bits named `names`.
    static JointPmf fair_bits(const NameList& names)
    {
        std::vector<VariableId> vars;
        for (const auto& n : names) vars.push_back({n, 2});
        std::size_t cells = std::size_t(1) << names.size();
        return JointPmf(std::move(vars), std::vector<double>(cells, 1.0 / double(cells)));
    }

    static JointPmf independent(const std::vector<VariableId>& vars,
                                const std::vector<std::vector<double>>& marginals)
    {
        if (vars.size() != marginals.size())
            throw Error("JointPmf::independent: size mismatch");
        std::size_t cells = 1;
        for (std::size_t v = 0; v < vars.size(); ++v) {
            if (marginals[v].size() != static_cast<std::size_t>(vars[v].alphabet_size))
                throw Error("JointPmf::independent: marginal size mismatch for '" +
                            vars[v].name + "'");
            cells *= static_cast<std::size_t>(vars[v].alphabet_size);
        }
        std::vector<double> mass(cells, 1.0);
        for (std::size_t cell = 0; cell < cells; ++cell) {
            std::size_t idx = cell;
            for (std::size_t v = vars.size(); v-- > 0;) {
                mass[cell] *= marginals[v][idx % vars[v].alphabet_size];
                idx /= vars[v].alphabet_size;
            }
        }
        return JointPmf(std::vector<VariableId>(vars), std::move(mass));
    }

    std::vector<VariableId> variables() const
    {
        std::vector<VariableId> all = base_;
        for (const auto& d : derived_) all.push_back(d.var);
        return all;
    }
    const std::vector<double>& mass() const { return mass_; }
    std::size_t cells() const { return mass_.size(); }

    int index_of(const std::string& name) const
    {
        for (std::size_t i = 0; i < base_.size(); ++i)
            if (base_[i].name == name) return static_cast<int>(i);
        for (std::size_t i = 0; i < derived_.size(); ++i)
            if (derived_[i].var.name == name) return static_cast<int>(base_.size() + i);
        throw Error("JointPmf: unknown variable '" + name + "'");
    }
    bool has_variable(const std::string& name) const
    {
        for (const auto& v : base_)
            if (v.name == name) return true;
        for (const auto& d : derived_)
            if (d.var.name == name) return true;
        return false;
    }
    const VariableId& variable(int idx) const
    {
        if (idx < static_cast<int>(base_.size())) return base_[idx];
        return derived_[idx - base_.size()].var;
    }
    int alphabet_of(int idx) const { return variable(idx).alphabet_size; }

    // Value of variable `idx` in dense cell `cell`.
    int digit(std::size_t cell, int idx) const
    {
        if (idx < static_cast<int>(base_.size()))
            return static_cast<int>(cell / strides_[idx] % base_[idx].alphabet_size);
        const Derived& d = derived_[idx - base_.size()];
        std::size_t key = 0;
        for (int g : d.given) key = key * alphabet_of(g) + digit(cell, g);
        return d.values[key];
    }

    JointPmf marginalize(const NameList& keep) const
    {
        std::vector<int> keep_idx = resolve(keep);
        std::set<int> kept(keep_idx.begin(), keep_idx.end());
        // Preserve declaration order: base variables first, then derived.
        std::vector<int> ordered;
        int total_vars = static_cast<int>(base_.size() + derived_.size());
        for (int i = 0; i < total_vars; ++i)
            if (kept.count(i)) ordered.push_back(i);
        std::vector<VariableId> new_vars;
        std::size_t new_cells = 1;
        for (int i : ordered) {
            new_vars.push_back(variable(i));
            new_cells *= static_cast<std::size_t>(alphabet_of(i));
        }
        if (new_cells > kMaxCells) throw Error("marginalize: result exceeds 2^24 cells");
        std::vector<double> out(new_cells, 0.0);
        for (std::size_t cell = 0; cell < mass_.size(); ++cell) {
            if (mass_[cell] == 0.0) continue;
            std::size_t pos = 0;
            for (int i : ordered) pos = pos * alphabet_of(i) + digit(cell, i);
            out[pos] += mass_[cell];
        }
        return JointPmf(std::move(new_vars), std::move(out));
    }

    // H(A) in bits, computed from the exact marginal over A.
    double entropy(const NameList& A) const
    {
        if (A.empty()) return 0.0;
        return entropy_indices(resolve(A));
    }

    // I(A;B|C) with A, B, C pairwise disjoint. C may be empty.
    double conditional_mutual_information(const NameList& A, const NameList& B,
                                          const NameList& C) const
    {
        require_disjoint(A, B, "A", "B");
        require_disjoint(A, C, "A", "C");
        require_disjoint(B, C, "B", "C");
        return mutual_information_general(A, B, C);
    }

    // I(A;B|C) where the name sets may overlap; overlapping variables are
    // treated as the same coordinate (set-union semantics).
    double mutual_information_general(const NameList& A, const NameList& B,
                                      const NameList& C) const
    {
        std::vector<int> a = resolve(A), b = resolve(B), c = resolve(C);
        std::vector<int> ac = set_union(a, c), bc = set_union(b, c), abc = set_union(ac, b);
        double v = entropy_indices(ac) + entropy_indices(bc) - entropy_indices(abc) -
                   entropy_indices(c);
        return v < 0 ? 0.0 : v;
    }

    // True iff A <-> B <-> C holds within tol, i.e. I(A;C|B) <= tol. The
    // sets may overlap (a variable shared with B conditions itself away).
    bool is_markov_chain(const NameList& A, const NameList& B, const NameList& C,
                         double tol) const
    {
        return mutual_information_general(A, C, B) <= tol;
    }

    // Extends the joint with `nv` drawn from kernel rows indexed by the
    // `given` variables (in the listed order). The construction makes
    // nv <-> given <-> (everything else) hold exactly. One-hot kernels
    // become derived variables and leave the dense table untouched.
    JointPmf attach_channel(const VariableId& nv, const NameList& given,
                            const std::vector<std::vector<double>>& kernel) const
    {
        if (has_variable(nv.name))
            throw Error("attach_channel: variable '" + nv.name + "' already present");
        if (nv.alphabet_size < 1) throw Error("attach_channel: empty alphabet");
        std::vector<int> g = resolve(given);
        std::size_t rows = 1;
        for (int i : g) rows *= static_cast<std::size_t>(alphabet_of(i));
        if (kernel.size() != rows)
            throw Error("attach_channel: kernel has " + std::to_string(kernel.size()) +
                        " rows, expected " + std::to_string(rows));
        bool deterministic = true;
        for (const auto& row : kernel) {
            if (row.size() != static_cast<std::size_t>(nv.alphabet_size))
                throw Error("attach_channel: kernel row width mismatch");
            double s = 0;
            int ones = 0;
            for (double p : row) {
                if (p < -1e-12) throw Error("attach_channel: negative kernel entry");
                if (p == 1.0) ++ones;
                if (p != 0.0 && p != 1.0) deterministic = false;
                s += p;
            }
            if (std::abs(s - 1.0) > 1e-12)
                throw Error("attach_channel: kernel row sums to " + std::to_string(s));
            if (ones != 1) deterministic = false;
        }
        if (deterministic) {
            JointPmf out = *this;
            Derived d;
            d.var = nv;
            d.given = g;
            d.values.resize(rows);
            for (std::size_t r = 0; r < rows; ++r)
                for (int u = 0; u < nv.alphabet_size; ++u)
                    if (kernel[r][u] == 1.0) d.values[r] = u;
            out.derived_.push_back(std::move(d));
            return out;
        }
        // Dense extension: the new variable becomes a base axis; derived
        // variables keep working because base axes are preserved (their
        // strides change, so they are re-indexed against the new layout).
        std::vector<VariableId> new_base = base_;
        new_base.push_back(nv);
        std::size_t new_cells = mass_.size() * static_cast<std::size_t>(nv.alphabet_size);
        if (new_cells > kMaxCells) throw Error("attach_channel: alphabet product exceeds 2^24");
        std::vector<double> out_mass(new_cells, 0.0);
        for (std::size_t cell = 0; cell < mass_.size(); ++cell) {
            if (mass_[cell] == 0.0) continue;
            std::size_t row = 0;
            for (int i : g) row = row * alphabet_of(i) + digit(cell, i);
            for (int u = 0; u < nv.alphabet_size; ++u)
                out_mass[cell * nv.alphabet_size + u] = mass_[cell] * kernel[row][u];
        }
        JointPmf out(std::move(new_base), std::move(out_mass));
        // Base indices are unchanged by appending an axis, but references to
        // other derived variables shift by one combined slot.
        out.derived_ = derived_;
        for (auto& d : out.derived_)
            for (int& ref : d.given)
                if (ref >= static_cast<int>(base_.size())) ++ref;
        out.check_names();
        return out;
    }

    // Deterministic function of `given` as an attached variable.
    JointPmf attach_function(const VariableId& nv, const NameList& given,
                             const std::vector<int>& value_per_row) const
    {
        std::vector<int> g = resolve(given);
        std::size_t rows = 1;
        for (int i : g) rows *= static_cast<std::size_t>(alphabet_of(i));
        if (value_per_row.size() != rows) throw Error("attach_function: table size mismatch");
        std::vector<std::vector<double>> kernel(rows,
                                                std::vector<double>(nv.alphabet_size, 0.0));
        for (std::size_t r = 0; r < rows; ++r) {
            int v = value_per_row[r];
            if (v < 0 || v >= nv.alphabet_size) throw Error("attach_function: value out of range");
            kernel[r][v] = 1.0;
        }
        return attach_channel(nv, given, kernel);
    }

    // p(value assignment) for a subset of variables.
    double probability(const NameList& names, const std::vector<int>& values) const
    {
        std::vector<int> idx = resolve(names);
        double total = 0;
        for (std::size_t cell = 0; cell < mass_.size(); ++cell) {
            bool match = true;
            for (std::size_t k = 0; k < idx.size(); ++k)
                if (digit(cell, idx[k]) != values[k]) {
                    match = false;
                    break;
                }
            if (match) total += mass_[cell];
        }
        return total;
    }

    std::vector<int> resolve(const NameList& names) const
    {
        std::vector<int> out;
        out.reserve(names.size());
        for (const auto& n : names) out.push_back(index_of(n));
        return out;
    }

private:
    struct Derived {
        VariableId var;
        std::vector<int> given;   // indices into the combined variable list
        std::vector<int> values;  // packed given-values -> letter
    };

    std::vector<VariableId> base_;
    std::vector<double> mass_;
    std::vector<std::size_t> strides_;
    std::vector<Derived> derived_;

    void check_names() const
    {
        std::set<std::string> seen;
        for (const auto& v : base_)
            if (!seen.insert(v.name).second)
                throw Error("JointPmf: duplicate variable name '" + v.name + "'");
        for (const auto& d : derived_)
            if (!seen.insert(d.var.name).second)
                throw Error("JointPmf: duplicate variable name '" + d.var.name + "'");
    }

    void build_strides()
    {
        strides_.assign(base_.size(), 1);
        for (std::size_t i = base_.size(); i-- > 1;)
            strides_[i - 1] = strides_[i] * static_cast<std::size_t>(base_[i].alphabet_size);
    }

    double entropy_indices(const std::vector<int>& idx) const
    {
        if (idx.empty()) return 0.0;
        detail::u128 product = 1;
        bool dense_ok = true;
        for (int i : idx) {
            product *= static_cast<unsigned>(alphabet_of(i));
            if (product > 4 * mass_.size() && product > (std::size_t(1) << 20)) {
                dense_ok = false;
                break;
            }
        }
        if (dense_ok) {
            std::vector<double> marg(static_cast<std::size_t>(product), 0.0);
            for (std::size_t cell = 0; cell < mass_.size(); ++cell) {
                if (mass_[cell] == 0.0) continue;
                std::size_t pos = 0;
                for (int i : idx) pos = pos * alphabet_of(i) + digit(cell, i);
                marg[pos] += mass_[cell];
            }
            double h = 0;
            for (double p : marg)
                if (p > kZeroMass) h -= p * std::log2(p);
            return h;
        }
        // Key space too large for a dense marginal: accumulate sparse keys.
        std::vector<std::pair<detail::u128, double>> atoms;
        atoms.reserve(mass_.size());
        for (std::size_t cell = 0; cell < mass_.size(); ++cell) {
            if (mass_[cell] == 0.0) continue;
            detail::u128 pos = 0;
            for (int i : idx) pos = pos * alphabet_of(i) + digit(cell, i);
            atoms.push_back({pos, mass_[cell]});
        }
        std::sort(atoms.begin(), atoms.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        double h = 0;
        std::size_t i = 0;
        while (i < atoms.size()) {
            double p = atoms[i].second;
            std::size_t j = i + 1;
            while (j < atoms.size() && atoms[j].first == atoms[i].first) p += atoms[j++].second;
            if (p > kZeroMass) h -= p * std::log2(p);
            i = j;
        }
        return h;
    }

    static std::vector<int> set_union(const std::vector<int>& a, const std::vector<int>& b)
    {
        std::vector<int> out = a;
        for (int x : b)
            if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
        std::sort(out.begin(), out.end());
        return out;
    }

    void require_disjoint(const NameList& a, const NameList& b, const char* an,
                          const char* bn) const
    {
        for (const auto& x : a)
            for (const auto& y : b)
                if (x == y)
                    throw Error(std::string("sets ") + an + " and " + bn +
                                " overlap at variable '" + x + "'");
    }
};

}  // namespace rdlp::pmf

#endif
