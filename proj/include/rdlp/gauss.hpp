#ifndef RDLP_GAUSS_HPP
#define RDLP_GAUSS_HPP

// Jointly Gaussian model core: block covariance algebra, Schur-complement
// conditional covariances, log-det mutual informations, and componentwise
// MSE feasibility checks. Messages are explicit linear-plus-independent-noise
// constructions, so the U <-> X <-> Y Markov structure holds by construction.

#include <cmath>
#include <string>
#include <vector>

#include "rdlp/pmf.hpp"
#include "rdlp/rational.hpp"

namespace rdlp::gauss {

class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols, 0.0) {}

    static Matrix identity(int n)
    {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    double& at(int r, int c) { return data_[std::size_t(r) * cols_ + c]; }
    double at(int r, int c) const { return data_[std::size_t(r) * cols_ + c]; }

    Matrix transpose() const
    {
        Matrix t(cols_, rows_);
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
        return t;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        if (a.cols_ != b.rows_) throw Error("Matrix: dimension mismatch in product");
        Matrix r(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                double aik = a.at(i, k);
                if (aik == 0.0) continue;
                for (int j = 0; j < b.cols_; ++j) r.at(i, j) += aik * b.at(k, j);
            }
        return r;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b)
    {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("Matrix: shape mismatch");
        Matrix r = a;
        for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] += b.data_[i];
        return r;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b)
    {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("Matrix: shape mismatch");
        Matrix r = a;
        for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] -= b.data_[i];
        return r;
    }

    Matrix submatrix(const std::vector<int>& row_idx, const std::vector<int>& col_idx) const
    {
        Matrix r(static_cast<int>(row_idx.size()), static_cast<int>(col_idx.size()));
        for (std::size_t i = 0; i < row_idx.size(); ++i)
            for (std::size_t j = 0; j < col_idx.size(); ++j)
                r.at(static_cast<int>(i), static_cast<int>(j)) = at(row_idx[i], col_idx[j]);
        return r;
    }

    double max_asymmetry() const
    {
        double worst = 0;
        for (int i = 0; i < rows_; ++i)
            for (int j = i + 1; j < cols_; ++j)
                worst = std::max(worst, std::abs(at(i, j) - at(j, i)));
        return worst;
    }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<double> data_;
};

// Eigenvalues of a symmetric matrix by cyclic Jacobi sweeps. Used only for
// validation (PSD checks, condition reports); sizes here are tiny.
inline std::vector<double> symmetric_eigenvalues(Matrix a, int max_sweeps = 64)
{
    int n = a.rows();
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += a.at(p, q) * a.at(p, q);
        if (off < 1e-28) break;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                double apq = a.at(p, q);
                if (std::abs(apq) < 1e-300) continue;
                double theta = (a.at(q, q) - a.at(p, p)) / (2 * apq);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
                for (int k = 0; k < n; ++k) {
                    double akp = a.at(k, p), akq = a.at(k, q);
                    a.at(k, p) = c * akp - s * akq;
                    a.at(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    double apk = a.at(p, k), aqk = a.at(q, k);
                    a.at(p, k) = c * apk - s * aqk;
                    a.at(q, k) = s * apk + c * aqk;
                }
            }
    }
    std::vector<double> eig(n);
    for (int i = 0; i < n; ++i) eig[i] = a.at(i, i);
    std::sort(eig.begin(), eig.end());
    return eig;
}

namespace detail {

// LDL^T factorization of a symmetric matrix, in place. Pivots below tol are
// rejected. Returns the diagonal D.
inline std::vector<double> ldlt(Matrix& a, double tol, const char* what)
{
    int n = a.rows();
    std::vector<double> d(n, 0.0);
    for (int j = 0; j < n; ++j) {
        double dj = a.at(j, j);
        for (int k = 0; k < j; ++k) dj -= a.at(j, k) * a.at(j, k) * d[k];
        if (dj <= tol)
            throw Error(std::string(what) + ": nonpositive pivot " + std::to_string(dj) +
                        " in symmetric factorization");
        d[j] = dj;
        for (int i = j + 1; i < n; ++i) {
            double v = a.at(i, j);
            for (int k = 0; k < j; ++k) v -= a.at(i, k) * a.at(j, k) * d[k];
            a.at(i, j) = v / dj;
        }
    }
    return d;
}

}  // namespace detail

// log2 det of a symmetric positive definite matrix.
inline double logdet2(const Matrix& m, double pivot_tol = 1e-12)
{
    if (m.rows() == 0) return 0.0;
    Matrix work = m;
    std::vector<double> d = detail::ldlt(work, pivot_tol, "logdet");
    double acc = 0;
    for (double x : d) acc += std::log2(x);
    return acc;
}

// Solves A X = B for symmetric positive definite A.
inline Matrix sym_solve(const Matrix& a, const Matrix& b, double pivot_tol = 1e-12)
{
    int n = a.rows();
    Matrix l = a;
    std::vector<double> d = detail::ldlt(l, pivot_tol, "sym_solve");
    Matrix x = b;
    for (int col = 0; col < b.cols(); ++col) {
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < i; ++k) x.at(i, col) -= l.at(i, k) * x.at(k, col);
        for (int i = 0; i < n; ++i) x.at(i, col) /= d[i];
        for (int i = n; i-- > 0;)
            for (int k = i + 1; k < n; ++k) x.at(i, col) -= l.at(k, i) * x.at(k, col);
    }
    return x;
}

struct GaussianMessage {
    std::string name;
    std::vector<std::string> source_blocks;  // blocks the observation acts on, concatenated
    Matrix observation;                      // rows = message dim, cols = total source dim
    Matrix noise_cov;                        // symmetric PSD, message dim
};

class GaussianSystem {
public:
    GaussianSystem(std::vector<std::pair<std::string, int>> blocks, Matrix sigma)
        : sigma_(std::move(sigma))
    {
        int offset = 0;
        for (auto& [name, dim] : blocks) {
            if (dim < 1) throw Error("GaussianSystem: block '" + name + "' has no dimensions");
            for (const auto& b : blocks_)
                if (b.name == name) throw Error("GaussianSystem: duplicate block '" + name + "'");
            blocks_.push_back({name, dim, offset});
            offset += dim;
        }
        if (sigma_.rows() != offset || sigma_.cols() != offset)
            throw Error("GaussianSystem: covariance is " + std::to_string(sigma_.rows()) + "x" +
                        std::to_string(sigma_.cols()) + ", blocks span " + std::to_string(offset));
        if (sigma_.max_asymmetry() > 1e-10)
            throw Error("GaussianSystem: covariance asymmetry exceeds 1e-10");
        auto eig = symmetric_eigenvalues(sigma_);
        if (!eig.empty() && eig.front() < -1e-9)
            throw Error("GaussianSystem: covariance has eigenvalue " +
                        std::to_string(eig.front()) + " < -1e-9");
    }

    // Independent unit-variance scalar components, one block each.
    static GaussianSystem independent_units(const std::vector<std::string>& names)
    {
        std::vector<std::pair<std::string, int>> blocks;
        for (const auto& n : names) blocks.push_back({n, 1});
        return GaussianSystem(std::move(blocks), Matrix::identity(static_cast<int>(names.size())));
    }

    const Matrix& covariance() const { return sigma_; }
    int dimension() const { return sigma_.rows(); }
    int block_dim(const std::string& name) const { return find(name).dim; }
    bool has_block(const std::string& name) const
    {
        for (const auto& b : blocks_)
            if (b.name == name) return true;
        return false;
    }
    std::vector<std::string> block_names() const
    {
        std::vector<std::string> out;
        for (const auto& b : blocks_) out.push_back(b.name);
        return out;
    }

    // Appends U = A x_src + N with N independent of everything else.
    GaussianSystem attach_message(const GaussianMessage& msg) const
    {
        std::vector<int> src = coords(msg.source_blocks);
        if (msg.observation.cols() != static_cast<int>(src.size()))
            throw Error("attach_message: observation matrix has " +
                        std::to_string(msg.observation.cols()) +
                        " columns, observed blocks span " + std::to_string(src.size()));
        int udim = msg.observation.rows();
        if (msg.noise_cov.rows() != udim || msg.noise_cov.cols() != udim)
            throw Error("attach_message: noise covariance shape mismatch");
        if (msg.noise_cov.max_asymmetry() > 1e-10)
            throw Error("attach_message: noise covariance not symmetric");
        int n = dimension();
        Matrix grown(n + udim, n + udim);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) grown.at(i, j) = sigma_.at(i, j);
        // Cov(U, Z) = A Cov(x_src, Z) for every existing coordinate Z.
        Matrix cross(udim, n);
        for (int r = 0; r < udim; ++r)
            for (int z = 0; z < n; ++z) {
                double acc = 0;
                for (std::size_t k = 0; k < src.size(); ++k)
                    acc += msg.observation.at(r, static_cast<int>(k)) * sigma_.at(src[k], z);
                cross.at(r, z) = acc;
            }
        Matrix self =
            msg.observation * sigma_.submatrix(src, src) * msg.observation.transpose() +
            msg.noise_cov;
        for (int r = 0; r < udim; ++r) {
            for (int z = 0; z < n; ++z) {
                grown.at(n + r, z) = cross.at(r, z);
                grown.at(z, n + r) = cross.at(r, z);
            }
            for (int c = 0; c < udim; ++c) grown.at(n + r, n + c) = self.at(r, c);
        }
        std::vector<std::pair<std::string, int>> blocks;
        for (const auto& b : blocks_) blocks.push_back({b.name, b.dim});
        blocks.push_back({msg.name, udim});
        return GaussianSystem(std::move(blocks), std::move(grown));
    }

    // Schur complement Sigma_TT - Sigma_TG Sigma_GG^{-1} Sigma_GT. A singular
    // given-block is retried once with a 1e-12 ridge.
    Matrix conditional_covariance(const std::vector<std::string>& target,
                                  const std::vector<std::string>& given) const
    {
        std::vector<int> t = coords(target), g = coords(given);
        for (int i : t)
            for (int j : g)
                if (i == j) throw Error("conditional_covariance: target and given overlap");
        Matrix stt = sigma_.submatrix(t, t);
        if (g.empty()) return stt;
        Matrix sgg = sigma_.submatrix(g, g);
        Matrix sgt = sigma_.submatrix(g, t);
        Matrix z;
        try {
            z = sym_solve(sgg, sgt);
        } catch (const Error&) {
            Matrix ridged = sgg;
            for (int i = 0; i < ridged.rows(); ++i) ridged.at(i, i) += 1e-12;
            try {
                z = sym_solve(ridged, sgt);
            } catch (const Error&) {
                auto eig = symmetric_eigenvalues(sgg);
                double lo = eig.empty() ? 0 : eig.front(), hi = eig.empty() ? 0 : eig.back();
                throw Error("conditional_covariance: given block singular beyond ridge repair "
                            "(eigenvalue range [" +
                            std::to_string(lo) + ", " + std::to_string(hi) + "], condition " +
                            std::to_string(hi / std::max(std::abs(lo), 1e-300)) + ")");
            }
        }
        Matrix stg = sigma_.submatrix(t, g);
        Matrix result = stt - stg * z;
        // Symmetrize away factorization round-off.
        for (int i = 0; i < result.rows(); ++i)
            for (int j = i + 1; j < result.cols(); ++j) {
                double v = 0.5 * (result.at(i, j) + result.at(j, i));
                result.at(i, j) = v;
                result.at(j, i) = v;
            }
        return result;
    }

    // I(A;B|C) = 1/2 log2( det K_{A|C} / det K_{A|B,C} ), in bits. Blocks of
    // A or B that also appear in C are conditioned away and dropped.
    double mutual_information(std::vector<std::string> A, std::vector<std::string> B,
                              const std::vector<std::string>& C) const
    {
        auto in_c = [&](const std::string& n) {
            return std::find(C.begin(), C.end(), n) != C.end();
        };
        std::erase_if(A, in_c);
        std::erase_if(B, in_c);
        A = dedupe(A);
        B = dedupe(B);
        if (A.empty() || B.empty()) return 0.0;
        Matrix ka_c = conditional_covariance(A, dedupe(C));
        std::vector<std::string> bc = B;
        for (const auto& n : C) bc.push_back(n);
        Matrix ka_bc = conditional_covariance(A, dedupe(bc));
        double v = 0.5 * (logdet2(ka_c) - logdet2(ka_bc));
        return v < 0 ? 0.0 : v;
    }

    // Componentwise MSE check: every diagonal entry of
    // K_{X | messages, side_info} at most the matching D entry + 1e-9.
    bool mse_feasible(const std::string& source, const std::vector<std::string>& messages,
                      const std::vector<std::string>& side_info,
                      const std::vector<double>& target) const
    {
        const Block& src = find(source);
        if (static_cast<int>(target.size()) != src.dim)
            throw Error("mse_feasible: distortion vector has " + std::to_string(target.size()) +
                        " entries, source dimension is " + std::to_string(src.dim));
        for (double d : target)
            if (d <= 0) throw Error("mse_feasible: distortion targets must be positive");
        std::vector<std::string> given = messages;
        for (const auto& s : side_info)
            if (std::find(given.begin(), given.end(), s) == given.end()) given.push_back(s);
        Matrix k = conditional_covariance({source}, given);
        for (int i = 0; i < src.dim; ++i)
            if (k.at(i, i) > target[i] + 1e-9) return false;
        return true;
    }

    // Fine scalar quantization of a pair of jointly Gaussian scalars onto a
    // grid; the cross-oracle tests compare discrete and Gaussian MI.
    static pmf::JointPmf quantize_pair(double var_x, double var_y, double cov_xy, int bins,
                                       double span_sigma = 6.0)
    {
        std::vector<pmf::VariableId> vars{{"Xq", bins}, {"Yq", bins}};
        std::vector<double> mass(std::size_t(bins) * bins, 0.0);
        double sx = std::sqrt(var_x), sy = std::sqrt(var_y);
        double rho = cov_xy / (sx * sy);
        double det = var_x * var_y - cov_xy * cov_xy;
        double norm = 1.0 / (2 * 3.14159265358979323846 * std::sqrt(det));
        double total = 0;
        for (int i = 0; i < bins; ++i)
            for (int j = 0; j < bins; ++j) {
                double x = (-span_sigma + (i + 0.5) * 2 * span_sigma / bins) * sx;
                double y = (-span_sigma + (j + 0.5) * 2 * span_sigma / bins) * sy;
                double q = (x * x / var_x - 2 * rho * x / sx * y / sy + y * y / var_y) /
                           (1 - rho * rho);
                double p = norm * std::exp(-q / 2);
                mass[std::size_t(i) * bins + j] = p;
                total += p;
            }
        for (auto& p : mass) p /= total;
        return pmf::JointPmf(std::move(vars), std::move(mass));
    }

private:
    struct Block {
        std::string name;
        int dim;
        int offset;
    };
    std::vector<Block> blocks_;
    Matrix sigma_;

    const Block& find(const std::string& name) const
    {
        for (const auto& b : blocks_)
            if (b.name == name) return b;
        throw Error("GaussianSystem: unknown block '" + name + "'");
    }

    static std::vector<std::string> dedupe(const std::vector<std::string>& names)
    {
        std::vector<std::string> out;
        for (const auto& n : names)
            if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(n);
        return out;
    }

    std::vector<int> coords(const std::vector<std::string>& names) const
    {
        std::vector<int> out;
        for (const auto& n : names) {
            const Block& b = find(n);
            for (int i = 0; i < b.dim; ++i) out.push_back(b.offset + i);
        }
        return out;
    }
};

}  // namespace rdlp::gauss

#endif
