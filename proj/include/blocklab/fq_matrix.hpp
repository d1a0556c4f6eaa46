#pragma once

// Dense matrices over GF(q).  Convention throughout the module code: vectors
// are rows and act on the right (v -> v*M), so a representation satisfies
// rho(gh) = rho(g)*rho(h) under ordinary matrix products.

#include "gf_poly.hpp"

namespace blocklab {

class FqMatrix {
public:
    FqMatrix() = default;
    FqMatrix(FieldPtr F, int rows, int cols) : F_(std::move(F)), rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, 0) {}

    static FqMatrix identity(FieldPtr F, int n) {
        FqMatrix M(std::move(F), n, n);
        for (int i = 0; i < n; ++i) M.at(i, i) = 1;
        return M;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const FieldPtr& field() const { return F_; }

    std::uint32_t& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    std::uint32_t at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const std::vector<std::uint32_t>& data() const { return a_; }

    bool operator==(const FqMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    bool is_zero() const {
        for (auto v : a_)
            if (v) return false;
        return true;
    }

    FqMatrix operator*(const FqMatrix& o) const {
        if (cols_ != o.rows_) throw internal_error("matrix product shape mismatch");
        const FiniteField& F = *F_;
        FqMatrix r(F_, rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                std::uint32_t v = at(i, k);
                if (v == 0) continue;
                for (int j = 0; j < o.cols_; ++j) {
                    std::uint32_t w = o.at(k, j);
                    if (w) r.at(i, j) = F.add(r.at(i, j), F.mul(v, w));
                }
            }
        return r;
    }

    FqMatrix operator+(const FqMatrix& o) const {
        FqMatrix r(F_, rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = F_->add(a_[i], o.a_[i]);
        return r;
    }

    FqMatrix operator-(const FqMatrix& o) const {
        FqMatrix r(F_, rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = F_->sub(a_[i], o.a_[i]);
        return r;
    }

    FqMatrix scaled(std::uint32_t c) const {
        FqMatrix r(F_, rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = F_->mul(a_[i], c);
        return r;
    }

    FqMatrix transposed() const {
        FqMatrix r(F_, cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    // reduced row echelon form in place; returns pivot column list
    std::vector<int> rref() {
        const FiniteField& F = *F_;
        std::vector<int> pivots;
        int r = 0;
        for (int c = 0; c < cols_ && r < rows_; ++c) {
            int pr = -1;
            for (int i = r; i < rows_; ++i)
                if (at(i, c)) {
                    pr = i;
                    break;
                }
            if (pr == -1) continue;
            if (pr != r)
                for (int j = 0; j < cols_; ++j) std::swap(at(pr, j), at(r, j));
            std::uint32_t pi = F.inv(at(r, c));
            for (int j = c; j < cols_; ++j) at(r, j) = F.mul(at(r, j), pi);
            for (int i = 0; i < rows_; ++i) {
                if (i == r) continue;
                std::uint32_t f = at(i, c);
                if (!f) continue;
                for (int j = c; j < cols_; ++j) at(i, j) = F.sub(at(i, j), F.mul(f, at(r, j)));
            }
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

    int rank() const {
        FqMatrix t = *this;
        return static_cast<int>(t.rref().size());
    }

    // basis of {v : v * M = 0} as rows in reduced echelon form
    FqMatrix left_kernel() const {
        const FiniteField& F = *F_;
        FqMatrix t = transposed();  // solve M^T x^T = 0
        std::vector<int> piv = t.rref();
        std::vector<char> is_piv(rows_, 0);
        for (int c : piv) is_piv[c] = 1;
        int nf = rows_ - static_cast<int>(piv.size());
        FqMatrix K(F_, nf, rows_);
        int kr = 0;
        for (int c = 0; c < rows_; ++c) {
            if (is_piv[c]) continue;
            K.at(kr, c) = 1;
            for (std::size_t pi = 0; pi < piv.size(); ++pi) K.at(kr, piv[pi]) = F.neg(t.at(static_cast<int>(pi), c));
            ++kr;
        }
        return K;
    }

    // basis of {v : M v^T = 0}, one vector per row
    FqMatrix kernel_basis() const { return transposed().left_kernel(); }

    FqMatrix inverse() const {
        if (rows_ != cols_) throw internal_error("inverse of non-square matrix");
        const FiniteField& F = *F_;
        FqMatrix aug(F_, rows_, 2 * cols_);
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
            aug.at(i, cols_ + i) = 1;
        }
        std::vector<int> piv = aug.rref();
        if (static_cast<int>(piv.size()) != rows_ || piv[rows_ - 1] >= cols_)
            throw internal_error("matrix not invertible");
        FqMatrix r(F_, rows_, cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.at(i, j) = aug.at(i, cols_ + j);
        return r;
    }

    // characteristic polynomial (monic, low-to-high), via Hessenberg reduction
    Poly charpoly() const {
        if (rows_ != cols_) throw internal_error("charpoly of non-square matrix");
        const FiniteField& F = *F_;
        const int n = rows_;
        if (n == 0) return Poly{1};
        FqMatrix H = *this;
        for (int j = 0; j + 2 < n; ++j) {
            int pr = -1;
            for (int i = j + 1; i < n; ++i)
                if (H.at(i, j)) {
                    pr = i;
                    break;
                }
            if (pr == -1) continue;
            if (pr != j + 1) {
                for (int t = 0; t < n; ++t) std::swap(H.at(pr, t), H.at(j + 1, t));
                for (int t = 0; t < n; ++t) std::swap(H.at(t, pr), H.at(t, j + 1));
            }
            std::uint32_t piv_inv = F.inv(H.at(j + 1, j));
            for (int i = j + 2; i < n; ++i) {
                std::uint32_t f = F.mul(H.at(i, j), piv_inv);
                if (!f) continue;
                for (int t = 0; t < n; ++t) H.at(i, t) = F.sub(H.at(i, t), F.mul(f, H.at(j + 1, t)));
                for (int t = 0; t < n; ++t) H.at(t, j + 1) = F.add(H.at(t, j + 1), F.mul(f, H.at(t, i)));
            }
        }
        // p_k = (x - H[k-1][k-1]) p_{k-1} - sum over lower Hessenberg tails
        std::vector<Poly> p(n + 1);
        p[0] = Poly{1};
        for (int k = 1; k <= n; ++k) {
            Poly term = poly_mul(*F_, Poly{F.neg(H.at(k - 1, k - 1)), 1}, p[k - 1]);
            std::uint32_t prod = 1;
            for (int i = k - 1; i >= 1; --i) {
                prod = F.mul(prod, H.at(i, i - 1));
                if (!prod) break;
                std::uint32_t c = F.mul(H.at(i - 1, k - 1), prod);
                if (c) term = poly_sub(*F_, term, poly_scale(*F_, p[i - 1], c));
            }
            p[k] = std::move(term);
        }
        return p[n];
    }

private:
    FieldPtr F_;
    int rows_ = 0, cols_ = 0;
    std::vector<std::uint32_t> a_;
};

// f(M) by Horner
inline FqMatrix poly_eval_matrix(const Poly& f, const FqMatrix& M) {
    FqMatrix r(M.field(), M.rows(), M.cols());
    for (int i = poly_deg(f); i >= 0; --i) {
        r = r * M;
        if (f[i]) {
            for (int d = 0; d < M.rows(); ++d) r.at(d, d) = M.field()->add(r.at(d, d), f[i]);
        }
    }
    return r;
}

// rows of C expressed in the row space of B (B must be in reduced echelon
// form with the given pivot columns); throws if some row falls outside
inline FqMatrix express_in_rowspace(const FqMatrix& B, const std::vector<int>& pivots, const FqMatrix& C) {
    const FiniteField& F = *B.field();
    FqMatrix X(B.field(), C.rows(), B.rows());
    for (int i = 0; i < C.rows(); ++i) {
        std::vector<std::uint32_t> row(C.cols());
        for (int j = 0; j < C.cols(); ++j) row[j] = C.at(i, j);
        for (std::size_t k = 0; k < pivots.size(); ++k) {
            std::uint32_t f = row[pivots[k]];
            if (!f) continue;
            X.at(i, static_cast<int>(k)) = f;
            for (int j = 0; j < C.cols(); ++j) row[j] = F.sub(row[j], F.mul(f, B.at(static_cast<int>(k), j)));
        }
        for (auto v : row)
            if (v) throw internal_error("express_in_rowspace: row outside subspace");
    }
    return X;
}

}  // namespace blocklab
