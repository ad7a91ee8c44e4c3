#pragma once

#include <cstdint>
#include <vector>

#include "cr/gf2m.hpp"

namespace cr {

/// Dense matrix over GF(2^m). Small sizes only (dimensions up to ~100).
class GFMatrix {
public:
    GFMatrix() : F_(nullptr), rows_(0), cols_(0) {}
    GFMatrix(const GF2m* F, int rows, int cols)
        : F_(F), rows_(rows), cols_(cols), data_(std::size_t(rows) * cols, 0) {}

    static GFMatrix identity(const GF2m* F, int n) {
        GFMatrix m(F, n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    const GF2m* field() const { return F_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    std::uint32_t& at(int r, int c) { return data_[std::size_t(r) * cols_ + c]; }
    std::uint32_t at(int r, int c) const { return data_[std::size_t(r) * cols_ + c]; }

    GFMatrix operator*(const GFMatrix& o) const {
        GFMatrix r(F_, rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                std::uint32_t a = at(i, k);
                if (!a) continue;
                for (int j = 0; j < o.cols_; ++j)
                    r.at(i, j) ^= F_->mul(a, o.at(k, j));
            }
        return r;
    }

    GFMatrix operator+(const GFMatrix& o) const {
        GFMatrix r = *this;
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] ^= o.data_[i];
        return r;
    }

    bool operator==(const GFMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    std::vector<std::uint32_t> apply(const std::vector<std::uint32_t>& v) const {
        std::vector<std::uint32_t> out(std::size_t(rows_), 0);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                out[std::size_t(i)] ^= F_->mul(at(i, j), v[std::size_t(j)]);
        return out;
    }

    int rank() const { return rref_internal(nullptr); }

    /// Basis of {v : A v = 0}.
    std::vector<std::vector<std::uint32_t>> kernel() const {
        GFMatrix a = *this;
        std::vector<int> pivot_col;
        int r = 0;
        for (int c = 0; c < cols_ && r < rows_; ++c) {
            int pivot = -1;
            for (int i = r; i < rows_; ++i)
                if (a.at(i, c)) { pivot = i; break; }
            if (pivot < 0) continue;
            for (int j = 0; j < cols_; ++j) std::swap(a.at(r, j), a.at(pivot, j));
            std::uint32_t ip = F_->inv(a.at(r, c));
            for (int j = 0; j < cols_; ++j) a.at(r, j) = F_->mul(a.at(r, j), ip);
            for (int i = 0; i < rows_; ++i) {
                if (i == r) continue;
                std::uint32_t f = a.at(i, c);
                if (!f) continue;
                for (int j = 0; j < cols_; ++j) a.at(i, j) ^= F_->mul(f, a.at(r, j));
            }
            pivot_col.push_back(c);
            ++r;
        }
        std::vector<bool> is_pivot(std::size_t(cols_), false);
        for (int c : pivot_col) is_pivot[std::size_t(c)] = true;
        std::vector<std::vector<std::uint32_t>> basis;
        for (int c = 0; c < cols_; ++c) {
            if (is_pivot[std::size_t(c)]) continue;
            std::vector<std::uint32_t> v(std::size_t(cols_), 0);
            v[std::size_t(c)] = 1;
            for (std::size_t i = 0; i < pivot_col.size(); ++i)
                v[std::size_t(pivot_col[i])] = a.at(int(i), c);  // char 2: -x = x
            basis.push_back(v);
        }
        return basis;
    }

    GFMatrix inverse() const {
        GFMatrix a = *this;
        GFMatrix inv = identity(F_, rows_);
        for (int c = 0; c < cols_; ++c) {
            int pivot = -1;
            for (int i = c; i < rows_; ++i)
                if (a.at(i, c)) { pivot = i; break; }
            if (pivot < 0) throw FieldError("singular matrix");
            for (int j = 0; j < cols_; ++j) {
                std::swap(a.at(c, j), a.at(pivot, j));
                std::swap(inv.at(c, j), inv.at(pivot, j));
            }
            std::uint32_t ip = F_->inv(a.at(c, c));
            for (int j = 0; j < cols_; ++j) {
                a.at(c, j) = F_->mul(a.at(c, j), ip);
                inv.at(c, j) = F_->mul(inv.at(c, j), ip);
            }
            for (int i = 0; i < rows_; ++i) {
                if (i == c) continue;
                std::uint32_t f = a.at(i, c);
                if (!f) continue;
                for (int j = 0; j < cols_; ++j) {
                    a.at(i, j) ^= F_->mul(f, a.at(c, j));
                    inv.at(i, j) ^= F_->mul(f, inv.at(c, j));
                }
            }
        }
        return inv;
    }

    std::uint32_t determinant() const {
        GFMatrix a = *this;
        std::uint32_t det = 1;
        for (int c = 0; c < cols_; ++c) {
            int pivot = -1;
            for (int i = c; i < rows_; ++i)
                if (a.at(i, c)) { pivot = i; break; }
            if (pivot < 0) return 0;
            if (pivot != c)
                for (int j = 0; j < cols_; ++j) std::swap(a.at(c, j), a.at(pivot, j));
            det = F_->mul(det, a.at(c, c));
            std::uint32_t ip = F_->inv(a.at(c, c));
            for (int i = c + 1; i < rows_; ++i) {
                std::uint32_t f = F_->mul(a.at(i, c), ip);
                if (!f) continue;
                for (int j = c; j < cols_; ++j) a.at(i, j) ^= F_->mul(f, a.at(c, j));
            }
        }
        return det;
    }

private:
    int rref_internal(std::vector<int>* pivots) const {
        GFMatrix a = *this;
        int r = 0;
        for (int c = 0; c < cols_ && r < rows_; ++c) {
            int pivot = -1;
            for (int i = r; i < rows_; ++i)
                if (a.at(i, c)) { pivot = i; break; }
            if (pivot < 0) continue;
            for (int j = 0; j < cols_; ++j) std::swap(a.at(r, j), a.at(pivot, j));
            std::uint32_t ip = F_->inv(a.at(r, c));
            for (int j = 0; j < cols_; ++j) a.at(r, j) = F_->mul(a.at(r, j), ip);
            for (int i = 0; i < rows_; ++i) {
                if (i == r) continue;
                std::uint32_t f = a.at(i, c);
                if (!f) continue;
                for (int j = 0; j < cols_; ++j) a.at(i, j) ^= F_->mul(f, a.at(r, j));
            }
            if (pivots) pivots->push_back(c);
            ++r;
        }
        return r;
    }

    const GF2m* F_;
    int rows_, cols_;
    std::vector<std::uint32_t> data_;
};

}  // namespace cr
