#include "cr/f2matrix.hpp"

namespace cr {

F2Matrix::F2Matrix(int rows, int cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64),
      data_(std::size_t(rows) * std::size_t((cols + 63) / 64), 0) {}

F2Matrix F2Matrix::identity(int n) {
    F2Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

int F2Matrix::rank() const {
    F2Matrix a = *this;
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
        int pivot = -1;
        for (int i = r; i < rows_; ++i)
            if (a.get(i, c)) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        for (int w = 0; w < words_; ++w)
            std::swap(a.data_[std::size_t(r) * words_ + w], a.data_[std::size_t(pivot) * words_ + w]);
        for (int i = 0; i < rows_; ++i) {
            if (i == r || !a.get(i, c)) continue;
            for (int w = 0; w < words_; ++w)
                a.data_[std::size_t(i) * words_ + w] ^= a.data_[std::size_t(r) * words_ + w];
        }
        ++r;
    }
    return r;
}

std::vector<std::vector<bool>> F2Matrix::kernel() const {
    // Row-reduce a working copy, tracking pivot columns.
    F2Matrix a = *this;
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
        int pivot = -1;
        for (int i = r; i < rows_; ++i)
            if (a.get(i, c)) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        for (int w = 0; w < words_; ++w)
            std::swap(a.data_[std::size_t(r) * words_ + w], a.data_[std::size_t(pivot) * words_ + w]);
        for (int i = 0; i < rows_; ++i) {
            if (i == r || !a.get(i, c)) continue;
            for (int w = 0; w < words_; ++w)
                a.data_[std::size_t(i) * words_ + w] ^= a.data_[std::size_t(r) * words_ + w];
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(std::size_t(cols_), false);
    for (int c : pivot_col) is_pivot[std::size_t(c)] = true;
    std::vector<std::vector<bool>> basis;
    for (int c = 0; c < cols_; ++c) {
        if (is_pivot[std::size_t(c)]) continue;
        std::vector<bool> v(std::size_t(cols_), false);
        v[std::size_t(c)] = true;
        for (std::size_t i = 0; i < pivot_col.size(); ++i)
            if (a.get(int(i), c)) v[std::size_t(pivot_col[i])] = true;
        basis.push_back(v);
    }
    return basis;
}

std::vector<bool> F2Matrix::apply(const std::vector<bool>& v) const {
    std::vector<bool> out(std::size_t(rows_), false);
    for (int i = 0; i < rows_; ++i) {
        bool s = false;
        for (int c = 0; c < cols_; ++c)
            if (v[std::size_t(c)] && get(i, c)) s = !s;
        out[std::size_t(i)] = s;
    }
    return out;
}

}  // namespace cr
