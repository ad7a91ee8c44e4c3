#pragma once

#include <cstdint>
#include <vector>

namespace cr {

/// Dense bit matrix over the 2-element field.
class F2Matrix {
public:
    F2Matrix() : rows_(0), cols_(0), words_(0) {}
    F2Matrix(int rows, int cols);

    static F2Matrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    bool get(int r, int c) const {
        return (data_[std::size_t(r) * words_ + std::size_t(c) / 64] >> (c % 64)) & 1;
    }
    void set(int r, int c, bool v) {
        std::uint64_t& w = data_[std::size_t(r) * words_ + std::size_t(c) / 64];
        std::uint64_t bit = std::uint64_t(1) << (c % 64);
        w = v ? (w | bit) : (w & ~bit);
    }

    int rank() const;
    /// Basis of the right kernel {v : A v = 0}, one vector per row of result.
    std::vector<std::vector<bool>> kernel() const;

    std::vector<bool> apply(const std::vector<bool>& v) const;

private:
    int rows_, cols_, words_;
    std::vector<std::uint64_t> data_;
};

}  // namespace cr
