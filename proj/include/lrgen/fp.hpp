#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lrgen/errors.hpp"

namespace lrgen {

/// Dense matrix over the prime field F_p. Entries are stored reduced
/// mod p. Sizes stay tiny here (the oracle works at desk scale), so the
/// implementation favors clarity over blocking.
class FpMat {
public:
    FpMat() = default;
    FpMat(int rows, int cols, int p);

    static FpMat identity(int n, int p);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int prime() const { return p_; }

    std::uint8_t at(int r, int c) const {
        return data_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
                     static_cast<std::size_t>(c)];
    }
    void set(int r, int c, int value);
    /// at(r,c) += value (mod p)
    void add_at(int r, int c, int value);

    FpMat mul(const FpMat& other) const;
    FpMat add(const FpMat& other) const;
    /// this + scalar * other
    FpMat add_scaled(const FpMat& other, int scalar) const;
    bool is_zero() const;

    int rank() const;

    /// Basis of the right null space, one column vector per basis element.
    std::vector<std::vector<std::uint8_t>> kernel_basis() const;

    /// Inverse of a square invertible matrix; throws Error if singular.
    FpMat inverse() const;

    /// Columns spanning the column space (a maximal independent subset).
    std::vector<int> pivot_columns() const;

    friend bool operator==(const FpMat& a, const FpMat& b) = default;

    std::string to_text() const; // row-major, space-separated, one row per line

private:
    int rows_ = 0;
    int cols_ = 0;
    int p_ = 2;
    std::vector<std::uint8_t> data_;
};

/// Jordan type of a nilpotent matrix, recovered from the rank sequence:
/// the number of blocks of size >= i is rank(A^{i-1}) - rank(A^i).
/// Throws NotNilpotent if A^n != 0.
std::vector<int> nilpotent_block_sizes(const FpMat& a);

} // namespace lrgen
