#include "lrgen/fp.hpp"

#include <algorithm>
#include <functional>

namespace lrgen {

namespace {

int mod_inverse(int x, int p) {
    // p <= 7, brute force
    for (int y = 1; y < p; ++y)
        if ((x * y) % p == 1)
            return y;
    throw Error("FpMat: no inverse for " + std::to_string(x) + " mod " + std::to_string(p));
}

} // namespace

FpMat::FpMat(int rows, int cols, int p) : rows_(rows), cols_(cols), p_(p) {
    if (rows < 0 || cols < 0)
        throw Error("FpMat: negative dimensions");
    if (p < 2)
        throw Error("FpMat: modulus must be at least 2");
    data_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0);
}

FpMat FpMat::identity(int n, int p) {
    FpMat m(n, n, p);
    for (int i = 0; i < n; ++i)
        m.set(i, i, 1);
    return m;
}

void FpMat::set(int r, int c, int value) {
    int v = value % p_;
    if (v < 0)
        v += p_;
    data_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
          static_cast<std::size_t>(c)] = static_cast<std::uint8_t>(v);
}

void FpMat::add_at(int r, int c, int value) {
    set(r, c, at(r, c) + value);
}

FpMat FpMat::mul(const FpMat& other) const {
    if (cols_ != other.rows_ || p_ != other.p_)
        throw Error("FpMat::mul: shape or modulus mismatch");
    FpMat out(rows_, other.cols_, p_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            int aik = at(i, k);
            if (aik == 0)
                continue;
            for (int j = 0; j < other.cols_; ++j)
                out.add_at(i, j, aik * other.at(k, j));
        }
    return out;
}

FpMat FpMat::add(const FpMat& other) const {
    return add_scaled(other, 1);
}

FpMat FpMat::add_scaled(const FpMat& other, int scalar) const {
    if (rows_ != other.rows_ || cols_ != other.cols_ || p_ != other.p_)
        throw Error("FpMat::add: shape or modulus mismatch");
    FpMat out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) {
        int v = (out.data_[i] + scalar * other.data_[i]) % p_;
        if (v < 0)
            v += p_;
        out.data_[i] = static_cast<std::uint8_t>(v);
    }
    return out;
}

bool FpMat::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](std::uint8_t v) { return v == 0; });
}

namespace {

// Row echelon form in place; returns pivot columns.
std::vector<int> echelonize(std::vector<std::vector<int>>& m, int p) {
    std::vector<int> pivots;
    int rows = static_cast<int>(m.size());
    int cols = rows ? static_cast<int>(m[0].size()) : 0;
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int pivot = -1;
        for (int r = row; r < rows; ++r)
            if (m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0)
            continue;
        std::swap(m[static_cast<std::size_t>(row)], m[static_cast<std::size_t>(pivot)]);
        int inv = mod_inverse(m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)], p);
        for (int c = col; c < cols; ++c) {
            auto& v = m[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)];
            v = v * inv % p;
        }
        for (int r = 0; r < rows; ++r) {
            if (r == row)
                continue;
            int factor = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
            if (factor == 0)
                continue;
            for (int c = col; c < cols; ++c) {
                auto& v = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
                v = ((v - factor * m[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)]) %
                         p +
                     p) %
                    p;
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::vector<std::vector<int>> to_rows(const FpMat& m) {
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(m.rows()),
                                       std::vector<int>(static_cast<std::size_t>(m.cols())));
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = m.at(r, c);
    return rows;
}

} // namespace

int FpMat::rank() const {
    auto rows = to_rows(*this);
    return static_cast<int>(echelonize(rows, p_).size());
}

std::vector<int> FpMat::pivot_columns() const {
    auto rows = to_rows(*this);
    return echelonize(rows, p_);
}

std::vector<std::vector<std::uint8_t>> FpMat::kernel_basis() const {
    auto rows = to_rows(*this);
    std::vector<int> pivots = echelonize(rows, p_);
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols_), false);
    for (int c : pivots)
        is_pivot[static_cast<std::size_t>(c)] = true;

    std::vector<std::vector<std::uint8_t>> basis;
    for (int fc = 0; fc < cols_; ++fc) {
        if (is_pivot[static_cast<std::size_t>(fc)])
            continue;
        std::vector<std::uint8_t> v(static_cast<std::size_t>(cols_), 0);
        v[static_cast<std::size_t>(fc)] = 1;
        for (std::size_t pr = 0; pr < pivots.size(); ++pr) {
            int val = rows[pr][static_cast<std::size_t>(fc)];
            if (val != 0)
                v[static_cast<std::size_t>(pivots[pr])] =
                    static_cast<std::uint8_t>((p_ - val) % p_);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

FpMat FpMat::inverse() const {
    if (rows_ != cols_)
        throw Error("FpMat::inverse: matrix is not square");
    int n = rows_;
    std::vector<std::vector<int>> aug(static_cast<std::size_t>(n),
                                      std::vector<int>(static_cast<std::size_t>(2 * n), 0));
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c)
            aug[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = at(r, c);
        aug[static_cast<std::size_t>(r)][static_cast<std::size_t>(n + r)] = 1;
    }
    std::vector<int> pivots = echelonize(aug, p_);
    if (static_cast<int>(pivots.size()) != n || pivots.back() != n - 1)
        throw Error("FpMat::inverse: matrix is singular");
    FpMat out(n, n, p_);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            out.set(r, c, aug[static_cast<std::size_t>(r)][static_cast<std::size_t>(n + c)]);
    return out;
}

std::string FpMat::to_text() const {
    std::string out;
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) {
            if (c)
                out += ' ';
            out += std::to_string(at(r, c));
        }
        out += '\n';
    }
    return out;
}

std::vector<int> nilpotent_block_sizes(const FpMat& a) {
    if (a.rows() != a.cols())
        throw Error("nilpotent_block_sizes: matrix is not square");
    int n = a.rows();
    std::vector<int> ranks{n}; // rank(A^0)
    FpMat power = a;
    for (int k = 1; k <= n && ranks.back() > 0; ++k) {
        ranks.push_back(power.rank());
        power = power.mul(a);
    }
    if (ranks.back() != 0)
        throw NotNilpotent("matrix has nonzero rank at power " + std::to_string(n));

    // ranks[i] - ranks[i+1] = #blocks of size >= i+1 = dual partition
    std::vector<int> dual_parts;
    for (std::size_t i = 0; i + 1 < ranks.size(); ++i)
        dual_parts.push_back(ranks[i] - ranks[i + 1]);
    // convert the dual partition to block sizes
    std::vector<int> blocks;
    for (std::size_t i = 0; i < dual_parts.size(); ++i) {
        int count = dual_parts[i] - (i + 1 < dual_parts.size() ? dual_parts[i + 1] : 0);
        for (int k = 0; k < count; ++k)
            blocks.push_back(static_cast<int>(i) + 1);
    }
    std::sort(blocks.begin(), blocks.end(), std::greater<int>());
    return blocks;
}

} // namespace lrgen
