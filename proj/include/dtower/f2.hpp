#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace dtower::f2 {

/// Dense bit vector over GF(2), packed into 64-bit words.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

    std::size_t size() const { return bits_; }

    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }

    void set(std::size_t i, bool v = true) {
        std::uint64_t mask = std::uint64_t(1) << (i & 63);
        if (v)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }

    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

    BitVec& operator^=(const BitVec& o) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= o.words_[k];
        return *this;
    }

    bool none() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }
    bool any() const { return !none(); }

    /// Index of the lowest set bit, or -1 when the vector is zero.
    int lowest_set() const;

    std::size_t popcount() const;

    friend bool operator==(const BitVec& a, const BitVec& b) {
        return a.bits_ == b.bits_ && a.words_ == b.words_;
    }

private:
    std::size_t bits_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Matrix over GF(2) stored as bit-packed rows.
struct F2Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<BitVec> row;

    F2Matrix() = default;
    F2Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), row(r, BitVec(c)) {}

    bool get(std::size_t r, std::size_t c) const { return row[r].test(c); }
    void set(std::size_t r, std::size_t c, bool v = true) { row[r].set(c, v); }

    static F2Matrix identity(std::size_t n);

    friend bool operator==(const F2Matrix& a, const F2Matrix& b) {
        return a.rows == b.rows && a.cols == b.cols && a.row == b.row;
    }
};

/// Reduced row-echelon form with the recorded row transform,
/// so that reduced = transform * original over GF(2).
struct EchelonForm {
    F2Matrix reduced;
    std::vector<std::pair<int, int>> pivots;  // (row, col), by ascending column
    int rank = 0;
    F2Matrix transform;
};

/// Gauss-Jordan elimination with deterministic pivoting: lowest column
/// index first, then lowest row index among the candidates.
EchelonForm row_reduce(const F2Matrix& m);

/// Basis of the left null space of m: all vectors v with v * m = 0.
std::vector<BitVec> left_kernel(const F2Matrix& m);

/// Incremental echelon basis of a row space.  Supports membership tests and,
/// optionally, tracking of each reduction as a combination over tag space.
class Reducer {
public:
    explicit Reducer(std::size_t cols, std::size_t tag_cols = 0)
        : cols_(cols), tag_cols_(tag_cols) {}

    std::size_t size() const { return rows_.size(); }

    /// Reduce v against the stored rows; returns the residual.
    BitVec reduce(BitVec v) const;

    /// Reduce v, tracking which tagged rows were used.
    std::pair<BitVec, BitVec> reduce_tracked(BitVec v) const;

    /// Insert v (with optional tag); returns false if v reduced to zero.
    bool add(BitVec v);
    bool add(BitVec v, BitVec tag);

    bool contains(const BitVec& v) const { return reduce(v).none(); }

private:
    std::size_t cols_;
    std::size_t tag_cols_;
    std::vector<BitVec> rows_;  // echelon rows, pivot columns strictly increasing
    std::vector<BitVec> tags_;
    std::vector<int> pivots_;
};

}  // namespace dtower::f2
