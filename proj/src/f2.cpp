#include "dtower/f2.hpp"

#include <bit>

namespace dtower::f2 {

int BitVec::lowest_set() const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
        if (words_[k]) return int(k * 64 + std::size_t(std::countr_zero(words_[k])));
    }
    return -1;
}

std::size_t BitVec::popcount() const {
    std::size_t n = 0;
    for (auto w : words_) n += std::size_t(std::popcount(w));
    return n;
}

F2Matrix F2Matrix::identity(std::size_t n) {
    F2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
}

EchelonForm row_reduce(const F2Matrix& m) {
    EchelonForm e;
    e.reduced = m;
    e.transform = F2Matrix::identity(m.rows);
    std::size_t next = 0;
    for (std::size_t col = 0; col < m.cols && next < m.rows; ++col) {
        std::size_t pivot = m.rows;
        for (std::size_t r = next; r < m.rows; ++r) {
            if (e.reduced.row[r].test(col)) {
                pivot = r;
                break;
            }
        }
        if (pivot == m.rows) continue;
        std::swap(e.reduced.row[next], e.reduced.row[pivot]);
        std::swap(e.transform.row[next], e.transform.row[pivot]);
        for (std::size_t r = 0; r < m.rows; ++r) {
            if (r != next && e.reduced.row[r].test(col)) {
                e.reduced.row[r] ^= e.reduced.row[next];
                e.transform.row[r] ^= e.transform.row[next];
            }
        }
        e.pivots.emplace_back(int(next), int(col));
        ++next;
    }
    e.rank = int(e.pivots.size());
    return e;
}

std::vector<BitVec> left_kernel(const F2Matrix& m) {
    EchelonForm e = row_reduce(m);
    std::vector<BitVec> basis;
    for (std::size_t r = std::size_t(e.rank); r < m.rows; ++r) basis.push_back(e.transform.row[r]);
    return basis;
}

BitVec Reducer::reduce(BitVec v) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        if (v.test(std::size_t(pivots_[k]))) v ^= rows_[k];
    }
    return v;
}

std::pair<BitVec, BitVec> Reducer::reduce_tracked(BitVec v) const {
    BitVec combo(tag_cols_);
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        if (v.test(std::size_t(pivots_[k]))) {
            v ^= rows_[k];
            combo ^= tags_[k];
        }
    }
    return {v, combo};
}

bool Reducer::add(BitVec v) { return add(std::move(v), BitVec(tag_cols_)); }

bool Reducer::add(BitVec v, BitVec tag) {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        if (v.test(std::size_t(pivots_[k]))) {
            v ^= rows_[k];
            tag ^= tags_[k];
        }
    }
    int p = v.lowest_set();
    if (p < 0) return false;
    // Keep rows ordered by pivot column so reduce() stays a single sweep.
    std::size_t pos = 0;
    while (pos < rows_.size() && pivots_[pos] < p) ++pos;
    rows_.insert(rows_.begin() + long(pos), std::move(v));
    tags_.insert(tags_.begin() + long(pos), std::move(tag));
    pivots_.insert(pivots_.begin() + long(pos), p);
    return true;
}

}  // namespace dtower::f2
