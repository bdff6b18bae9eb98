#include <doctest.h>

#include <random>
#include <set>

#include "dtower/f2.hpp"

using namespace dtower::f2;

namespace {

F2Matrix from_rows(std::size_t cols, const std::vector<std::vector<int>>& rows) {
    F2Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (int c : rows[r]) m.set(r, std::size_t(c));
    return m;
}

/// Rank by enumerating the whole row span; the oracle the eliminator is
/// checked against.
int exhaustive_rank(const F2Matrix& m) {
    std::set<std::vector<std::uint64_t>> span;
    for (unsigned combo = 0; combo < (1u << m.rows); ++combo) {
        BitVec v(m.cols);
        for (std::size_t r = 0; r < m.rows; ++r)
            if (combo & (1u << r)) v ^= m.row[r];
        std::vector<std::uint64_t> packed;
        for (std::size_t c = 0; c < m.cols; ++c)
            if (v.test(c)) packed.push_back(c);
        span.insert(packed);
    }
    int rank = 0;
    while ((std::size_t(1) << rank) < span.size()) ++rank;
    return rank;
}

F2Matrix multiply(const F2Matrix& a, const F2Matrix& b) {
    F2Matrix out(a.rows, b.cols);
    for (std::size_t r = 0; r < a.rows; ++r)
        for (std::size_t k = 0; k < a.cols; ++k)
            if (a.get(r, k)) out.row[r] ^= b.row[k];
    return out;
}

}  // namespace

TEST_CASE("row_reduce on the 2x2 identity") {
    EchelonForm e = row_reduce(F2Matrix::identity(2));
    CHECK(e.rank == 2);
    REQUIRE(e.pivots.size() == 2);
    CHECK(e.pivots[0] == std::pair<int, int>{0, 0});
    CHECK(e.pivots[1] == std::pair<int, int>{1, 1});
}

TEST_CASE("duplicated row cancels over F2") {
    F2Matrix m = from_rows(2, {{0, 1}, {0, 1}});
    CHECK(row_reduce(m).rank == 1);
}

TEST_CASE("boundary matrix of the figure-eight box has rank 2") {
    // Generators x,y,z,w with arrows x->y, x->z, y->w, z->w; rows are the
    // boundaries in the basis (x,y,z,w).
    F2Matrix m = from_rows(4, {{1, 2}, {3}, {3}, {}});
    CHECK(row_reduce(m).rank == 2);
    CHECK(exhaustive_rank(m) == 2);
}

TEST_CASE("row_reduce is idempotent and records an invertible transform") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t rows = 1 + rng() % 10, cols = 1 + rng() % 12;
        F2Matrix m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                if (rng() % 2) m.set(r, c);
        EchelonForm e = row_reduce(m);
        EchelonForm again = row_reduce(e.reduced);
        CHECK(again.reduced == e.reduced);
        CHECK(row_reduce(e.transform).rank == int(rows));
        CHECK(multiply(e.transform, m) == e.reduced);
    }
}

TEST_CASE("rank agrees with exhaustive row-span enumeration") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 120; ++trial) {
        std::size_t rows = 1 + rng() % 12, cols = 1 + rng() % 12;
        F2Matrix m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                if (rng() % 2) m.set(r, c);
        CHECK(row_reduce(m).rank == exhaustive_rank(m));
    }
}

TEST_CASE("left kernel vectors annihilate the matrix") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t rows = 1 + rng() % 8, cols = 1 + rng() % 8;
        F2Matrix m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                if (rng() % 2) m.set(r, c);
        for (const auto& v : left_kernel(m)) {
            BitVec product(cols);
            for (std::size_t r = 0; r < rows; ++r)
                if (v.test(r)) product ^= m.row[r];
            CHECK(product.none());
        }
        CHECK(left_kernel(m).size() == rows - std::size_t(row_reduce(m).rank));
    }
}

TEST_CASE("reducer answers membership like a fresh elimination") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t cols = 4 + rng() % 8;
        Reducer red(cols);
        std::vector<BitVec> inserted;
        for (int k = 0; k < 6; ++k) {
            BitVec v(cols);
            for (std::size_t c = 0; c < cols; ++c)
                if (rng() % 2) v.set(c);
            inserted.push_back(v);
            red.add(v);
        }
        // Any combination of inserted rows must be contained.
        BitVec combo(cols);
        for (const auto& v : inserted)
            if (rng() % 2) combo ^= v;
        CHECK(red.contains(combo));
    }
}
