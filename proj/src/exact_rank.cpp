#include <gmpxx.h>

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <utility>
#include <vector>

#include "trispec/incidence.hpp"

namespace trispec {

namespace {

struct Overflow {};

__extension__ using int128 = __int128;
constexpr std::int64_t kEntryLimit = std::int64_t{1} << 62;

// (a*b - c*d) / q, exact. Throws Overflow once |quotient| reaches 2^62.
inline std::int64_t bareiss_step(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, std::int64_t q) {
    const int128 num = static_cast<int128>(a) * b - static_cast<int128>(c) * d;
    const int128 res = num / q;
    if (res >= kEntryLimit || res <= -kEntryLimit) throw Overflow{};
    return static_cast<std::int64_t>(res);
}

inline mpz_class bareiss_step(const mpz_class& a, const mpz_class& b, const mpz_class& c, const mpz_class& d,
                              const mpz_class& q) {
    mpz_class num = a * b - c * d;
    mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), q.get_mpz_t());
    return num;
}

inline bool is_zero(std::int64_t v) { return v == 0; }
inline bool is_zero(const mpz_class& v) { return sgn(v) == 0; }

// Fraction-free row echelon reduction; columns without a pivot are skipped.
// Every stored entry is a minor of the input, so the divisions are exact.
template <typename Scalar>
std::size_t bareiss_rank(std::vector<std::vector<Scalar>> a, std::size_t cols) {
    const std::size_t rows = a.size();
    std::size_t rank = 0;
    Scalar prev = 1;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::optional<std::size_t> pivot;
        for (std::size_t r = rank; r < rows; ++r)
            if (!is_zero(a[r][col])) {
                pivot = r;
                break;
            }
        if (!pivot) continue;
        std::swap(a[rank], a[*pivot]);
        const auto& prow = a[rank];
        const Scalar p = prow[col];
        for (std::size_t r = rank + 1; r < rows; ++r) {
            auto& row = a[r];
            const Scalar f = row[col];
            for (std::size_t j = col + 1; j < cols; ++j) {
                if (is_zero(f) && is_zero(row[j])) continue;
                row[j] = bareiss_step(p, row[j], f, prow[j], prev);
            }
            row[col] = 0;
        }
        prev = p;
        ++rank;
    }
    return rank;
}

template <typename Scalar>
std::vector<std::vector<Scalar>> load(const IntMatrix& m, bool transpose) {
    const std::size_t rows = transpose ? m.cols() : m.rows();
    const std::size_t cols = transpose ? m.rows() : m.cols();
    std::vector<std::vector<Scalar>> a(rows, std::vector<Scalar>(cols));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (transpose) a[c][r] = static_cast<long>(m(r, c));
            else a[r][c] = static_cast<long>(m(r, c));
        }
    return a;
}

std::size_t dense_rank(const IntMatrix& m) {
    const bool transpose = m.rows() < m.cols();
    const std::size_t cols = transpose ? m.rows() : m.cols();
    try {
        return bareiss_rank<std::int64_t>(load<std::int64_t>(m, transpose), cols);
    } catch (const Overflow&) {
        return bareiss_rank<mpz_class>(load<mpz_class>(m, transpose), cols);
    }
}

struct Block {
    std::vector<std::size_t> rows, cols;
};

// Connected components of the bipartite row/column nonzero pattern.
std::vector<Block> pattern_blocks(const IntMatrix& m) {
    const std::size_t nr = m.rows(), nc = m.cols();
    std::vector<std::size_t> parent(nr + nc);
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t r = 0; r < nr; ++r)
        for (std::size_t c = 0; c < nc; ++c)
            if (m(r, c) != 0) parent[find(r)] = find(nr + c);
    std::vector<std::size_t> index(nr + nc, SIZE_MAX);
    std::vector<Block> blocks;
    for (std::size_t x = 0; x < nr + nc; ++x) {
        const auto root = find(x);
        if (index[root] == SIZE_MAX) {
            index[root] = blocks.size();
            blocks.emplace_back();
        }
        auto& b = blocks[index[root]];
        (x < nr ? b.rows : b.cols).push_back(x < nr ? x : x - nr);
    }
    return blocks;
}

}  // namespace

std::size_t exact_rank(const IntMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    const auto blocks = pattern_blocks(m);
    if (blocks.size() == 1) return dense_rank(m);
    std::size_t rank = 0;
    for (const auto& b : blocks) {
        if (b.rows.empty() || b.cols.empty()) continue;
        IntMatrix sub(b.rows.size(), b.cols.size());
        for (std::size_t i = 0; i < b.rows.size(); ++i)
            for (std::size_t j = 0; j < b.cols.size(); ++j) sub(i, j) = m(b.rows[i], b.cols[j]);
        rank += dense_rank(sub);
    }
    return rank;
}

std::size_t exact_rank_bigint(const IntMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    return bareiss_rank<mpz_class>(load<mpz_class>(m, false), m.cols());
}

}  // namespace trispec
