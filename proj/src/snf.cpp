#include "spherex/snf.hpp"

#include "spherex/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace spherex {

namespace {

long long checked_sub_mul(long long a, long long q, long long b) {
    long long t, r;
    if (__builtin_mul_overflow(q, b, &t) || __builtin_sub_overflow(a, t, &r)) throw InternalError("smith normal form overflow");
    return r;
}

}  // namespace

std::vector<long long> smith_diagonal(IntMatrix a, std::size_t cols) {
    const std::size_t rows = a.size();
    for (auto& r : a) r.resize(cols, 0);
    const std::size_t n = std::min(rows, cols);
    for (std::size_t t = 0; t < n; ++t) {
        while (true) {
            // pivot: smallest nonzero |entry| in the trailing block
            std::size_t pi = rows, pj = cols;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (a[i][j] != 0 && (pi == rows || std::llabs(a[i][j]) < std::llabs(a[pi][pj]))) {
                        pi = i;
                        pj = j;
                    }
            if (pi == rows) {
                std::vector<long long> d;
                for (std::size_t i = 0; i < n; ++i) d.push_back(i < t ? std::llabs(a[i][i]) : 0);
                return d;
            }
            std::swap(a[t], a[pi]);
            for (auto& r : a) std::swap(r[t], r[pj]);
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                long long q = a[i][t] / a[t][t];
                if (q)
                    for (std::size_t j = t; j < cols; ++j) a[i][j] = checked_sub_mul(a[i][j], q, a[t][j]);
                if (a[i][t]) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                long long q = a[t][j] / a[t][t];
                if (q)
                    for (std::size_t i = t; i < rows; ++i) a[i][j] = checked_sub_mul(a[i][j], q, a[i][t]);
                if (a[t][j]) clean = false;
            }
            if (!clean) continue;
            // divisibility: fold a row that the pivot does not divide into row t
            bool divides = true;
            for (std::size_t i = t + 1; i < rows && divides; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        for (std::size_t k = t; k < cols; ++k) a[t][k] += a[i][k];
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
    }
    std::vector<long long> d;
    for (std::size_t i = 0; i < n; ++i) d.push_back(std::llabs(a[i][i]));
    return d;
}

std::vector<long long> invariant_factors(const IntMatrix& relations, std::size_t cols) {
    auto d = smith_diagonal(relations, cols);
    std::vector<long long> out;
    for (long long x : d)
        if (x != 1) out.push_back(x);
    for (std::size_t i = d.size(); i < cols; ++i) out.push_back(0);
    // zeros (free part) go last so the finite part keeps d1 | d2 | ...
    std::stable_partition(out.begin(), out.end(), [](long long x) { return x != 0; });
    return out;
}

}  // namespace spherex
