#include "seifert_oracle.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <numeric>
#include <stdexcept>

namespace oracle {

using Big = boost::multiprecision::cpp_rational;

// Bricks of the braid (s_1 ... s_{p-1})^q: column i in [1,p-1], row j in
// [1,q-1]. Within a column consecutive bricks share a band; across
// adjacent columns the (i,j)/(i+1,j) and (i,j)/(i+1,j-1) loops interleave
// with opposite orientations. One-sided linking entries below, self
// linking -1 per positive Hopf band.
std::vector<std::vector<long long>> torus_seifert_matrix(long long p, long long q) {
    if (p < 2 || q < 2 || std::gcd(p, q) != 1)
        throw std::invalid_argument("torus_seifert_matrix needs coprime p,q >= 2");
    const long long n = (p - 1) * (q - 1);
    auto idx = [q](long long i, long long j) { return (i - 1) * (q - 1) + (j - 1); };
    std::vector<std::vector<long long>> v(n, std::vector<long long>(n, 0));
    for (long long i = 1; i < p; ++i) {
        for (long long j = 1; j < q; ++j) {
            v[idx(i, j)][idx(i, j)] = -1;
            if (j + 1 < q) v[idx(i, j)][idx(i, j + 1)] = 1;
            if (i + 1 < p) {
                v[idx(i, j)][idx(i + 1, j)] = 1;
                if (j - 1 >= 1) v[idx(i, j)][idx(i + 1, j - 1)] = -1;
            }
        }
    }
    return v;
}

long long symmetric_signature(const std::vector<std::vector<long long>>& m) {
    const size_t n = m.size();
    std::vector<std::vector<Big>> a(n, std::vector<Big>(n));
    for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < n; ++c) a[r][c] = m[r][c];

    long long pos = 0, neg = 0;
    for (size_t k = 0; k < n; ++k) {
        if (a[k][k] == 0) {
            size_t j = k + 1;
            while (j < n && a[j][k] == 0) ++j;
            if (j == n) continue;  // zero row/column tail contributes nothing
            // congruence: add (or, if that cancels, subtract) row/col j;
            // the two pivots differ by 4*a[j][k] != 0 so one works
            for (int sgn : {1, -1}) {
                auto b = a;
                for (size_t c = 0; c < n; ++c) b[k][c] += sgn * b[j][c];
                for (size_t r = 0; r < n; ++r) b[r][k] += sgn * b[r][j];
                if (b[k][k] != 0) {
                    a = std::move(b);
                    break;
                }
            }
        }
        const Big d = a[k][k];
        if (d > 0)
            ++pos;
        else
            ++neg;
        for (size_t r = k + 1; r < n; ++r) {
            if (a[r][k] == 0) continue;
            const Big f = a[r][k] / d;
            for (size_t c = k; c < n; ++c) a[r][c] -= f * a[k][c];
        }
        for (size_t c = k + 1; c < n; ++c) a[k][c] = 0;
        for (size_t r = k + 1; r < n; ++r) a[r][k] = 0;
    }
    return pos - neg;
}

long long torus_signature(long long p, long long q) {
    auto v = torus_seifert_matrix(p, q);
    const size_t n = v.size();
    std::vector<std::vector<long long>> sym(n, std::vector<long long>(n));
    for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < n; ++c) sym[r][c] = v[r][c] + v[c][r];
    return symmetric_signature(sym);
}

}  // namespace oracle
