#include "superschur/tu.hpp"

#include "superschur/errors.hpp"
#include "superschur/hook_system.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace superschur {

namespace {

// Fraction-free elimination; divisions are exact at every step.
template <typename Int>
Int bareiss_det(std::vector<Int> a, int n) {
    if (n == 0) return Int(1);
    Int prev = 1;
    int sign = 1;
    for (int i = 0; i + 1 < n; ++i) {
        if (a[i * n + i] == 0) {
            int p = -1;
            for (int r = i + 1; r < n; ++r)
                if (a[r * n + i] != 0) {
                    p = r;
                    break;
                }
            if (p < 0) return Int(0);
            for (int c = 0; c < n; ++c) std::swap(a[i * n + c], a[p * n + c]);
            sign = -sign;
        }
        for (int r = i + 1; r < n; ++r) {
            for (int c = i + 1; c < n; ++c)
                a[r * n + c] = (a[r * n + c] * a[i * n + i] - a[r * n + i] * a[i * n + c]) / prev;
            a[r * n + i] = 0;
        }
        prev = a[i * n + i];
    }
    Int d = a[(n - 1) * n + (n - 1)];
    return sign > 0 ? d : -d;
}

// Visits all size-m index subsets of [0, n) in lex order; fn returns true to stop.
bool for_each_combination(int n, int m, const std::function<bool(const std::vector<int>&)>& fn) {
    if (m > n) return false;
    std::vector<int> idx(m);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        if (fn(idx)) return true;
        int i = m - 1;
        while (i >= 0 && idx[i] == n - m + i) --i;
        if (i < 0) return false;
        ++idx[i];
        for (int j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
    }
}

} // namespace

BigInt det_exact(const IntMatrix& m) {
    if (m.rows != m.cols) throw std::invalid_argument("determinant of a non-square matrix");
    std::vector<BigInt> a(m.entries.begin(), m.entries.end());
    return bareiss_det<BigInt>(std::move(a), m.rows);
}

bool is_totally_unimodular(const IntMatrix& m, int cap) {
    for (long long v : m.entries)
        if (v < -1 || v > 1) return false; // a violating 1x1 minor
    const int smax = std::min(m.rows, m.cols);
    if (smax > cap)
        throw cap_exceeded("exhaustive minor test beyond cap " + std::to_string(cap));

    std::vector<long long> sub;
    for (int s = 2; s <= smax; ++s) {
        bool bad = for_each_combination(m.rows, s, [&](const std::vector<int>& ri) {
            return for_each_combination(m.cols, s, [&](const std::vector<int>& ci) {
                sub.resize(static_cast<std::size_t>(s) * s);
                for (int i = 0; i < s; ++i)
                    for (int j = 0; j < s; ++j) sub[i * s + j] = m.at(ri[i], ci[j]);
                long long d = bareiss_det<long long>(sub, s);
                return d < -1 || d > 1;
            });
        });
        if (bad) return false;
    }
    return true;
}

bool is_interval(const IntMatrix& m) {
    for (long long v : m.entries)
        if (v != 0 && v != 1) throw std::invalid_argument("interval test needs a {0,1} matrix");
    for (int r = 0; r < m.rows; ++r) {
        int first = -1, last = -1;
        for (int c = 0; c < m.cols; ++c)
            if (m.at(r, c) == 1) {
                if (first < 0) first = c;
                last = c;
            }
        for (int c = first; first >= 0 && c <= last; ++c)
            if (m.at(r, c) != 1) return false;
    }
    return true;
}

bool is_interval_up_to_column_permutation(const IntMatrix& m, int max_cols) {
    if (m.cols > max_cols)
        throw cap_exceeded("column permutation search beyond " + std::to_string(max_cols) + " columns");
    std::vector<int> perm(m.cols);
    std::iota(perm.begin(), perm.end(), 0);
    IntMatrix p(m.rows, m.cols);
    do {
        for (int r = 0; r < m.rows; ++r)
            for (int c = 0; c < m.cols; ++c) p.at(r, c) = m.at(r, perm[c]);
        if (is_interval(p)) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

IntMatrix row_sign_normalize(const IntMatrix& m, const std::vector<int>& signs) {
    if (static_cast<int>(signs.size()) != m.rows)
        throw std::invalid_argument("one sign per row required");
    for (int s : signs)
        if (s != 1 && s != -1) throw std::invalid_argument("signs must be +1 or -1");
    IntMatrix out = m;
    for (int r = 0; r < m.rows; ++r)
        if (signs[r] < 0)
            for (int c = 0; c < m.cols; ++c) out.at(r, c) = -out.at(r, c);
    return out;
}

CertReport certify_atilde_tu(const Partition& lambda, int k, int l, int cap) {
    const auto t0 = std::chrono::steady_clock::now();
    const HookSystem sys = build_system(lambda, k, l);
    const int d = sys.dim();

    // D = diag(I_{k+l}, 1, -1, -I_d)
    std::vector<int> signs(k + l, 1);
    signs.push_back(1);
    signs.push_back(-1);
    signs.insert(signs.end(), d, -1);
    const IntMatrix normalized = row_sign_normalize(sys.atilde, signs);

    CertReport rep;
    rep.rows = normalized.rows;
    rep.cols = normalized.cols;
    rep.zero_one_pass = std::all_of(normalized.entries.begin(), normalized.entries.end(),
                                    [](long long v) { return v == 0 || v == 1; });
    rep.interval_pass = rep.zero_one_pass && is_interval(normalized);
    if (d <= cap) {
        rep.exhaustive_checked = true;
        rep.exhaustive_pass = is_totally_unimodular(sys.atilde, cap);
    }
    rep.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

} // namespace superschur
