#include "superschur/hook_system.hpp"

#include "superschur/errors.hpp"
#include "superschur/polynomial.hpp"
#include "superschur/tableau.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace superschur {

HookSystem build_system(const Partition& lambda, int k, int l) {
    if (k < 0 || l < 0) throw std::invalid_argument("k and l must be nonnegative");
    if (!is_hook(lambda, k, l))
        throw std::invalid_argument("shape " + lambda.to_string() + " is not a (" +
                                    std::to_string(k) + "," + std::to_string(l) + ")-hook partition");
    HookSystem sys;
    sys.k = k;
    sys.l = l;
    sys.lambda = lambda;
    const int d = k + l;
    const long long n = lambda.size();

    sys.atilde = IntMatrix(k + l + 2 + d, d);
    sys.btilde.assign(k + l + 2 + d, 0);
    const auto lrow = row_prefix_sums(lambda, k);
    const auto lcol = col_prefix_sums(lambda, l);
    for (int r = 0; r < k; ++r) {
        for (int c = 0; c <= r; ++c) sys.atilde.at(r, c) = 1;
        sys.btilde[r] = lrow[r];
    }
    for (int s = 0; s < l; ++s) {
        for (int c = 0; c <= s; ++c) sys.atilde.at(k + s, k + c) = 1;
        sys.btilde[k + s] = lcol[s];
    }
    for (int c = 0; c < d; ++c) {
        sys.atilde.at(k + l, c) = 1;
        sys.atilde.at(k + l + 1, c) = -1;
    }
    sys.btilde[k + l] = n;
    sys.btilde[k + l + 1] = -n;
    for (int c = 0; c < d; ++c) sys.atilde.at(k + l + 2 + c, c) = -1; // -I_d, bounds 0
    return sys;
}

namespace {

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

// Subset-size pairs whose constraints can define facets. (r,s) is implied by
// (r+1,s) when lambda_{r+1} <= s (equal bounds), by (r,s+1) when
// lambda'_{s+1} <= r, and the full pair (k,l) repeats the size bound.
std::vector<std::pair<int, int>> kept_pairs(const Partition& lambda, int k, int l, bool prune) {
    const Partition conj = lambda.conjugate();
    std::vector<std::pair<int, int>> out;
    for (int r = 0; r <= k; ++r)
        for (int s = 0; s <= l; ++s) {
            if (r == 0 && s == 0) continue;
            if (prune) {
                if (r == k && s == l) continue;
                if (r < k && lambda.part(r) <= s) continue;
                if (s < l && conj.part(s) <= r) continue;
            }
            out.emplace_back(r, s);
        }
    return out;
}

long long dot_row(const IntMatrix& m, int r, const std::vector<long long>& x) {
    long long acc = 0;
    for (int c = 0; c < m.cols; ++c) acc += m.at(r, c) * x[c];
    return acc;
}

// Exact determinant of a small integer matrix (entries stay well inside
// 64 bits at the dimensions the vertex cap allows).
long long det_from(std::vector<long long> a, int n) {
    if (n == 0) return 1;
    long long prev = 1;
    int sign = 1;
    for (int i = 0; i + 1 < n; ++i) {
        if (a[i * n + i] == 0) {
            int p = -1;
            for (int r = i + 1; r < n; ++r)
                if (a[r * n + i] != 0) {
                    p = r;
                    break;
                }
            if (p < 0) return 0;
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
    long long dv = a[(n - 1) * n + (n - 1)];
    return sign > 0 ? dv : -dv;
}

} // namespace

InequalitySystem newton_inequalities(const HookSystem& sys, bool prune) {
    const int k = sys.k, l = sys.l, d = sys.dim();
    std::vector<std::vector<long long>> rows;
    std::vector<long long> bounds;

    for (auto [r, s] : kept_pairs(sys.lambda, k, l, prune)) {
        const long long bound = hook_region_cells(sys.lambda, r, s);
        for_each_combination(k, r, [&](const std::vector<int>& ri) {
            for_each_combination(l, s, [&](const std::vector<int>& si) {
                std::vector<long long> row(d, 0);
                for (int i : ri) row[i] = 1;
                for (int j : si) row[k + j] = 1;
                rows.push_back(std::move(row));
                bounds.push_back(bound);
                return false;
            });
            return false;
        });
    }
    for (int c = 0; c < d; ++c) {
        std::vector<long long> row(d, 0);
        row[c] = -1;
        rows.push_back(std::move(row));
        bounds.push_back(0);
    }

    InequalitySystem out;
    out.rows = IntMatrix(static_cast<int>(rows.size()), d);
    out.bounds = std::move(bounds);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (int c = 0; c < d; ++c) out.rows.at(static_cast<int>(r), c) = rows[r][c];
    return out;
}

bool membership(const HookSystem& sys, const std::vector<Rational>& u) {
    const int k = sys.k, l = sys.l;
    if (static_cast<int>(u.size()) != sys.dim())
        throw std::invalid_argument("point dimension does not match the system");
    for (const Rational& v : u)
        if (v < 0) return false;
    Rational total = 0;
    for (const Rational& v : u) total += v;
    if (total != sys.target()) return false;

    // the subset bounds reduce to prefix sums of the sorted blocks
    std::vector<Rational> a(u.begin(), u.begin() + k);
    std::vector<Rational> b(u.begin() + k, u.end());
    std::sort(a.rbegin(), a.rend());
    std::sort(b.rbegin(), b.rend());
    std::vector<Rational> pa(k + 1, 0), pb(l + 1, 0);
    for (int r = 0; r < k; ++r) pa[r + 1] = pa[r] + a[r];
    for (int s = 0; s < l; ++s) pb[s + 1] = pb[s] + b[s];
    for (int r = 0; r <= k; ++r)
        for (int s = 0; s <= l; ++s) {
            if (r == 0 && s == 0) continue;
            if (pa[r] + pb[s] > hook_region_cells(sys.lambda, r, s)) return false;
        }
    return true;
}

LatticePointSet enumerate_lattice(const HookSystem& sys) {
    const int k = sys.k, l = sys.l, d = sys.dim();
    const long long n = sys.target();
    LatticePointSet out;
    out.dims = d;

    if (d == 0) {
        if (n == 0) out.points.push_back({});
        return out;
    }
    // per-coordinate caps: a single letter fills at most one row / one column
    std::vector<long long> cap(d);
    const long long acap = sys.lambda.part(0);
    const long long bcap = sys.lambda.conjugate().part(0);
    for (int i = 0; i < d; ++i) cap[i] = std::min<long long>(n, i < k ? acap : bcap);
    std::vector<long long> suffix(d + 1, 0);
    for (int i = d - 1; i >= 0; --i) suffix[i] = suffix[i + 1] + cap[i];

    std::vector<int> point(d, 0);
    auto rec = [&](auto&& self, int i, long long rem) -> void {
        if (i == d) {
            if (rem == 0 && satisfies_hook(point, sys.lambda, k, l))
                out.points.emplace_back(point.begin(), point.end());
            return;
        }
        const long long hi = std::min(cap[i], rem);
        const long long lo = std::max<long long>(0, rem - suffix[i + 1]);
        for (long long v = lo; v <= hi; ++v) {
            point[i] = static_cast<int>(v);
            self(self, i + 1, rem - v);
        }
        point[i] = 0;
    };
    rec(rec, 0, n);
    // DFS in ascending coordinate order emits lexicographically sorted points
    return out;
}

std::vector<std::vector<Rational>> enumerate_vertices(const HookSystem& sys, int cap_dim) {
    const int d = sys.dim();
    const long long n = sys.target();
    if (d > cap_dim)
        throw cap_exceeded("vertex enumeration beyond dimension cap " + std::to_string(cap_dim));
    if (d == 0) {
        std::vector<std::vector<Rational>> out;
        if (n == 0) out.push_back({});
        return out;
    }

    const InequalitySystem ineq = newton_inequalities(sys, true);
    const int m = ineq.rows.rows;

    // Every point satisfies the size equality, so that row sits in every
    // candidate basis; the other d-1 rows run over the inequality pool.
    std::set<std::vector<Rational>> found;
    std::vector<long long> mat(static_cast<std::size_t>(d) * d);
    std::vector<long long> rhs(d), nums(d);
    std::vector<long long> sub(static_cast<std::size_t>(d) * d);

    for_each_combination(m, d - 1, [&](const std::vector<int>& pick) {
        for (int c = 0; c < d; ++c) mat[c] = 1;
        rhs[0] = n;
        for (int i = 0; i < d - 1; ++i) {
            for (int c = 0; c < d; ++c) mat[(i + 1) * d + c] = ineq.rows.at(pick[i], c);
            rhs[i + 1] = ineq.bounds[pick[i]];
        }
        long long den = det_from(mat, d);
        if (den == 0) return false;
        for (int c = 0; c < d; ++c) { // Cramer
            sub = mat;
            for (int r = 0; r < d; ++r) sub[r * d + c] = rhs[r];
            nums[c] = det_from(sub, d);
        }
        if (den < 0) {
            den = -den;
            for (auto& v : nums) v = -v;
        }
        for (int r = 0; r < m; ++r)
            if (dot_row(ineq.rows, r, nums) > ineq.bounds[r] * den) return false;

        std::vector<Rational> vert(d);
        for (int c = 0; c < d; ++c) vert[c] = Rational(nums[c], den);
        found.insert(std::move(vert));
        return false;
    });
    return {found.begin(), found.end()};
}

namespace {

std::vector<std::vector<long long>> box_lattice_points(const Partition& lambda, int k, int l) {
    const int d = k + l;
    const long long n = lambda.size();
    std::vector<std::vector<long long>> out;
    if (d == 0) {
        if (n == 0) out.push_back({});
        return out;
    }
    std::vector<int> point(d, 0);
    auto rec = [&](auto&& self, int i, long long rem) -> void {
        if (i == d) {
            if (rem == 0 && satisfies_hook(point, lambda, k, l))
                out.emplace_back(point.begin(), point.end());
            return;
        }
        for (long long v = 0; v <= rem; ++v) { // bounding box 0..|lambda|
            point[i] = static_cast<int>(v);
            self(self, i + 1, rem - v);
        }
        point[i] = 0;
    };
    rec(rec, 0, n);
    return out;
}

std::vector<Rational> to_rational(const std::vector<long long>& v) {
    return {v.begin(), v.end()};
}

VerificationReport run_saturation_checks(const Partition& lambda, int k, int l,
                                         const SparsePolynomial& poly) {
    const auto t0 = std::chrono::steady_clock::now();
    const HookSystem sys = build_system(lambda, k, l);

    std::vector<std::vector<long long>> supp;
    for (const auto& e : poly.support()) supp.emplace_back(e.begin(), e.end());
    const auto b_set = box_lattice_points(lambda, k, l);
    const auto lattice = enumerate_lattice(sys);
    const auto verts = enumerate_vertices(sys);

    VerificationReport rep;
    auto note_counterexample = [&](const std::vector<Rational>& p) {
        if (!rep.counterexample) rep.counterexample = p;
    };

    const bool supp_eq_b = supp == b_set;
    if (!supp_eq_b) {
        std::vector<std::vector<long long>> diff;
        std::set_symmetric_difference(supp.begin(), supp.end(), b_set.begin(), b_set.end(),
                                      std::back_inserter(diff));
        if (!diff.empty()) note_counterexample(to_rational(diff.front()));
    }
    rep.checks.emplace_back("supp_eq_B", supp_eq_b);

    const bool b_eq_lattice = b_set == lattice.points;
    if (!b_eq_lattice) {
        std::vector<std::vector<long long>> diff;
        std::set_symmetric_difference(b_set.begin(), b_set.end(), lattice.points.begin(),
                                      lattice.points.end(), std::back_inserter(diff));
        if (!diff.empty()) note_counterexample(to_rational(diff.front()));
    }
    rep.checks.emplace_back("B_eq_lattice", b_eq_lattice);

    bool verts_ok = true;
    for (const auto& v : verts) {
        bool integral = true;
        std::vector<long long> iv;
        for (const Rational& x : v) {
            if (boost::multiprecision::denominator(x) != 1) {
                integral = false;
                break;
            }
            iv.push_back(static_cast<long long>(boost::multiprecision::numerator(x)));
        }
        if (!integral || !std::binary_search(supp.begin(), supp.end(), iv)) {
            verts_ok = false;
            note_counterexample(v);
        }
    }
    rep.checks.emplace_back("vertices_integral_in_supp", verts_ok);

    bool supp_in_h = true;
    for (const auto& p : supp) {
        if (!membership(sys, to_rational(p))) {
            supp_in_h = false;
            note_counterexample(to_rational(p));
        }
    }
    rep.checks.emplace_back("supp_in_H", supp_in_h);

    rep.counts.emplace_back("supp", static_cast<long long>(supp.size()));
    rep.counts.emplace_back("B", static_cast<long long>(b_set.size()));
    rep.counts.emplace_back("lattice", static_cast<long long>(lattice.points.size()));
    rep.counts.emplace_back("vertices", static_cast<long long>(verts.size()));
    rep.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

} // namespace

VerificationReport verify_snp(const Partition& lambda, int k, int l) {
    return run_saturation_checks(lambda, k, l, schur_super_tableau(lambda, k, l));
}

VerificationReport rado_check(const Partition& mu, int k) {
    if (k < mu.length())
        throw std::invalid_argument("rado check needs k >= length(mu)");
    return run_saturation_checks(mu, k, 0, schur_classical(mu, k));
}

LinearOptimum maximize_linear(const HookSystem& sys, const std::vector<long long>& c) {
    if (static_cast<int>(c.size()) != sys.dim())
        throw std::invalid_argument("objective dimension does not match the system");
    const LatticePointSet lattice = enumerate_lattice(sys);
    if (lattice.points.empty())
        throw std::logic_error("empty lattice point set");

    LinearOptimum best;
    bool first = true;
    for (const auto& p : lattice.points) {
        long long val = 0;
        for (int i = 0; i < sys.dim(); ++i) val += c[i] * p[i];
        // ascending scan: >= keeps the lexicographically largest maximizer
        if (first || val >= best.value) {
            best.point = p;
            best.value = val;
            first = false;
        }
    }
    return best;
}

} // namespace superschur
