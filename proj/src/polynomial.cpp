#include "superschur/polynomial.hpp"

#include "superschur/tableau.hpp"

#include <functional>
#include <stdexcept>
#include <unordered_map>

namespace superschur {

SparsePolynomial::SparsePolynomial(int dims) : dims_(dims) {
    if (dims < 0) throw std::invalid_argument("negative dimension");
}

SparsePolynomial SparsePolynomial::constant(int dims, const BigInt& c) {
    SparsePolynomial p(dims);
    p.add_term(Exponent(dims, 0), c);
    return p;
}

SparsePolynomial SparsePolynomial::monomial(Exponent e, const BigInt& c) {
    SparsePolynomial p(static_cast<int>(e.size()));
    p.add_term(std::move(e), c);
    return p;
}

BigInt SparsePolynomial::coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? BigInt(0) : it->second;
}

void SparsePolynomial::add_term(const Exponent& e, const BigInt& c) {
    if (static_cast<int>(e.size()) != dims_)
        throw std::invalid_argument("exponent length does not match dims");
    for (int v : e)
        if (v < 0) throw std::invalid_argument("negative exponent");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

std::vector<SparsePolynomial::Exponent> SparsePolynomial::support() const {
    std::vector<Exponent> out;
    out.reserve(terms_.size());
    for (const auto& [e, c] : terms_) out.push_back(e);
    return out;
}

BigInt SparsePolynomial::evaluate_ones() const {
    BigInt s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

SparsePolynomial SparsePolynomial::operator+(const SparsePolynomial& o) const {
    if (dims_ != o.dims_) throw std::invalid_argument("dimension mismatch");
    SparsePolynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

SparsePolynomial SparsePolynomial::operator-() const {
    SparsePolynomial r(dims_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

SparsePolynomial SparsePolynomial::operator-(const SparsePolynomial& o) const {
    return *this + (-o);
}

SparsePolynomial SparsePolynomial::operator*(const SparsePolynomial& o) const {
    if (dims_ != o.dims_) throw std::invalid_argument("dimension mismatch");
    SparsePolynomial r(dims_);
    Exponent e(dims_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            for (int i = 0; i < dims_; ++i) e[i] = e1[i] + e2[i];
            r.add_term(e, c1 * c2);
        }
    return r;
}

SparsePolynomial embed(const SparsePolynomial& p, int dims, int offset) {
    if (offset < 0 || offset + p.dims() > dims)
        throw std::invalid_argument("embedding does not fit");
    SparsePolynomial r(dims);
    SparsePolynomial::Exponent e(dims, 0);
    for (const auto& [src, c] : p.terms()) {
        std::fill(e.begin(), e.end(), 0);
        for (int i = 0; i < p.dims(); ++i) e[offset + i] = src[i];
        r.add_term(e, c);
    }
    return r;
}

SparsePolynomial h_complete(int i, int k) {
    if (i < 0) throw std::invalid_argument("negative degree");
    SparsePolynomial p(k);
    if (i == 0) return SparsePolynomial::constant(k, 1);
    if (k == 0) return p;
    // every monomial of total degree i, coefficient 1
    SparsePolynomial::Exponent e(k, 0);
    auto rec = [&](auto&& self, int var, int rem) -> void {
        if (var == k - 1) {
            e[var] = rem;
            p.add_term(e, 1);
            return;
        }
        for (int v = 0; v <= rem; ++v) {
            e[var] = v;
            self(self, var + 1, rem - v);
        }
        e[var] = 0;
    };
    rec(rec, 0, i);
    return p;
}

SparsePolynomial e_elementary(int r, int l) {
    if (r < 0) throw std::invalid_argument("negative degree");
    SparsePolynomial p(l);
    if (r == 0) return SparsePolynomial::constant(l, 1);
    if (r > l) return p;
    SparsePolynomial::Exponent e(l, 0);
    auto rec = [&](auto&& self, int from, int rem) -> void {
        if (rem == 0) {
            p.add_term(e, 1);
            return;
        }
        for (int v = from; v <= l - rem; ++v) {
            e[v] = 1;
            self(self, v + 1, rem - 1);
            e[v] = 0;
        }
    };
    rec(rec, 0, r);
    return p;
}

SparsePolynomial h_super(int r, int k, int l) {
    const int d = k + l;
    if (r < 0) return SparsePolynomial(d);
    SparsePolynomial out(d);
    for (int i = 0; i <= r; ++i) {
        if (r - i > l) continue;
        out = out + embed(h_complete(i, k), d, 0) * embed(e_elementary(r - i, l), d, k);
    }
    return out;
}

SparsePolynomial schur_super_tableau(const Partition& lambda, int k, int l) {
    SparsePolynomial p(k + l);
    for_each_content(lambda, k, l,
                     [&](const std::vector<int>& c) { p.add_term(c, 1); });
    return p;
}

SparsePolynomial schur_super_det(const Partition& lambda, int k, int l) {
    const int n = lambda.length();
    const int d = k + l;
    if (n == 0) return SparsePolynomial::constant(d, 1);

    std::vector<std::vector<SparsePolynomial>> mat(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            mat[i].push_back(h_super(lambda.part(i) + j - i, k, l));

    // Laplace expansion along rows, memoized on the set of used columns.
    std::unordered_map<unsigned, SparsePolynomial> memo;
    auto rec = [&](auto&& self, int row, unsigned mask) -> const SparsePolynomial& {
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        SparsePolynomial acc(d);
        if (row == n) {
            acc = SparsePolynomial::constant(d, 1);
        } else {
            int sign = 1;
            for (int j = 0; j < n; ++j) {
                if (mask & (1u << j)) continue;
                if (!mat[row][j].is_zero()) {
                    SparsePolynomial term = mat[row][j] * self(self, row + 1, mask | (1u << j));
                    acc = (sign > 0) ? acc + term : acc - term;
                }
                sign = -sign;
            }
        }
        return memo.emplace(mask, std::move(acc)).first->second;
    };
    return rec(rec, 0, 0u);
}

SparsePolynomial schur_classical(const Partition& mu, int k) {
    return schur_super_tableau(mu, k, 0);
}

SparsePolynomial schur_skew(const Partition& lambda, const Partition& mu, int k) {
    if (!contains(mu, lambda))
        throw std::invalid_argument("mu is not contained in lambda");
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = mu.part(i); j < lambda.part(i); ++j) cells.emplace_back(i, j);

    SparsePolynomial p(k);
    std::vector<std::vector<int>> grid(lambda.length());
    for (int i = 0; i < lambda.length(); ++i) grid[i].assign(lambda.part(i), -1);
    std::vector<int> cnt(k, 0);
    auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (idx == cells.size()) {
            p.add_term(cnt, 1);
            return;
        }
        auto [i, j] = cells[idx];
        int lo = 0;
        if (j > mu.part(i)) lo = std::max(lo, grid[i][j - 1]);          // weak along rows
        if (i > 0 && j >= mu.part(i - 1) && j < lambda.part(i - 1))
            lo = std::max(lo, grid[i - 1][j] + 1);                      // strict down columns
        for (int v = lo; v < k; ++v) {
            grid[i][j] = v;
            cnt[v]++;
            self(self, idx + 1);
            cnt[v]--;
        }
        grid[i][j] = -1;
    };
    rec(rec, 0);
    return p;
}

bool check_expansion(const Partition& lambda, int k, int l) {
    const int d = k + l;
    const SparsePolynomial lhs = schur_super_tableau(lambda, k, l);
    const Partition lconj = lambda.conjugate();
    SparsePolynomial rhs(d);
    for (const Partition& mu : subpartitions(lambda)) {
        SparsePolynomial sx = schur_classical(mu, k);
        if (sx.is_zero()) continue;
        SparsePolynomial sy = schur_skew(lconj, mu.conjugate(), l);
        if (sy.is_zero()) continue;
        rhs = rhs + embed(sx, d, 0) * embed(sy, d, k);
    }
    return lhs == rhs;
}

bool check_cancellation(const SparsePolynomial& p, int k, int l) {
    if (k < 1 || l < 1) throw std::invalid_argument("cancellation needs k,l >= 1");
    if (p.dims() != k + l) throw std::invalid_argument("dims does not match k+l");
    // x_k -> t, y_l -> -t; image ring: x_1..x_{k-1}, y_1..y_{l-1}, t (last)
    SparsePolynomial img(k + l - 1);
    SparsePolynomial::Exponent e(k + l - 1);
    for (const auto& [src, c] : p.terms()) {
        for (int i = 0; i < k - 1; ++i) e[i] = src[i];
        for (int j = 0; j < l - 1; ++j) e[k - 1 + j] = src[k + j];
        e[k + l - 2] = src[k - 1] + src[k + l - 1];
        img.add_term(e, (src[k + l - 1] % 2 == 0) ? c : -c);
    }
    for (const auto& [ee, c] : img.terms())
        if (ee[k + l - 2] != 0) return false;
    return true;
}

bool check_bisymmetry(const SparsePolynomial& p, int k, int l) {
    if (p.dims() != k + l) throw std::invalid_argument("dims does not match k+l");
    SparsePolynomial::Exponent e;
    for (const auto& [src, c] : p.terms()) {
        for (int i = 0; i + 1 < k; ++i) {
            e = src;
            std::swap(e[i], e[i + 1]);
            if (p.coeff(e) != c) return false;
        }
        for (int j = 0; j + 1 < l; ++j) {
            e = src;
            std::swap(e[k + j], e[k + j + 1]);
            if (p.coeff(e) != c) return false;
        }
    }
    return true;
}

} // namespace superschur
