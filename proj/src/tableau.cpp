#include "superschur/tableau.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace superschur {

std::string SuperLetter::str() const {
    return (is_t() ? "t" : "u") + std::to_string(index);
}

SuperLetter SuperLetter::parse(const std::string& s) {
    if (s.size() < 2 || (s[0] != 't' && s[0] != 'u'))
        throw std::invalid_argument("invalid letter: '" + s + "'");
    std::size_t pos = 0;
    int idx = 0;
    try {
        idx = std::stoi(s.substr(1), &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("invalid letter: '" + s + "'");
    }
    if (pos + 1 != s.size() || idx < 1)
        throw std::invalid_argument("invalid letter: '" + s + "'");
    return {s[0] == 't' ? Kind::T : Kind::U, idx};
}

Content Content::from_exponent(const std::vector<int>& e, int k, int l) {
    if (static_cast<int>(e.size()) != k + l)
        throw std::invalid_argument("exponent length does not match k+l");
    return {std::vector<int>(e.begin(), e.begin() + k),
            std::vector<int>(e.begin() + k, e.end())};
}

long long Content::total() const {
    return std::accumulate(a.begin(), a.end(), 0LL) +
           std::accumulate(b.begin(), b.end(), 0LL);
}

std::vector<int> Content::exponent() const {
    std::vector<int> e = a;
    e.insert(e.end(), b.begin(), b.end());
    return e;
}

namespace {

void check_structure(const SuperTableau& t) {
    if (static_cast<int>(t.rows.size()) != t.shape.length())
        throw std::invalid_argument("tableau row count does not match shape");
    for (int i = 0; i < t.shape.length(); ++i)
        if (static_cast<int>(t.rows[i].size()) != t.shape.part(i))
            throw std::invalid_argument("tableau row length does not match shape");
}

} // namespace

bool is_valid(const SuperTableau& t, int k, int l) {
    check_structure(t);
    for (const auto& row : t.rows)
        for (const auto& x : row) {
            if (x.index < 1) return false;
            if (x.is_t() && x.index > k) return false;
            if (x.is_u() && x.index > l) return false;
        }
    // rows weakly increase; a repeated adjacent letter must be a T
    for (const auto& row : t.rows)
        for (std::size_t j = 1; j < row.size(); ++j) {
            if (row[j] < row[j - 1]) return false;
            if (row[j] == row[j - 1] && row[j].is_u()) return false;
        }
    // columns weakly increase; a repeated adjacent letter must be a U
    for (int i = 1; i < t.shape.length(); ++i)
        for (int j = 0; j < t.shape.part(i); ++j) {
            const SuperLetter up = t.rows[i - 1][j];
            const SuperLetter cur = t.rows[i][j];
            if (cur < up) return false;
            if (cur == up && cur.is_t()) return false;
        }
    return true;
}

Content content(const SuperTableau& t, int k, int l) {
    check_structure(t);
    Content c(std::vector<int>(k, 0), std::vector<int>(l, 0));
    for (const auto& row : t.rows)
        for (const auto& x : row) {
            if (x.index < 1 || (x.is_t() && x.index > k) || (x.is_u() && x.index > l))
                throw std::invalid_argument("letter index out of range for (k,l)");
            if (x.is_t())
                c.a[x.index - 1]++;
            else
                c.b[x.index - 1]++;
        }
    return c;
}

namespace {

// Fill engine on coded letters: 0..k-1 are t's, k..k+l-1 are u's. Cells are
// visited in row-major order; the candidate range at each cell comes from the
// left neighbour (strict after a u) and the upper neighbour (strict after a t).
void for_each_filling(const Partition& shape, int k, int l,
                      const std::function<void(const std::vector<std::vector<int>>&)>& fn) {
    const int n = shape.length();
    std::vector<std::vector<int>> grid(n);
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < n; ++i) {
        grid[i].assign(shape.part(i), -1);
        for (int j = 0; j < shape.part(i); ++j) cells.emplace_back(i, j);
    }
    const int top = k + l;
    auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (idx == cells.size()) {
            fn(grid);
            return;
        }
        auto [i, j] = cells[idx];
        int lo = 0;
        if (j > 0) {
            int left = grid[i][j - 1];
            lo = std::max(lo, left + (left >= k ? 1 : 0));
        }
        if (i > 0) {
            int up = grid[i - 1][j];
            lo = std::max(lo, up + (up < k ? 1 : 0));
        }
        for (int v = lo; v < top; ++v) {
            grid[i][j] = v;
            self(self, idx + 1);
        }
        grid[i][j] = -1;
    };
    rec(rec, 0);
}

SuperTableau decode(const Partition& shape, const std::vector<std::vector<int>>& grid, int k) {
    SuperTableau t;
    t.shape = shape;
    t.rows.resize(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        t.rows[i].reserve(grid[i].size());
        for (int v : grid[i])
            t.rows[i].push_back(v < k ? SuperLetter::t(v + 1) : SuperLetter::u(v - k + 1));
    }
    return t;
}

} // namespace

void for_each_tableau(const Partition& lambda, int k, int l,
                      const std::function<void(const SuperTableau&)>& fn) {
    for_each_filling(lambda, k, l, [&](const std::vector<std::vector<int>>& grid) {
        fn(decode(lambda, grid, k));
    });
}

void for_each_content(const Partition& lambda, int k, int l,
                      const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> c(k + l);
    for_each_filling(lambda, k, l, [&](const std::vector<std::vector<int>>& grid) {
        std::fill(c.begin(), c.end(), 0);
        for (const auto& row : grid)
            for (int v : row) c[v]++;
        fn(c);
    });
}

std::vector<SuperTableau> enumerate_tableaux(const Partition& lambda, int k, int l) {
    std::vector<SuperTableau> out;
    for_each_tableau(lambda, k, l, [&](const SuperTableau& t) { out.push_back(t); });
    return out;
}

long long count_tableaux(const Partition& lambda, int k, int l) {
    long long n = 0;
    for_each_content(lambda, k, l, [&](const std::vector<int>&) { n++; });
    return n;
}

bool satisfies_hook(const Content& c, const Partition& lambda, int k, int l) {
    if (static_cast<int>(c.a.size()) != k || static_cast<int>(c.b.size()) != l)
        throw std::invalid_argument("content size does not match (k,l)");
    for (int v : c.a)
        if (v < 0) throw std::invalid_argument("negative content entry");
    for (int v : c.b)
        if (v < 0) throw std::invalid_argument("negative content entry");
    if (c.total() != lambda.size()) return false;

    // the bound depends only on the multiset of entries within each alphabet
    std::vector<int> a = c.a, b = c.b;
    std::sort(a.rbegin(), a.rend());
    std::sort(b.rbegin(), b.rend());
    std::vector<long long> pa(k + 1, 0), pb(l + 1, 0);
    for (int r = 0; r < k; ++r) pa[r + 1] = pa[r] + a[r];
    for (int s = 0; s < l; ++s) pb[s + 1] = pb[s] + b[s];

    for (int r = 0; r <= k; ++r)
        for (int s = 0; s <= l; ++s) {
            if (r == 0 && s == 0) continue;
            if (pa[r] + pb[s] > hook_region_cells(lambda, r, s)) return false;
        }
    return true;
}

bool satisfies_hook(const std::vector<int>& exponent, const Partition& lambda,
                    int k, int l) {
    return satisfies_hook(Content::from_exponent(exponent, k, l), lambda, k, l);
}

namespace {

// Row subsets (lex order) whose last cells can be removed leaving a partition.
// fn returns true to stop.
bool for_each_vertical_strip(const Partition& nu, int m,
                             const std::function<bool(const std::vector<int>&, const Partition&)>& fn) {
    const int n = nu.length();
    if (m > n) return false;
    std::vector<int> pick;
    auto rec = [&](auto&& self, int from) -> bool {
        if (static_cast<int>(pick.size()) == m) {
            std::vector<int> rest(nu.parts());
            for (int i : pick) rest[i] -= 1;
            for (std::size_t i = 0; i + 1 < rest.size(); ++i)
                if (rest[i] < rest[i + 1]) return false;
            return fn(pick, Partition(rest));
        }
        for (int i = from; i < n; ++i) {
            pick.push_back(i);
            if (self(self, i + 1)) return true;
            pick.pop_back();
        }
        return false;
    };
    return rec(rec, 0);
}

// Shapes rho with nu/rho a horizontal strip of m cells: nu_{i+1} <= rho_i <= nu_i.
bool for_each_horizontal_strip(const Partition& nu, int m,
                               const std::function<bool(const Partition&)>& fn) {
    const int n = nu.length();
    std::vector<int> rho;
    auto rec = [&](auto&& self, int i, int rem) -> bool {
        if (i == n) {
            if (rem != 0) return false;
            return fn(Partition(rho));
        }
        const int lo = std::max(nu.part(i + 1), nu.part(i) - rem);
        for (int v = nu.part(i); v >= lo; --v) {
            rho.push_back(v);
            if (self(self, i + 1, rem - (nu.part(i) - v))) return true;
            rho.pop_back();
        }
        return false;
    };
    return rec(rec, 0, m);
}

} // namespace

SuperTableau construct_witness(const Content& c, const Partition& lambda, int k, int l) {
    if (!satisfies_hook(c, lambda, k, l))
        throw std::invalid_argument("content violates the hook bounds for this shape");

    std::vector<std::vector<int>> grid(lambda.length());
    for (int i = 0; i < lambda.length(); ++i) grid[i].assign(lambda.part(i), -1);

    Partition nu = lambda;
    for (int s = l; s >= 1; --s) {
        Content rem(c.a, std::vector<int>(c.b.begin(), c.b.begin() + (s - 1)));
        bool found = for_each_vertical_strip(
            nu, c.b[s - 1], [&](const std::vector<int>& pick, const Partition& rest) {
                if (!satisfies_hook(rem, rest, k, s - 1)) return false;
                for (int i : pick) grid[i][nu.part(i) - 1] = k + s - 1;
                nu = rest;
                return true;
            });
        if (!found) throw std::logic_error("witness construction failed on a u strip");
    }
    for (int i = k; i >= 1; --i) {
        Content rem(std::vector<int>(c.a.begin(), c.a.begin() + (i - 1)), {});
        bool found = for_each_horizontal_strip(nu, c.a[i - 1], [&](const Partition& rho) {
            if (!satisfies_hook(rem, rho, i - 1, 0)) return false;
            for (int r = 0; r < nu.length(); ++r)
                for (int col = rho.part(r); col < nu.part(r); ++col) grid[r][col] = i - 1;
            nu = rho;
            return true;
        });
        if (!found) throw std::logic_error("witness construction failed on a t strip");
    }
    if (!nu.empty()) throw std::logic_error("witness construction left cells unfilled");

    SuperTableau t = decode(lambda, grid, k);
    if (!is_valid(t, k, l) || !(content(t, k, l) == c))
        throw std::logic_error("witness postcondition failed");
    return t;
}

} // namespace superschur
