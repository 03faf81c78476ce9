#pragma once

#include "superschur/partition.hpp"

#include <compare>
#include <functional>
#include <string>
#include <vector>

namespace superschur {

/// Letter of the ordered super-alphabet t_1 < ... < t_k < u_1 < ... < u_l.
/// Every T-letter compares below every U-letter; within a kind, by index.
struct SuperLetter {
    enum class Kind { T, U };

    Kind kind = Kind::T;
    int index = 1; // 1-based

    static SuperLetter t(int i) { return {Kind::T, i}; }
    static SuperLetter u(int j) { return {Kind::U, j}; }

    bool is_t() const { return kind == Kind::T; }
    bool is_u() const { return kind == Kind::U; }

    std::string str() const;                      // "t1", "u2", ...
    static SuperLetter parse(const std::string&); // inverse of str()

    bool operator==(const SuperLetter&) const = default;
    std::strong_ordering operator<=>(const SuperLetter& o) const {
        if (kind != o.kind)
            return kind == Kind::T ? std::strong_ordering::less
                                   : std::strong_ordering::greater;
        return index <=> o.index;
    }
};

/// Letter multiplicities of a tableau: a[i-1] counts t_i, b[j-1] counts u_j.
struct Content {
    std::vector<int> a;
    std::vector<int> b;

    Content() = default;
    Content(std::vector<int> a_, std::vector<int> b_)
        : a(std::move(a_)), b(std::move(b_)) {}

    /// Splits a length-(k+l) exponent vector into (a, b).
    static Content from_exponent(const std::vector<int>& e, int k, int l);

    long long total() const;
    std::vector<int> exponent() const; // a followed by b

    bool operator==(const Content&) const = default;
};

/// Filling of a Young diagram by super-alphabet letters, row by row.
struct SuperTableau {
    Partition shape;
    std::vector<std::vector<SuperLetter>> rows;

    bool operator==(const SuperTableau&) const = default;
};

/// True iff the filling is a (k,l)-semistandard tableau: rows weakly increase
/// with no U-letter repeated within a row, columns weakly increase with no
/// T-letter repeated within a column, and all letter indices are in range.
/// A shape/row-length mismatch is a structural error and throws
/// std::invalid_argument instead of returning false.
bool is_valid(const SuperTableau& t, int k, int l);

/// Letter multiplicities; requires a structurally consistent tableau.
Content content(const SuperTableau& t, int k, int l);

/// Streams every (k,l)-semistandard tableau of the given shape exactly once
/// (row-major fill with per-cell candidate pruning). Empty for shapes outside
/// the (k,l)-hook.
void for_each_tableau(const Partition& lambda, int k, int l,
                      const std::function<void(const SuperTableau&)>& fn);

/// Same enumeration, but only the content vector (length k+l) is passed to
/// the callback. Cheaper when the filling itself is not needed.
void for_each_content(const Partition& lambda, int k, int l,
                      const std::function<void(const std::vector<int>&)>& fn);

std::vector<SuperTableau> enumerate_tableaux(const Partition& lambda, int k, int l);
long long count_tableaux(const Partition& lambda, int k, int l);

/// True iff some (k,l)-semistandard tableau of shape lambda has content c:
/// the total equals |lambda| and, for every r <= k and s <= l, the r largest
/// entries of a plus the s largest entries of b fit into the cells of lambda
/// lying in the first r rows or first s columns (hook_region_cells).
bool satisfies_hook(const Content& c, const Partition& lambda, int k, int l);
bool satisfies_hook(const std::vector<int>& exponent, const Partition& lambda,
                    int k, int l);

/// Builds a (k,l)-semistandard tableau of shape exactly lambda with content c.
/// Works outermost letter first: the cells of u_s form a vertical strip, the
/// cells of t_i a horizontal strip; each strip is chosen so the remaining
/// shape stays fillable by the remaining letters (checked via satisfies_hook).
/// Throws std::invalid_argument when the precondition satisfies_hook fails.
SuperTableau construct_witness(const Content& c, const Partition& lambda,
                               int k, int l);

} // namespace superschur
