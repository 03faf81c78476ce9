#pragma once

#include <compare>
#include <string>
#include <vector>

namespace superschur {

/// Integer partition in canonical form: weakly decreasing positive parts,
/// no trailing zeros. The empty sequence is the empty partition.
/// Values are immutable after construction and safe to share across threads.
class Partition {
public:
    Partition() = default;

    /// Accepts any weakly decreasing sequence of nonnegative integers and
    /// trims trailing zeros. Throws std::invalid_argument otherwise.
    explicit Partition(std::vector<int> parts);

    /// Parses a comma-separated list, e.g. "2,1,1". The empty string is the
    /// empty partition.
    static Partition from_string(const std::string& text);

    /// Number of cells of the Young diagram.
    long long size() const;

    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    /// i-th part, 0-based; zero beyond the last part.
    int part(int i) const;

    const std::vector<int>& parts() const { return parts_; }

    /// Column lengths of the diagram. An involution.
    Partition conjugate() const;

    std::string to_string() const;

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

/// lambda lies in the (k,l)-hook: its (k+1)-th part is at most l.
bool is_hook(const Partition& lambda, int k, int l);

/// (L_1,...,L_k) with L_r the sum of the first r parts, zero-padded past
/// the length of lambda.
std::vector<long long> row_prefix_sums(const Partition& lambda, int k);

/// (C_1,...,C_l) computed from the conjugate, zero-padded.
std::vector<long long> col_prefix_sums(const Partition& lambda, int l);

/// Componentwise containment mu_i <= lambda_i (diagram inclusion).
bool contains(const Partition& mu, const Partition& lambda);

/// Partial-sum comparison only: every prefix sum of mu is at most the
/// corresponding prefix sum of lambda. No equal-size requirement.
bool dominates(const Partition& lambda, const Partition& mu);

/// Number of cells of lambda lying in the first r rows or the first s
/// columns of its diagram.
long long hook_region_cells(const Partition& lambda, int r, int s);

/// All partitions of n, then of every m <= n, in (size, lex) order.
std::vector<Partition> partitions_of(int n);
std::vector<Partition> partitions_up_to(int n);

/// All mu with mu componentwise contained in lambda.
std::vector<Partition> subpartitions(const Partition& lambda);

} // namespace superschur
