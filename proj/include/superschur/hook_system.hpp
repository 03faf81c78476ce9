#pragma once

#include "superschur/matrix.hpp"
#include "superschur/partition.hpp"
#include "superschur/report.hpp"

#include <vector>

namespace superschur {

/// Linear system attached to a hook partition. `atilde`/`btilde` are the
/// stacked blocks (prefix rows A, then e^T, -e^T, -I_d) whose matrix is the
/// object of the total-unimodularity certificate. The geometry operations
/// (membership, lattice points, vertices) use the full family of letter-count
/// bounds from newton_inequalities(), which describes the Newton polytope.
struct HookSystem {
    int k = 0;
    int l = 0;
    Partition lambda;
    IntMatrix atilde;
    std::vector<long long> btilde;

    int dim() const { return k + l; }
    long long target() const { return lambda.size(); }
};

/// Builds the system for lambda in the (k,l)-hook; rejects other shapes.
HookSystem build_system(const Partition& lambda, int k, int l);

/// Inequality rows (lhs u <= bound) together with their bounds.
struct InequalitySystem {
    IntMatrix rows;
    std::vector<long long> bounds;
};

/// Inequality description of the Newton polytope within the hyperplane
/// sum(u) = |lambda|: for index subsets R of the x-block and S of the
/// y-block, sum_{i in R} u_i + sum_{j in S} u_{k+j} <= hook_region_cells(
/// lambda, |R|, |S|), plus nonnegativity. With prune=true, subset pairs whose
/// constraint is implied by a larger subset with the same bound are omitted;
/// the polyhedron is unchanged. The size equality rows are not included.
InequalitySystem newton_inequalities(const HookSystem& sys, bool prune = true);

struct LatticePointSet {
    int dims = 0;
    std::vector<std::vector<long long>> points; // sorted lexicographically

    bool operator==(const LatticePointSet&) const = default;
};

/// Exact membership of a rational point in the polytope.
bool membership(const HookSystem& sys, const std::vector<Rational>& u);

/// All integer points, by coordinate DFS with prefix-sum and residual-size
/// pruning.
LatticePointSet enumerate_lattice(const HookSystem& sys);

/// Exact vertex set. Every point of the polytope satisfies the size equality,
/// so that row is pinned in every candidate basis; the remaining d-1 rows run
/// over subsets of newton_inequalities(). Solved in exact arithmetic and
/// filtered by feasibility. Throws cap_exceeded when dim > cap_dim.
std::vector<std::vector<Rational>> enumerate_vertices(const HookSystem& sys,
                                                      int cap_dim = 6);

/// Saturation verification for S_lambda:
///   supp_eq_B                : tableau support equals the letter-count set
///   B_eq_lattice             : that set equals the lattice points of H
///   vertices_integral_in_supp: every vertex of H is integral and in the support
///   supp_in_H                : every support point satisfies membership
/// Together with convexity these certify Conv(Supp) = H and
/// Conv(Supp) cap Z^d = Supp without any hull computation.
VerificationReport verify_snp(const Partition& lambda, int k, int l);

/// The l = 0 specialization: support of the classical Schur polynomial
/// against the prefix-sum system. Requires k >= length(mu).
VerificationReport rado_check(const Partition& mu, int k);

struct LinearOptimum {
    std::vector<long long> point;
    long long value = 0;
};

/// Maximizes c . u over the integer points of the polytope by scanning
/// enumerate_lattice. Ties resolve to the lexicographically largest point.
LinearOptimum maximize_linear(const HookSystem& sys, const std::vector<long long>& c);

} // namespace superschur
