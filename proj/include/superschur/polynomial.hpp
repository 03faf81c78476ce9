#pragma once

#include "superschur/partition.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <vector>

namespace superschur {

using BigInt = boost::multiprecision::cpp_int;

/// Sparse multivariate polynomial over the integers. Terms map exponent
/// vectors (fixed length = dims) to nonzero arbitrary-precision coefficients
/// and iterate in lexicographic exponent order. Immutable in practice: all
/// operations return new values.
class SparsePolynomial {
public:
    using Exponent = std::vector<int>;
    using TermMap = std::map<Exponent, BigInt>;

    explicit SparsePolynomial(int dims = 0);

    static SparsePolynomial zero(int dims) { return SparsePolynomial(dims); }
    static SparsePolynomial constant(int dims, const BigInt& c);
    static SparsePolynomial monomial(Exponent e, const BigInt& c);

    int dims() const { return dims_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    BigInt coeff(const Exponent& e) const;

    /// Merges a term into the map, dropping it when the sum cancels.
    void add_term(const Exponent& e, const BigInt& c);

    std::vector<Exponent> support() const;

    BigInt evaluate_ones() const;

    SparsePolynomial operator+(const SparsePolynomial& o) const;
    SparsePolynomial operator-(const SparsePolynomial& o) const;
    SparsePolynomial operator-() const;
    SparsePolynomial operator*(const SparsePolynomial& o) const;

    bool operator==(const SparsePolynomial&) const = default;

private:
    int dims_ = 0;
    TermMap terms_;
};

/// Re-embeds p into a ring with `dims` coordinates, shifting every exponent
/// by `offset`.
SparsePolynomial embed(const SparsePolynomial& p, int dims, int offset);

/// Complete homogeneous symmetric polynomial h_i in k variables (dims k).
/// h_0 = 1; h_i = 0 when i > 0 and k = 0.
SparsePolynomial h_complete(int i, int k);

/// Elementary symmetric polynomial e_r in l variables (dims l).
/// e_0 = 1; e_r = 0 for r > l.
SparsePolynomial e_elementary(int r, int l);

/// H_r(x,y) = sum_{i=0..r} h_i(x) e_{r-i}(y), in dims k+l. Zero for r < 0.
SparsePolynomial h_super(int r, int k, int l);

/// Supersymmetric Schur polynomial as the tableau generating function, in
/// dims k+l. Zero outside the (k,l)-hook; 1 for the empty shape.
SparsePolynomial schur_super_tableau(const Partition& lambda, int k, int l);

/// The same polynomial from the determinant det(H_{lambda_i + j - i}) of
/// order length(lambda). Agreement with the tableau route is guaranteed on
/// the (k,l)-hook.
SparsePolynomial schur_super_det(const Partition& lambda, int k, int l);

/// Classical Schur polynomial in k variables (the l = 0 specialization).
SparsePolynomial schur_classical(const Partition& mu, int k);

/// Classical skew Schur polynomial of shape lambda/mu in k variables.
/// Requires contains(mu, lambda).
SparsePolynomial schur_skew(const Partition& lambda, const Partition& mu, int k);

/// Verifies S_lambda(x,y) = sum over mu contained in lambda of
/// s_mu(x) * s_{(lambda/mu)'}(y), combined into dims k+l.
bool check_expansion(const Partition& lambda, int k, int l);

/// Substitutes x_k = t, y_l = -t and reports whether the result is
/// independent of t. The image lives in k+l-1 coordinates (remaining
/// variables plus t last); each monomial picks up sign (-1)^{b_l}.
bool check_cancellation(const SparsePolynomial& p, int k, int l);

/// Invariance of the coefficient map under adjacent transpositions of the
/// first k and of the last l coordinates.
bool check_bisymmetry(const SparsePolynomial& p, int k, int l);

} // namespace superschur
