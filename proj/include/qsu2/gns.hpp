#pragma once

#include "qsu2/left_action.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <vector>

namespace qsu2 {

/// Raised when the Gram matrix degenerates (would contradict faithfulness of
/// the Haar state) or when a basis label fails its eigenvalue validation.
struct GnsConstructionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CalibrationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Dense matrix over Q(v); entries default to zero.
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static ExactMatrix identity(size_t n);
    static ExactMatrix diagonal(std::vector<ExactScalar> entries);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    ExactScalar& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const ExactScalar& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    friend ExactMatrix operator+(const ExactMatrix& x, const ExactMatrix& y);
    friend ExactMatrix operator-(const ExactMatrix& x, const ExactMatrix& y);
    friend ExactMatrix operator*(const ExactMatrix& x, const ExactMatrix& y);
    friend ExactMatrix operator*(const ExactScalar& s, const ExactMatrix& x);
    bool operator==(const ExactMatrix&) const = default;
    bool is_zero() const;

private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<ExactScalar> a_;
};

struct NumericMatrix {
    size_t rows = 0, cols = 0;
    std::vector<double> data;

    NumericMatrix() = default;
    NumericMatrix(size_t r, size_t c) : rows(r), cols(c), data(r * c, 0.0) {}
    double& at(size_t i, size_t j) { return data[i * cols + j]; }
    double at(size_t i, size_t j) const { return data[i * cols + j]; }
    double max_abs() const;
};

struct GnsBasisVector {
    HalfInteger l, m, n;
    AlgebraElement vector;  // unnormalized; leading block coordinate = 1
    ExactScalar norm_sq;    // h(x* x)
};

// Exact truncation of the GNS space of the Haar state: every spin block with
// 2l <= max_degree, spanned by PBW monomials of total degree <= max_degree.
// Basis vectors are h-orthogonal via exact Gram-Schmidt within each
// (m,n)-graded component; labels (l,m,n) are validated against the Casimir
// eigenvalue [l+1/2]_q^2 during construction.
class TruncationSpace {
public:
    explicit TruncationSpace(int max_degree);

    int max_degree() const { return max_degree_; }
    size_t dim() const { return basis_.size(); }
    const std::vector<GnsBasisVector>& basis() const { return basis_; }
    const GnsBasisVector& vector(size_t i) const { return basis_[i]; }

    std::optional<size_t> find(HalfInteger l, HalfInteger m, HalfInteger n) const;
    size_t index_of(HalfInteger l, HalfInteger m, HalfInteger n) const;

    // Exact compression coordinates <u_t, x>/<u_t,u_t> for all t.
    std::vector<ExactScalar> project(const AlgebraElement& x) const;
    AlgebraElement reconstruct(const std::vector<ExactScalar>& coords) const;

    // Cached h(x* y) on monomial pairs (thread safe).
    ExactScalar pair_haar(const MonomialA& x, const MonomialA& y) const;

    // Exact Gram matrix of the PBW monomials spanning one graded block.
    const std::vector<MonomialA>& block_monomials(HalfInteger m, HalfInteger n) const;

private:
    int max_degree_;
    std::vector<GnsBasisVector> basis_;
    std::map<std::pair<long, long>, std::vector<size_t>> blocks_;          // (2m,2n) -> indices
    std::map<std::pair<long, long>, std::vector<MonomialA>> block_monos_;  // (2m,2n) -> monomials
    std::map<std::tuple<long, long, long>, size_t> by_label_;              // (2l,2m,2n) -> index

    mutable std::map<std::pair<MonomialA, MonomialA>, ExactScalar> haar_cache_;
    mutable std::mutex cache_mutex_;

    ExactScalar pairing(const AlgebraElement& x, const AlgebraElement& y) const;
};

struct EfkMatrices {
    ExactMatrix E, F, K, K_inv;
};

// Matrices of d_e, d_f, d_k in the exact orthogonal basis.
EfkMatrices efk_matrices(const TruncationSpace& space, const LeftActionEngine& engine);

// Compression of left multiplication by x to the truncation (exact).
ExactMatrix multiplication_matrix(const AlgebraElement& x, const TruncationSpace& space);

// Diagonal left modular operator, entries q^{-2n}.
ExactMatrix modular_operator(const TruncationSpace& space);

// ---------------------------------------------------------------------------
// Numeric layer: the same construction carried out exactly at a fixed
// rational q0 (Gram data lives in Q once v^2 = q0 is substituted), with the
// orthonormal basis and operator matrices exposed in double precision.

class NumericTruncation {
public:
    NumericTruncation(int max_degree, const Rational& q0);

    struct Label {
        HalfInteger l, m, n;
    };

    int max_degree() const { return max_degree_; }
    const Rational& q0() const { return q0_; }
    double v0() const { return v0_; }
    size_t dim() const { return labels_.size(); }
    const std::vector<Label>& labels() const { return labels_; }
    std::optional<size_t> find(HalfInteger l, HalfInteger m, HalfInteger n) const;

    double norm(size_t i) const;  // sqrt of the exact squared norm

    // Orthonormal-basis matrix of the operator sending each PBW monomial M to
    // op(M) (extended linearly).  Exact in Q at q0 except for the final
    // double conversions.
    NumericMatrix orthonormal_matrix(
        const std::function<AlgebraElement(const MonomialA&)>& op) const;

private:
    struct Block {
        std::vector<MonomialA> monos;
        std::vector<std::vector<Rational>> basis_coords;  // per vector, over monos
        std::vector<Rational> norm_sq;
        std::vector<size_t> global_index;
    };

    int max_degree_;
    Rational q0_;
    double v0_;
    std::vector<Label> labels_;
    std::map<std::pair<long, long>, Block> blocks_;
    std::vector<std::pair<const Block*, size_t>> locate_;  // global index -> (block, pos)
    std::map<std::tuple<long, long, long>, size_t> by_label_;

    mutable std::map<std::pair<MonomialA, MonomialA>, Rational> haar_cache_;
    mutable std::mutex cache_mutex_;

    Rational pair_haar_q0(const MonomialA& x, const MonomialA& y) const;
    Rational project_on(const Block& blk, size_t pos, const MonomialA& mono) const;
};

// Measured/expected ratio of the orthonormal E-matrix entry on the l = 1/2
// block; equals the gauge rho when the generator table is consistent.
double e_gauge_mismatch(const NumericTruncation& space, const LeftActionEngine& engine);

// Fits the exact q-power gauge rho* from the numeric mismatch, rounds the
// exponent to the nearest half-integer power of q and re-verifies every E/F
// entry with l <= 3/2 against sqrt([l+n]_q[l-n+1]_q) within tol.
ExactScalar calibrate_gauge(const NumericTruncation& space, double tol = 1e-9);

struct GrowthReport {
    double raising_sup = 0.0;   // sup |raising entry| / q^{n+l}
    double lowering_sup = 0.0;  // sup |lowering entry|
};

// Empirical growth constants of the pi(a)/pi(c) matrix coefficients.
GrowthReport growth_constants(const NumericTruncation& space, char generator);

}  // namespace qsu2
