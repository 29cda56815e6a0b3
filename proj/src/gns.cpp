#include "qsu2/gns.hpp"

#include <algorithm>
#include <cmath>

namespace qsu2 {

// ---------------------------------------------------------------------------
// ExactMatrix

ExactMatrix ExactMatrix::identity(size_t n)
{
    ExactMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = ExactScalar(1);
    return m;
}

ExactMatrix ExactMatrix::diagonal(std::vector<ExactScalar> entries)
{
    ExactMatrix m(entries.size(), entries.size());
    for (size_t i = 0; i < entries.size(); ++i) m.at(i, i) = std::move(entries[i]);
    return m;
}

ExactMatrix operator+(const ExactMatrix& x, const ExactMatrix& y)
{
    ExactMatrix r(x.rows_, x.cols_);
    for (size_t i = 0; i < x.a_.size(); ++i) r.a_[i] = x.a_[i] + y.a_[i];
    return r;
}

ExactMatrix operator-(const ExactMatrix& x, const ExactMatrix& y)
{
    ExactMatrix r(x.rows_, x.cols_);
    for (size_t i = 0; i < x.a_.size(); ++i) r.a_[i] = x.a_[i] - y.a_[i];
    return r;
}

ExactMatrix operator*(const ExactMatrix& x, const ExactMatrix& y)
{
    ExactMatrix r(x.rows_, y.cols_);
    for (size_t i = 0; i < x.rows_; ++i) {
        for (size_t k = 0; k < x.cols_; ++k) {
            const ExactScalar& xik = x.at(i, k);
            if (xik.is_zero()) continue;
            for (size_t j = 0; j < y.cols_; ++j) {
                const ExactScalar& ykj = y.at(k, j);
                if (ykj.is_zero()) continue;
                r.at(i, j) += xik * ykj;
            }
        }
    }
    return r;
}

ExactMatrix operator*(const ExactScalar& s, const ExactMatrix& x)
{
    ExactMatrix r(x.rows_, x.cols_);
    for (size_t i = 0; i < x.a_.size(); ++i) {
        if (!x.a_[i].is_zero()) r.a_[i] = s * x.a_[i];
    }
    return r;
}

bool ExactMatrix::is_zero() const
{
    for (const auto& e : a_) {
        if (!e.is_zero()) return false;
    }
    return true;
}

double NumericMatrix::max_abs() const
{
    double m = 0.0;
    for (double d : data) m = std::max(m, std::abs(d));
    return m;
}

// ---------------------------------------------------------------------------
// TruncationSpace

ExactScalar TruncationSpace::pair_haar(const MonomialA& x, const MonomialA& y) const
{
    {
        std::lock_guard<std::mutex> lock(cache_mutex_);
        auto it = haar_cache_.find({x, y});
        if (it != haar_cache_.end()) return it->second;
    }
    ExactScalar value =
        haar_state(star(AlgebraElement::monomial(x)) * AlgebraElement::monomial(y));
    std::lock_guard<std::mutex> lock(cache_mutex_);
    haar_cache_.emplace(std::make_pair(x, y), value);
    return value;
}

ExactScalar TruncationSpace::pairing(const AlgebraElement& x, const AlgebraElement& y) const
{
    ExactScalar total;
    for (const auto& [mx, cx] : x.terms()) {
        for (const auto& [my, cy] : y.terms()) {
            ExactScalar h = pair_haar(mx, my);
            if (!h.is_zero()) total += cx * cy * h;
        }
    }
    return total;
}

TruncationSpace::TruncationSpace(int max_degree) : max_degree_(max_degree)
{
    if (max_degree < 0) throw std::invalid_argument("truncation degree must be >= 0");

    for (const auto& m : monomials_up_to_degree(max_degree_)) {
        block_monos_[{m.weight_m().twice(), m.weight_n().twice()}].push_back(m);
    }

    LeftActionEngine engine;  // labels are gauge independent
    UElement cas = casimir();

    for (auto& [key, monos] : block_monos_) {
        HalfInteger m = HalfInteger::from_twice(key.first);
        HalfInteger n = HalfInteger::from_twice(key.second);
        long twice_lmin = std::max(std::labs(key.first), std::labs(key.second));
        std::vector<AlgebraElement> us;
        std::vector<ExactScalar> norms;
        for (size_t t = 0; t < monos.size(); ++t) {
            AlgebraElement u = AlgebraElement::monomial(monos[t]);
            for (size_t s = 0; s < t; ++s) {
                ExactScalar c = pairing(us[s], u) / norms[s];
                if (!c.is_zero()) u -= c * us[s];
            }
            ExactScalar lead;
            for (const auto& mono : monos) {
                lead = u.coeff(mono);
                if (!lead.is_zero()) break;
            }
            if (lead.is_zero()) throw GnsConstructionError("Gram matrix singular in graded block");
            u = lead.inverse() * u;
            ExactScalar nsq = pairing(u, u);
            if (nsq.is_zero()) throw GnsConstructionError("basis vector with vanishing norm");

            HalfInteger l = HalfInteger::from_twice(twice_lmin + 2 * static_cast<long>(t));
            AlgebraElement cu = engine.act(cas, u);
            if (!(cu == casimir_eigenvalue(l) * u))
                throw GnsConstructionError("Casimir eigenvalue does not match label l");

            us.push_back(u);
            norms.push_back(nsq);
            size_t idx = basis_.size();
            basis_.push_back(GnsBasisVector{l, m, n, u, nsq});
            blocks_[key].push_back(idx);
            by_label_[{l.twice(), key.first, key.second}] = idx;
        }
    }

    size_t expect = 0;
    for (long tl = 0; tl <= max_degree_; ++tl) {
        expect += static_cast<size_t>((tl + 1) * (tl + 1));
    }
    if (dim() != expect) throw GnsConstructionError("dimension formula violated");
}

std::optional<size_t> TruncationSpace::find(HalfInteger l, HalfInteger m, HalfInteger n) const
{
    auto it = by_label_.find({l.twice(), m.twice(), n.twice()});
    if (it == by_label_.end()) return std::nullopt;
    return it->second;
}

size_t TruncationSpace::index_of(HalfInteger l, HalfInteger m, HalfInteger n) const
{
    auto idx = find(l, m, n);
    if (!idx) throw std::out_of_range("no basis vector with the given labels");
    return *idx;
}

std::vector<ExactScalar> TruncationSpace::project(const AlgebraElement& x) const
{
    std::vector<ExactScalar> coords(dim());
    for (const auto& comp : grading(x)) {
        auto it = blocks_.find({comp.m.twice(), comp.n.twice()});
        if (it == blocks_.end()) continue;  // entirely outside the truncation
        for (size_t idx : it->second) {
            ExactScalar c = pairing(basis_[idx].vector, comp.component);
            if (!c.is_zero()) coords[idx] = c / basis_[idx].norm_sq;
        }
    }
    return coords;
}

AlgebraElement TruncationSpace::reconstruct(const std::vector<ExactScalar>& coords) const
{
    AlgebraElement x;
    for (size_t i = 0; i < coords.size(); ++i) {
        if (!coords[i].is_zero()) x += coords[i] * basis_[i].vector;
    }
    return x;
}

const std::vector<MonomialA>& TruncationSpace::block_monomials(HalfInteger m, HalfInteger n) const
{
    auto it = block_monos_.find({m.twice(), n.twice()});
    if (it == block_monos_.end()) throw std::out_of_range("no such graded block");
    return it->second;
}

// ---------------------------------------------------------------------------
// Operator matrices (exact)

namespace {

ExactMatrix matrix_of(const TruncationSpace& space,
                      const std::function<AlgebraElement(const AlgebraElement&)>& op)
{
    ExactMatrix mat(space.dim(), space.dim());
    for (size_t s = 0; s < space.dim(); ++s) {
        std::vector<ExactScalar> col = space.project(op(space.vector(s).vector));
        for (size_t t = 0; t < space.dim(); ++t) {
            if (!col[t].is_zero()) mat.at(t, s) = std::move(col[t]);
        }
    }
    return mat;
}

}  // namespace

EfkMatrices efk_matrices(const TruncationSpace& space, const LeftActionEngine& engine)
{
    EfkMatrices m;
    m.E = matrix_of(space, [&](const AlgebraElement& x) { return engine.act_e(x); });
    m.F = matrix_of(space, [&](const AlgebraElement& x) { return engine.act_f(x); });
    std::vector<ExactScalar> kdiag, kdiag_inv;
    kdiag.reserve(space.dim());
    kdiag_inv.reserve(space.dim());
    for (const auto& bv : space.basis()) {
        kdiag.push_back(ExactScalar::v_power(-bv.n.twice()));     // q^{-n}
        kdiag_inv.push_back(ExactScalar::v_power(bv.n.twice()));  // q^{+n}
    }
    m.K = ExactMatrix::diagonal(std::move(kdiag));
    m.K_inv = ExactMatrix::diagonal(std::move(kdiag_inv));
    return m;
}

ExactMatrix multiplication_matrix(const AlgebraElement& x, const TruncationSpace& space)
{
    return matrix_of(space, [&](const AlgebraElement& u) { return x * u; });
}

ExactMatrix modular_operator(const TruncationSpace& space)
{
    std::vector<ExactScalar> diag;
    diag.reserve(space.dim());
    for (const auto& bv : space.basis()) {
        diag.push_back(ExactScalar::v_power(-2 * bv.n.twice()));  // q^{-2n}
    }
    return ExactMatrix::diagonal(std::move(diag));
}

// ---------------------------------------------------------------------------
// NumericTruncation

Rational NumericTruncation::pair_haar_q0(const MonomialA& x, const MonomialA& y) const
{
    {
        std::lock_guard<std::mutex> lock(cache_mutex_);
        auto it = haar_cache_.find({x, y});
        if (it != haar_cache_.end()) return it->second;
    }
    ExactScalar value =
        haar_state(star(AlgebraElement::monomial(x)) * AlgebraElement::monomial(y));
    Rational r = value.eval_rational_q(q0_);
    std::lock_guard<std::mutex> lock(cache_mutex_);
    haar_cache_.emplace(std::make_pair(x, y), r);
    return r;
}

NumericTruncation::NumericTruncation(int max_degree, const Rational& q0)
    : max_degree_(max_degree), q0_(q0), v0_(std::sqrt(q0.get_d()))
{
    if (max_degree < 0) throw std::invalid_argument("truncation degree must be >= 0");
    if (!(q0 > 0 && q0 < 1)) throw NumericDomainError("q must lie in (0,1)");

    std::map<std::pair<long, long>, std::vector<MonomialA>> block_monos;
    for (const auto& m : monomials_up_to_degree(max_degree_)) {
        block_monos[{m.weight_m().twice(), m.weight_n().twice()}].push_back(m);
    }

    for (auto& [key, monos] : block_monos) {
        Block blk;
        blk.monos = monos;
        size_t bsize = monos.size();

        std::vector<std::vector<Rational>> gram(bsize, std::vector<Rational>(bsize));
        for (size_t i = 0; i < bsize; ++i) {
            for (size_t j = 0; j < bsize; ++j) gram[i][j] = pair_haar_q0(monos[i], monos[j]);
        }
        auto ip = [&](const std::vector<Rational>& a, const std::vector<Rational>& b) {
            Rational s(0);
            for (size_t i = 0; i < bsize; ++i) {
                if (a[i] == 0) continue;
                for (size_t j = 0; j < bsize; ++j) {
                    if (b[j] == 0) continue;
                    s += a[i] * b[j] * gram[i][j];
                }
            }
            return s;
        };

        long twice_lmin = std::max(std::labs(key.first), std::labs(key.second));
        for (size_t t = 0; t < bsize; ++t) {
            std::vector<Rational> u(bsize, Rational(0));
            u[t] = 1;
            for (size_t s = 0; s < t; ++s) {
                Rational c = ip(blk.basis_coords[s], u) / blk.norm_sq[s];
                if (c == 0) continue;
                for (size_t i = 0; i < bsize; ++i) u[i] -= c * blk.basis_coords[s][i];
            }
            size_t leadpos = bsize;
            for (size_t i = 0; i < bsize; ++i) {
                if (u[i] != 0) {
                    leadpos = i;
                    break;
                }
            }
            if (leadpos == bsize) throw GnsConstructionError("numeric Gram matrix singular at q0");
            Rational lead = u[leadpos];
            for (auto& c : u) c /= lead;
            Rational nsq = ip(u, u);
            if (!(nsq > 0))
                throw GnsConstructionError("norm not positive at q0 (faithfulness violated)");

            size_t idx = labels_.size();
            HalfInteger l = HalfInteger::from_twice(twice_lmin + 2 * static_cast<long>(t));
            labels_.push_back(Label{l, HalfInteger::from_twice(key.first),
                                    HalfInteger::from_twice(key.second)});
            by_label_[{l.twice(), key.first, key.second}] = idx;
            blk.basis_coords.push_back(std::move(u));
            blk.norm_sq.push_back(std::move(nsq));
            blk.global_index.push_back(idx);
        }
        blocks_.emplace(key, std::move(blk));
    }

    locate_.resize(labels_.size());
    for (const auto& [key, blk] : blocks_) {
        for (size_t pos = 0; pos < blk.global_index.size(); ++pos) {
            locate_[blk.global_index[pos]] = {&blk, pos};
        }
    }
}

std::optional<size_t> NumericTruncation::find(HalfInteger l, HalfInteger m, HalfInteger n) const
{
    auto it = by_label_.find({l.twice(), m.twice(), n.twice()});
    if (it == by_label_.end()) return std::nullopt;
    return it->second;
}

double NumericTruncation::norm(size_t i) const
{
    const auto& [blk, pos] = locate_[i];
    return std::sqrt(blk->norm_sq[pos].get_d());
}

Rational NumericTruncation::project_on(const Block& blk, size_t pos, const MonomialA& mono) const
{
    Rational s(0);
    const auto& coords = blk.basis_coords[pos];
    for (size_t i = 0; i < blk.monos.size(); ++i) {
        if (coords[i] == 0) continue;
        Rational g = pair_haar_q0(blk.monos[i], mono);
        if (g != 0) s += coords[i] * g;
    }
    return s;
}

NumericMatrix NumericTruncation::orthonormal_matrix(
    const std::function<AlgebraElement(const MonomialA&)>& op) const
{
    NumericMatrix mat(dim(), dim());
    for (size_t s = 0; s < dim(); ++s) {
        const auto& [blk_s, pos_s] = locate_[s];
        double norm_s = norm(s);
        std::map<MonomialA, double> w;  // image of the unnormalized vector
        const auto& coords = blk_s->basis_coords[pos_s];
        for (size_t i = 0; i < blk_s->monos.size(); ++i) {
            if (coords[i] == 0) continue;
            double ci = coords[i].get_d();
            AlgebraElement om = op(blk_s->monos[i]);
            for (const auto& [mm, cc] : om.terms()) {
                w[mm] += ci * cc.eval_v(v0_);
            }
        }
        std::map<std::pair<long, long>, std::vector<std::pair<MonomialA, double>>> by_block;
        for (const auto& [mm, val] : w) {
            if (val == 0.0) continue;
            by_block[{mm.weight_m().twice(), mm.weight_n().twice()}].push_back({mm, val});
        }
        for (const auto& [key, entries] : by_block) {
            auto bit = blocks_.find(key);
            if (bit == blocks_.end()) continue;  // compressed away
            const Block& target = bit->second;
            for (size_t pos = 0; pos < target.global_index.size(); ++pos) {
                double acc = 0.0;
                for (const auto& [mm, val] : entries) {
                    Rational p = project_on(target, pos, mm);
                    if (p != 0) acc += val * Rational(p / target.norm_sq[pos]).get_d();
                }
                if (acc != 0.0) {
                    size_t t = target.global_index[pos];
                    mat.at(t, s) = acc * norm(t) / norm_s;
                }
            }
        }
    }
    return mat;
}

// ---------------------------------------------------------------------------
// Gauge calibration and growth constants

namespace {

double efk_target(const NumericTruncation& space, HalfInteger l, HalfInteger n, bool raising_e)
{
    // E: sqrt([l+n]_q [l-n+1]_q), F: sqrt([l-n]_q [l+n+1]_q)
    double q0d = space.q0().get_d();
    HalfInteger one(1);
    NumericScalar t1, t2;
    if (raising_e) {
        t1 = q_integer(NumericScalar((l + n).value(), 0.0), q0d);
        t2 = q_integer(NumericScalar((l - n + one).value(), 0.0), q0d);
    } else {
        t1 = q_integer(NumericScalar((l - n).value(), 0.0), q0d);
        t2 = q_integer(NumericScalar((l + n + one).value(), 0.0), q0d);
    }
    return std::sqrt(std::abs(t1.real() * t2.real()));
}

}  // namespace

double e_gauge_mismatch(const NumericTruncation& space, const LeftActionEngine& engine)
{
    if (space.max_degree() < 1)
        throw CalibrationError("truncation too small: spin-1/2 block required");
    NumericMatrix e_mat = space.orthonormal_matrix(
        [&](const MonomialA& m) { return engine.act_e(AlgebraElement::monomial(m)); });
    HalfInteger half = HalfInteger::from_twice(1);
    size_t row = *space.find(half, -half, -half);
    size_t col = *space.find(half, -half, half);
    double measured = e_mat.at(row, col);
    double target = efk_target(space, half, half, /*raising_e=*/true);  // = 1
    return std::abs(measured) / target;
}

ExactScalar calibrate_gauge(const NumericTruncation& space, double tol)
{
    if (space.max_degree() < 3)
        throw CalibrationError("truncation too small: blocks up to l = 3/2 required");
    LeftActionEngine unit_gauge;
    double mismatch = e_gauge_mismatch(space, unit_gauge);
    if (!(mismatch > 0))
        throw CalibrationError("vanishing E entry at gauge 1; table inconsistent");
    double rho_real = 1.0 / mismatch;
    double q0d = space.q0().get_d();
    double exponent = 2.0 * std::log(rho_real) / std::log(q0d);  // rho = v^exponent
    long rounded = std::lround(exponent);
    if (std::abs(exponent - static_cast<double>(rounded)) > 0.05)
        throw CalibrationError("fitted gauge is not a half-integer power of q");
    ExactScalar rho = ExactScalar::v_power(rounded);

    // re-verify every E and F entry with l <= 3/2 against the target table
    LeftActionEngine engine(rho);
    NumericMatrix e_mat = space.orthonormal_matrix(
        [&](const MonomialA& m) { return engine.act_e(AlgebraElement::monomial(m)); });
    NumericMatrix f_mat = space.orthonormal_matrix(
        [&](const MonomialA& m) { return engine.act_f(AlgebraElement::monomial(m)); });
    HalfInteger one(1);
    for (size_t col = 0; col < space.dim(); ++col) {
        const auto& lab = space.labels()[col];
        if (lab.l.twice() > 3) continue;
        double expect_e = (lab.n + lab.l).is_zero() ? 0.0 : efk_target(space, lab.l, lab.n, true);
        auto row_e = space.find(lab.l, lab.m, lab.n - one);
        double got_e = row_e ? std::abs(e_mat.at(*row_e, col)) : 0.0;
        if (std::abs(got_e - expect_e) > tol)
            throw CalibrationError("E entry mismatch after gauge fit");
        double expect_f = (lab.l - lab.n).is_zero() ? 0.0 : efk_target(space, lab.l, lab.n, false);
        auto row_f = space.find(lab.l, lab.m, lab.n + one);
        double got_f = row_f ? std::abs(f_mat.at(*row_f, col)) : 0.0;
        if (std::abs(got_f - expect_f) > tol)
            throw CalibrationError("F entry mismatch after gauge fit");
    }
    return rho;
}

GrowthReport growth_constants(const NumericTruncation& space, char generator)
{
    MonomialA g;
    switch (generator) {
        case 'a': g = MonomialA{1, 0, 0}; break;
        case 'c': g = MonomialA{0, 0, 1}; break;
        default: throw std::invalid_argument("growth constants defined for a and c");
    }
    NumericMatrix mat =
        space.orthonormal_matrix([&](const MonomialA& m) { return term_product(g, m); });
    double q0d = space.q0().get_d();
    GrowthReport rep;
    for (size_t col = 0; col < space.dim(); ++col) {
        const auto& cl = space.labels()[col];
        for (size_t row = 0; row < space.dim(); ++row) {
            double val = std::abs(mat.at(row, col));
            if (val < 1e-300) continue;
            const auto& rl = space.labels()[row];
            if (rl.l.twice() == cl.l.twice() + 1) {
                rep.raising_sup =
                    std::max(rep.raising_sup, val / std::pow(q0d, cl.n.value() + cl.l.value()));
            } else if (rl.l.twice() == cl.l.twice() - 1) {
                rep.lowering_sup = std::max(rep.lowering_sup, val);
            }
        }
    }
    return rep;
}

}  // namespace qsu2
