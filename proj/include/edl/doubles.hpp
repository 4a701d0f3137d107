/**
 * doubles.hpp -- the Drinfeld double D(H) and the elliptic double Del(H).
 *
 * D(H) lives on H (x) H^{*,cop} with normal form h.f and the cross relation
 *
 *     f h = <f_3, S^{-1}(h_1)> <f_1, h_3> h_2 f_2
 *
 * (components numbered so that sum f_1(a) f_2(b) f_3(c) = f(abc)).  D(H) is
 * materialized as a HopfData with basis index i*dimH + j for h_i f_j,
 * carrying the R-matrix sum_i h_i (x) h_i^*, the pivotal element inherited
 * from H and a ribbon element derived from the Drinfeld element.
 *
 * Del(H), for ribbon (H, R, v, u), lives on H (x) H1^{*,cop} (x) H2^{*,cop}
 * with normal form h.f1.f2; each dual copy commutes past H as in D(H), and
 * the two dual copies exchange via (writing R = s_a (x) t_a)
 *
 *     f2 f1 = <f1_1, t_a> <f1_3, s_a'> <f2_1, s_a> <f2_3, t_a'> f1_2 f2_2 .
 *
 * Del(H) is never materialized as a dense structure-constant tensor:
 * multiplication is lazy straightening on normal-form words with memoized
 * per-generator rewrite tables.  At dim H = 36 the full double has
 * dimension 46656 and straightening stays cheap because all the rewrite
 * data is per-pair, not per-word.
 */
#pragma once

#include <optional>

#include "edl/hopf.hpp"

namespace edl {

struct MissingRibbon : std::runtime_error {
    MissingRibbon() : std::runtime_error("elliptic double requires ribbon data") {}
};
struct NoIntegral : std::runtime_error {
    NoIntegral() : std::runtime_error("no normalizable two-sided integral") {}
};
struct NotCocommutative : std::runtime_error {
    NotCocommutative() : std::runtime_error("Hopf structure needs a cocommutative base") {}
};

// ---------------------------------------------------------------------------
// shared straightening rules
// ---------------------------------------------------------------------------

/// Rewrite tables for moving dual-basis elements past H-basis elements.
/// fh_rule: f_j h_i -> sum (h', f') ;  hf_rule: h_i f_j -> sum (f', h').
class StraightenTables {
public:
    explicit StraightenTables(const HopfData* H) : H_(H) {
        fh_.resize(static_cast<size_t>(H->dim) * H->dim);
        hf_.resize(static_cast<size_t>(H->dim) * H->dim);
    }

    /// f_j h_i = sum <f_3, S^{-1}(h_1)><f_1, h_3> h_2 f_2, returned over the
    /// fused pair index h' * dim + f'.
    const SparseVec& fh(int f, int h) const {
        size_t key = static_cast<size_t>(f) * H_->dim + h;
        if (!fh_[key]) {
            SparseVec out;
            for (const auto& t : H_->sweedler2(h)) {
                // functional y |-> f(h_3 y S^{-1}(h_1))
                SparseVec func =
                    H_->dual_sandwich(f, H_->basis_cache(t.c), H_->antipode_inv[t.a]);
                for (auto& [fp, cf] : func.terms())
                    out.add(static_cast<int64_t>(t.b) * H_->dim + fp, t.coeff * cf);
            }
            fh_[key] = std::move(out);
        }
        return *fh_[key];
    }

    /// Inverse rewrite h_i f_j = sum <f_1, S(h_1)><f_3, h_3> f_2 h_2, over the
    /// fused pair index f' * dim + h'.
    const SparseVec& hf(int h, int f) const {
        size_t key = static_cast<size_t>(h) * H_->dim + f;
        if (!hf_[key]) {
            SparseVec out;
            for (const auto& t : H_->sweedler2(h)) {
                // functional y |-> f(S(h_1) y h_3)
                SparseVec func = H_->dual_sandwich(f, H_->antipode[t.a], H_->basis_cache(t.c));
                for (auto& [fp, cf] : func.terms())
                    out.add(fp * H_->dim + t.b, t.coeff * cf);
            }
            hf_[key] = std::move(out);
        }
        return *hf_[key];
    }

private:
    const HopfData* H_;
    mutable std::vector<std::optional<SparseVec>> fh_, hf_;
};

// ---------------------------------------------------------------------------
// Drinfeld double
// ---------------------------------------------------------------------------

struct DrinfeldDouble {
    HopfData base;    // H
    HopfData D;       // the double as a Hopf algebra (basis h_i f_j at i*dimH + j)
    RibbonData R;     // R-matrix, ribbon, pivotal of D
    int dimH = 0;

    int64_t idx(int h, int f) const { return static_cast<int64_t>(h) * dimH + f; }

    SparseVec embed_h(const SparseVec& x) const {
        SparseVec out;
        SparseVec du = base.dual_unit();
        for (auto& [i, ci] : x.terms())
            for (auto& [j, cj] : du.terms()) out.add(idx(static_cast<int>(i), static_cast<int>(j)), ci * cj);
        return out;
    }
    SparseVec embed_f(const SparseVec& f) const {
        SparseVec out;
        for (auto& [j, cj] : f.terms())
            for (auto& [i, ci] : base.unit.terms())
                out.add(idx(static_cast<int>(i), static_cast<int>(j)), ci * cj);
        return out;
    }
};

/// Build D(H).  `pivotal` is the pivotal element of H (grouplike with
/// S^2 = Ad v); for group algebras it is the identity.
inline DrinfeldDouble drinfeld_double(const HopfData& H, const SparseVec& pivotal) {
    DrinfeldDouble dd;
    dd.base = H;
    dd.dimH = H.dim;
    const int n = H.dim;
    HopfData Hstar = dual_hopf(H);
    StraightenTables st(&dd.base);

    HopfData& D = dd.D;
    D.dim = n * n;
    D.name = "D(" + H.name + ")";
    D.labels.resize(D.dim);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) D.labels[dd.idx(i, j)] = H.labels[i] + "*" + Hstar.labels[j];

    // multiplication via straightening
    D.mul.assign(D.dim, std::vector<SparseVec>(D.dim));
    for (int i1 = 0; i1 < n; ++i1)
        for (int j1 = 0; j1 < n; ++j1)
            for (int i2 = 0; i2 < n; ++i2)
                for (int j2 = 0; j2 < n; ++j2) {
                    SparseVec out;
                    for (auto& [hf, c] : st.fh(j1, i2).terms()) {
                        int hp = static_cast<int>(hf / n), fp = static_cast<int>(hf % n);
                        const SparseVec& hh = H.mul[i1][hp];
                        const SparseVec& ff = Hstar.mul[fp][j2];
                        for (auto& [a, ca] : hh.terms())
                            for (auto& [b, cb] : ff.terms())
                                out.add(dd.idx(static_cast<int>(a), static_cast<int>(b)),
                                        c * ca * cb);
                    }
                    D.mul[dd.idx(i1, j1)][dd.idx(i2, j2)] = std::move(out);
                }
    // unit
    for (auto& [i, ci] : H.unit.terms())
        for (auto& [j, cj] : Hstar.unit.terms())
            D.unit.add(dd.idx(static_cast<int>(i), static_cast<int>(j)), ci * cj);
    // componentwise coalgebra
    D.comul.assign(D.dim, SparseVec());
    D.counit.resize(D.dim);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            SparseVec& out = D.comul[dd.idx(i, j)];
            for (auto& [pq1, c1] : H.comul[i].terms()) {
                int a = static_cast<int>(pq1 / n), b = static_cast<int>(pq1 % n);
                for (auto& [pq2, c2] : Hstar.comul[j].terms()) {
                    int p = static_cast<int>(pq2 / n), q = static_cast<int>(pq2 % n);
                    out.add(dd.idx(a, p) * D.dim + dd.idx(b, q), c1 * c2);
                }
            }
            D.counit[dd.idx(i, j)] = H.counit[i] * Hstar.counit[j];
        }
    // antipode S(h f) = S*(f) . S(h), re-straightened; inverse likewise
    D.antipode.resize(D.dim);
    D.antipode_inv.resize(D.dim);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            SparseVec out, outi;
            for (auto& [fp, cf] : Hstar.antipode[j].terms())
                for (auto& [hp, ch] : H.antipode[i].terms())
                    for (auto& [hf, c] : st.fh(static_cast<int>(fp), static_cast<int>(hp)).terms())
                        out.add(hf, cf * ch * c);
            for (auto& [fp, cf] : Hstar.antipode_inv[j].terms())
                for (auto& [hp, ch] : H.antipode_inv[i].terms())
                    for (auto& [hf, c] : st.fh(static_cast<int>(fp), static_cast<int>(hp)).terms())
                        outi.add(hf, cf * ch * c);
            D.antipode[dd.idx(i, j)] = std::move(out);
            D.antipode_inv[dd.idx(i, j)] = std::move(outi);
        }

    // R-matrix sum_i h_i (x) h_i^*
    for (int i = 0; i < n; ++i) {
        SparseVec lh = dd.embed_h(SparseVec::basis(i));
        SparseVec rf = dd.embed_f(SparseVec::basis(i));
        for (auto& [a, ca] : lh.terms())
            for (auto& [b, cb] : rf.terms())
                dd.R.rmatrix.add(a * D.dim + b, ca * cb);
    }
    dd.R.pivotal = dd.embed_h(pivotal);

    // ribbon element from the Drinfeld element du = m(S (x) id)(R21):
    // the ribbon is whichever of du, du^{-1} satisfies the ribbon axioms.
    SparseVec du, du_inv;
    for (auto& [st2, c] : dd.R.rmatrix.terms()) {
        int64_t s = st2 / D.dim, t = st2 % D.dim;
        du.add(D.product(D.apply_S(SparseVec::basis(t)), SparseVec::basis(s)), c);
        // u^{-1} = sum t_a S^2(s_a)
        du_inv.add(
            D.product(SparseVec::basis(t), D.apply_S(D.apply_S(SparseVec::basis(s)))), c);
    }
    if (D.product(du, du_inv) != D.unit)
        throw std::logic_error("Drinfeld element inverse identity failed");
    auto ribbon_ok = [&](const SparseVec& u) {
        if (D.apply_S(u) != u) return false;
        if (D.counit_of(u) != Cyc::rational(1)) return false;
        SparseVec duu;
        for (auto& [i, ci] : u.terms()) duu.add(D.comul[i], ci);
        SparseVec uu;
        for (auto& [i, ci] : u.terms())
            for (auto& [j, cj] : u.terms()) uu.add(i * D.dim + j, ci * cj);
        return tensor2_product(D, monodromy_inverse(D, dd.R.rmatrix), uu) == duu;
    };
    if (ribbon_ok(du))
        dd.R.ribbon = du;
    else if (ribbon_ok(du_inv))
        dd.R.ribbon = du_inv;
    else
        throw std::logic_error("no ribbon element among Drinfeld element and its inverse");
    return dd;
}

// ---------------------------------------------------------------------------
// elliptic double
// ---------------------------------------------------------------------------

class EllipticDouble {
public:
    HopfData H;      // base, ribbon
    RibbonData RH;
    HopfData Hstar;  // H^{*,cop} structure shared by both dual copies

    EllipticDouble(const HopfData& base, const RibbonData& ribbon)
        : H(base), RH(ribbon), Hstar(dual_hopf(base)), st_(nullptr) {
        n_ = H.dim;
        dim_ = static_cast<int64_t>(n_) * n_ * n_;
        st_ = std::make_unique<StraightenTables>(&H);
        cross_.resize(static_cast<size_t>(n_) * n_);
        // rank-one form of the R-matrix, grouped by left basis index
        std::map<int, SparseVec> grouped;
        for (auto& [stp, c] : RH.rmatrix.terms())
            grouped[static_cast<int>(stp / n_)].add(stp % n_, c);
        for (auto& [i, right] : grouped) r1_.push_back({i, right});
    }

    int dimH() const { return n_; }
    int64_t dim() const { return dim_; }
    int64_t widx(int h, int p, int q) const {
        return (static_cast<int64_t>(h) * n_ + p) * n_ + q;
    }
    void wsplit(int64_t w, int& h, int& p, int& q) const {
        q = static_cast<int>(w % n_);
        p = static_cast<int>((w / n_) % n_);
        h = static_cast<int>(w / (static_cast<int64_t>(n_) * n_));
    }
    std::string label(int64_t w) const {
        int h, p, q;
        wsplit(w, h, p, q);
        return H.labels[h] + "*" + Hstar.labels[p] + "(1)*" + Hstar.labels[q] + "(2)";
    }

    const SparseVec& fh(int f, int h) const { return st_->fh(f, h); }
    const SparseVec& hf(int h, int f) const { return st_->hf(h, f); }

    /// iota2(f_q) iota1(f_p) = sum <f1_1,t_a><f1_3,s_a'><f2_1,s_a><f2_3,t_a'>
    /// f1_2 f2_2, over the fused dual pair index p' * dim + q'.
    const SparseVec& cross(int q, int p) const {
        size_t key = static_cast<size_t>(q) * n_ + p;
        if (!cross_[key]) {
            SparseVec out;
            for (const auto& [ia, ta] : r1_) {
                for (auto& [ja, ca] : ta.terms()) {
                    for (const auto& [ib, tb] : r1_) {
                        for (auto& [jb, cb] : tb.terms()) {
                            // f1 sandwich: y |-> f_p(t_a y s_b)
                            SparseVec f1 = H.dual_sandwich(
                                p, H.basis_cache(static_cast<int>(ja)), H.basis_cache(ib));
                            if (f1.empty()) continue;
                            // f2 sandwich: z |-> f_q(s_a z t_b)
                            SparseVec f2 = H.dual_sandwich(
                                q, H.basis_cache(ia), H.basis_cache(static_cast<int>(jb)));
                            Cyc cc = ca * cb;
                            for (auto& [pp, c1] : f1.terms())
                                for (auto& [qq, c2] : f2.terms())
                                    out.add(pp * n_ + qq, cc * c1 * c2);
                        }
                    }
                }
            }
            cross_[key] = std::move(out);
        }
        return *cross_[key];
    }

    /// Inverse exchange: expansion of the normal word iota1(f_p) iota2(f_q)
    /// as sum c iota2(f_{q'}) iota1(f_{p'}), over the fused index q' * dim + p'.
    /// Built once by inverting the exchange map on H^* (x) H^*.
    const SparseVec& cross_inv(int p, int q) const {
        if (cross_inv_.empty()) {
            int d2 = n_ * n_;
            Mat T(d2, d2);
            for (int qq = 0; qq < n_; ++qq)
                for (int pp = 0; pp < n_; ++pp)
                    for (auto& [pq, c] : cross(qq, pp).terms())
                        T(static_cast<int>(pq), qq * n_ + pp) += c;
            SolveResult s = mat_solve(T, Mat::identity(d2));
            if (!s.consistent || s.nullspace.cols() != 0)
                throw std::logic_error("dual exchange map is not invertible");
            cross_inv_.resize(d2);
            for (int p2 = 0; p2 < n_; ++p2)
                for (int q2 = 0; q2 < n_; ++q2) {
                    SparseVec out;
                    for (int qp = 0; qp < d2; ++qp)
                        if (!s.particular(qp, p2 * n_ + q2).is_zero())
                            out.add(qp, s.particular(qp, p2 * n_ + q2));
                    cross_inv_[static_cast<size_t>(p2) * n_ + q2] = std::move(out);
                }
        }
        return cross_inv_[static_cast<size_t>(p) * n_ + q];
    }

    /// Product of two normal-form basis words.
    SparseVec mul_words(int64_t w1, int64_t w2) const {
        int h1, p1, q1, h2, p2, q2;
        wsplit(w1, h1, p1, q1);
        wsplit(w2, h2, p2, q2);
        SparseVec out;
        for (auto& [ha_fa, cA] : fh(q1, h2).terms()) {       // f2_{q1} h2
            int hA = static_cast<int>(ha_fa / n_), qA = static_cast<int>(ha_fa % n_);
            for (auto& [hb_fb, cB] : fh(p1, hA).terms()) {   // f1_{p1} hA
                int hB = static_cast<int>(hb_fb / n_), pB = static_cast<int>(hb_fb % n_);
                for (auto& [pc_qc, cC] : cross(qA, p2).terms()) {  // f2_{qA} f1_{p2}
                    int pC = static_cast<int>(pc_qc / n_), qC = static_cast<int>(pc_qc % n_);
                    Cyc c = cA * cB * cC;
                    const SparseVec& hh = H.mul[h1][hB];
                    const SparseVec& f1f1 = Hstar.mul[pB][pC];
                    const SparseVec& f2f2 = Hstar.mul[qC][q2];
                    for (auto& [x, cx] : hh.terms())
                        for (auto& [y, cy] : f1f1.terms())
                            for (auto& [z, cz] : f2f2.terms())
                                out.add(widx(static_cast<int>(x), static_cast<int>(y),
                                             static_cast<int>(z)),
                                        c * cx * cy * cz);
                }
            }
        }
        return out;
    }

    SparseVec product(const SparseVec& a, const SparseVec& b) const {
        SparseVec out;
        for (auto& [w1, c1] : a.terms())
            for (auto& [w2, c2] : b.terms()) out.add(mul_words(w1, w2), c1 * c2);
        return out;
    }

    SparseVec unit() const {
        SparseVec out;
        SparseVec du = Hstar.unit;
        for (auto& [i, ci] : H.unit.terms())
            for (auto& [p, cp] : du.terms())
                for (auto& [q, cq] : du.terms())
                    out.add(widx(static_cast<int>(i), static_cast<int>(p), static_cast<int>(q)),
                            ci * cp * cq);
        return out;
    }

    SparseVec embed_h(const SparseVec& x) const {
        SparseVec out;
        SparseVec du = Hstar.unit;
        for (auto& [i, ci] : x.terms())
            for (auto& [p, cp] : du.terms())
                for (auto& [q, cq] : du.terms())
                    out.add(widx(static_cast<int>(i), static_cast<int>(p), static_cast<int>(q)),
                            ci * cp * cq);
        return out;
    }
    SparseVec embed1(const SparseVec& f) const {
        SparseVec out;
        SparseVec du = Hstar.unit;
        for (auto& [p, cp] : f.terms())
            for (auto& [i, ci] : H.unit.terms())
                for (auto& [q, cq] : du.terms())
                    out.add(widx(static_cast<int>(i), static_cast<int>(p), static_cast<int>(q)),
                            ci * cp * cq);
        return out;
    }
    SparseVec embed2(const SparseVec& f) const {
        SparseVec out;
        SparseVec du = Hstar.unit;
        for (auto& [q, cq] : f.terms())
            for (auto& [i, ci] : H.unit.terms())
                for (auto& [p, cp] : du.terms())
                    out.add(widx(static_cast<int>(i), static_cast<int>(p), static_cast<int>(q)),
                            ci * cp * cq);
        return out;
    }
    /// iota_k on a D(H)-basis pair (h, f), k = 1, 2.
    SparseVec iota(int copy, int h, int f) const {
        SparseVec out;
        SparseVec du = Hstar.unit;
        for (auto& [o, co] : du.terms()) {
            if (copy == 1)
                out.add(widx(h, f, static_cast<int>(o)), co);
            else
                out.add(widx(h, static_cast<int>(o), f), co);
        }
        return out;
    }

    // ---- Hopf structure for cocommutative base ----

    void require_cocommutative() const {
        if (!is_cocommutative(H)) throw NotCocommutative();
    }

    /// Componentwise coproduct, over the fused pair of word indices.
    SparseVec comul_word(int64_t w) const {
        int h, p, q;
        wsplit(w, h, p, q);
        SparseVec out;
        for (auto& [ab, c1] : H.comul[h].terms()) {
            int64_t a = ab / n_, b = ab % n_;
            for (auto& [p12, c2] : Hstar.comul[p].terms()) {
                int64_t p1 = p12 / n_, p2 = p12 % n_;
                for (auto& [q12, c3] : Hstar.comul[q].terms()) {
                    int64_t q1 = q12 / n_, q2 = q12 % n_;
                    out.add(widx(static_cast<int>(a), static_cast<int>(p1),
                                 static_cast<int>(q1)) *
                                    dim_ +
                                widx(static_cast<int>(b), static_cast<int>(p2),
                                     static_cast<int>(q2)),
                            c1 * c2 * c3);
                }
            }
        }
        return out;
    }
    Cyc counit_word(int64_t w) const {
        int h, p, q;
        wsplit(w, h, p, q);
        return H.counit[h] * Hstar.counit[p] * Hstar.counit[q];
    }
    /// S(h f1 f2) = S*(f2) S*(f1) S(h) with S* = (- o S^{-1}), straightened.
    SparseVec antipode_word(int64_t w) const {
        int h, p, q;
        wsplit(w, h, p, q);
        SparseVec out;
        for (auto& [q2, cq] : Hstar.antipode[q].terms())
            for (auto& [p2, cp] : Hstar.antipode[p].terms())
                for (auto& [h2, ch] : H.antipode[h].terms()) {
                    // iota2(f_{q2}) iota1(f_{p2}) h2
                    Cyc c = cq * cp * ch;
                    for (auto& [ppqq, c1] : cross(static_cast<int>(q2), static_cast<int>(p2))
                                                .terms()) {
                        int pp = static_cast<int>(ppqq / n_), qq = static_cast<int>(ppqq % n_);
                        // f1_{pp} f2_{qq} h2 : move h2 leftwards
                        for (auto& [hf2, c2] : fh(qq, static_cast<int>(h2)).terms()) {
                            int hA = static_cast<int>(hf2 / n_), qA = static_cast<int>(hf2 % n_);
                            for (auto& [hf1, c3] : fh(pp, hA).terms()) {
                                int hB = static_cast<int>(hf1 / n_),
                                    pA = static_cast<int>(hf1 % n_);
                                out.add(widx(hB, pA, qA), c * c1 * c2 * c3);
                            }
                        }
                    }
                }
        return out;
    }

private:
    int n_ = 0;
    int64_t dim_ = 0;
    std::unique_ptr<StraightenTables> st_;
    mutable std::vector<std::optional<SparseVec>> cross_;
    mutable std::vector<SparseVec> cross_inv_;
    std::vector<std::pair<int, SparseVec>> r1_;  // rank-one form of R
};

// ---------------------------------------------------------------------------
// integrals
// ---------------------------------------------------------------------------

/// Two-sided Haar integral of a (semisimple) Hopf algebra: a Lambda = eps(a)
/// Lambda for all a, normalized eps(Lambda) = 1.
inline SparseVec haar_integral(const HopfData& A) {
    const int n = A.dim;
    Mat sys(n * n, n);
    for (int a = 0; a < n; ++a)
        for (int k = 0; k < n; ++k) {
            // column k: coefficient vector of h_a h_k - eps(h_a) h_k
            for (auto& [m, c] : A.mul[a][k].terms())
                sys(a * n + static_cast<int>(m), k) += c;
            sys(a * n + k, k) -= A.counit[a];
        }
    SolveResult s = mat_solve(sys, Mat::zero(n * n, 1));
    for (int col = 0; col < s.nullspace.cols(); ++col) {
        Cyc eps;
        for (int k = 0; k < n; ++k) eps += A.counit[k] * s.nullspace(k, col);
        if (eps.is_zero()) continue;
        Cyc scale = eps.inverse();
        SparseVec lambda;
        for (int k = 0; k < n; ++k) lambda.add(k, scale * s.nullspace(k, col));
        // two-sidedness check
        for (int a = 0; a < n; ++a) {
            SparseVec right = A.product(lambda, SparseVec::basis(a));
            SparseVec want;
            want.add(lambda, A.counit[a]);
            if (right != want) throw NoIntegral();
        }
        return lambda;
    }
    throw NoIntegral();
}

// ---------------------------------------------------------------------------
// commutation identity on the regular module
// ---------------------------------------------------------------------------

/// Exact check of  RH^{12} R1^{13} R2^{23} RH^{21} = R2^{23} R1^{13}
/// as operators on H (x) H (x) Del(H) acting on itself, via the cyclic-vector
/// reduction: all factors act by componentwise left multiplication, so the
/// operator identity is equivalent to the equality of the corresponding
/// elements of the algebra H (x) H (x) Del(H).
struct CommIdentityReport {
    bool ok = true;
    std::string witness;  // first differing fused index, for diagnostics
};

inline CommIdentityReport comm_identity_regular(const EllipticDouble& E) {
    const HopfData& H = E.H;
    const int n = H.dim;
    // rank-one form of R
    std::map<int, SparseVec> grouped;
    for (auto& [stp, c] : E.RH.rmatrix.terms())
        grouped[static_cast<int>(stp / n)].add(stp % n, c);

    auto mul_sparse = [&](const SparseVec& x, const SparseVec& y) { return H.product(x, y); };

    // accumulate over fused index (i * n + j) * dim + w
    auto fused = [&](int64_t i, int64_t j, int64_t w) { return (i * n + j) * E.dim() + w; };

    SparseVec lhs, rhs;
    // LHS: sum over a (R), b (R21 components), i, j of
    //   (s_a h_i t_b) (x) (t_a h_j s_b) (x) iota1(f_i) iota2(f_j)
    for (auto& [sa, ta] : grouped) {
        for (auto& [tai, tac] : ta.terms()) {
            for (auto& [sb, tb] : grouped) {
                for (auto& [tbi, tbc] : tb.terms()) {
                    Cyc cab = tac * tbc;
                    for (int i = 0; i < n; ++i) {
                        SparseVec leg1 = mul_sparse(
                            mul_sparse(H.basis_cache(sa), H.basis_cache(i)),
                            H.basis_cache(static_cast<int>(tbi)));
                        if (leg1.empty()) continue;
                        for (int j = 0; j < n; ++j) {
                            SparseVec leg2 = mul_sparse(
                                mul_sparse(H.basis_cache(static_cast<int>(tai)),
                                           H.basis_cache(j)),
                                H.basis_cache(sb));
                            if (leg2.empty()) continue;
                            // leg3 = iota1(f_i) iota2(f_j): already normal form
                            for (auto& [u, cu] : H.unit.terms()) {
                                int64_t w = E.widx(static_cast<int>(u), i, j);
                                Cyc c3 = cab * cu;
                                for (auto& [x, cx] : leg1.terms())
                                    for (auto& [y, cy] : leg2.terms())
                                        lhs.add(fused(x, y, w), c3 * cx * cy);
                            }
                        }
                    }
                }
            }
        }
    }
    // RHS: sum over i, j of  h_i (x) h_j (x) iota2(f_j) iota1(f_i)
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const SparseVec& cr = E.cross(j, i);
            for (auto& [pq, c] : cr.terms()) {
                int p = static_cast<int>(pq / n), q = static_cast<int>(pq % n);
                for (auto& [u, cu] : H.unit.terms())
                    rhs.add(fused(i, j, E.widx(static_cast<int>(u), p, q)), c * cu);
            }
        }

    CommIdentityReport rep;
    if (lhs != rhs) {
        rep.ok = false;
        SparseVec diff = lhs - rhs;
        int64_t bad = diff.terms().begin()->first;
        int64_t w = bad % E.dim();
        int64_t ij = bad / E.dim();
        rep.witness = "legs (" + H.labels[static_cast<int>(ij / n)] + ", " +
                      H.labels[static_cast<int>(ij % n)] + ") word " + E.label(w);
    }
    return rep;
}

}  // namespace edl
