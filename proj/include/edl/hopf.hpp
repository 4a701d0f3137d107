/**
 * hopf.hpp -- finite-dimensional Hopf algebras as structure-constant data.
 *
 * A HopfData carries the full tuple (m, 1, Delta, eps, S) over Q(zeta_N),
 * optionally quasi-triangular / ribbon data (R, v, u).  Constructors build
 * group algebras kk[G] and duals H^{*,cop}; the axiom checkers are
 * report-style and return the list of violated axioms with witnesses.
 *
 * Conventions used throughout (also by the doubles built on top):
 *   - Sweedler components are numbered so that for f in the dual,
 *     sum f_1(a) f_2(b) f_3(c) = f(abc); the comultiplication of H^{*,cop}
 *     is (m^*)^cop, i.e. it lists components in reversed order.
 *   - dual basis pairing <f_i, h_j> = delta_ij.
 */
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "edl/element.hpp"
#include "edl/group.hpp"
#include "edl/matrix.hpp"

namespace edl {

struct HopfData {
    int dim = 0;
    std::string name;
    std::vector<std::string> labels;

    // structure tensors, all sparse
    std::vector<std::vector<SparseVec>> mul;  // mul[i][j] over basis index
    SparseVec unit;
    std::vector<SparseVec> comul;  // comul[i] over fused pair index a*dim+b
    std::vector<Cyc> counit;
    std::vector<SparseVec> antipode;      // S(h_i)
    std::vector<SparseVec> antipode_inv;  // S^{-1}(h_i)

    int64_t pair(int a, int b) const { return static_cast<int64_t>(a) * dim + b; }

    // ---- linear extensions ----
    SparseVec product(const SparseVec& x, const SparseVec& y) const {
        SparseVec r;
        for (auto& [i, ci] : x.terms())
            for (auto& [j, cj] : y.terms()) r.add(mul[i][j], ci * cj);
        return r;
    }
    Cyc counit_of(const SparseVec& x) const {
        Cyc c;
        for (auto& [i, ci] : x.terms()) c += ci * counit[i];
        return c;
    }
    SparseVec apply_S(const SparseVec& x) const {
        SparseVec r;
        for (auto& [i, ci] : x.terms()) r.add(antipode[i], ci);
        return r;
    }
    SparseVec apply_S_inv(const SparseVec& x) const {
        SparseVec r;
        for (auto& [i, ci] : x.terms()) r.add(antipode_inv[i], ci);
        return r;
    }

    /// n-fold iterated coproduct of an element, as a sparse vector over the
    /// fused (n+1)-factor index (left-associated bracketing; coassociativity
    /// makes the bracketing immaterial, which the tests assert).
    SparseVec sweedler(const SparseVec& x, int n) const {
        if (n < 0) throw std::invalid_argument("sweedler: n >= 0 required");
        SparseVec cur = x;  // over fused k-factor index, k = 1 initially
        int64_t stride = 1;
        for (int step = 0; step < n; ++step) {
            // expand the leftmost factor: fused index = leading * stride' ...
            // we keep indices fused as i_1 * dim^k-1 + ... ; expand i_1.
            SparseVec next;
            for (auto& [idx, c] : cur.terms()) {
                int64_t lead = idx / stride;
                int64_t rest = idx % stride;
                for (auto& [pq, c2] : comul[static_cast<int>(lead)].terms())
                    next.add(pq * stride + rest, c * c2);
            }
            cur = std::move(next);
            stride *= dim;
        }
        return cur;
    }

    /// Triple Sweedler components of a basis element: list of (a, b, c, coeff)
    /// with Delta^2(h_i) = sum coeff * h_a (x) h_b (x) h_c.
    struct Triple {
        int a, b, c;
        Cyc coeff;
    };
    const std::vector<Triple>& sweedler2(int i) const {
        if (sw2_.empty()) {
            sw2_.resize(dim);
            for (int k = 0; k < dim; ++k) {
                SparseVec d2 = sweedler(SparseVec::basis(k), 2);
                for (auto& [idx, c] : d2.terms()) {
                    int cc = static_cast<int>(idx % dim);
                    int bb = static_cast<int>((idx / dim) % dim);
                    int aa = static_cast<int>(idx / (static_cast<int64_t>(dim) * dim));
                    sw2_[k].push_back({aa, bb, cc, c});
                }
            }
        }
        return sw2_[i];
    }

    /// Convolution product in the dual: f_i f_j = sum_k <f_i (x) f_j, Delta h_k> f_k.
    SparseVec dual_product(int i, int j) const {
        build_dual_mul();
        auto it = dual_mul_.find(pair(i, j));
        return it == dual_mul_.end() ? SparseVec() : it->second;
    }
    SparseVec dual_product(const SparseVec& x, const SparseVec& y) const {
        SparseVec r;
        for (auto& [i, ci] : x.terms())
            for (auto& [j, cj] : y.terms())
                r.add(dual_product(static_cast<int>(i), static_cast<int>(j)), ci * cj);
        return r;
    }
    /// Unit of the dual algebra (the counit as a functional).
    SparseVec dual_unit() const {
        SparseVec r;
        for (int k = 0; k < dim; ++k) r.add(k, counit[k]);
        return r;
    }
    /// f |-> f o S^{-1} and f |-> f o S on dual basis elements.
    SparseVec dual_antipode(int i) const {
        SparseVec r;
        for (int k = 0; k < dim; ++k) r.add(k, antipode_inv[k].at(i));
        return r;
    }
    SparseVec dual_precompose_S(int i) const {
        SparseVec r;
        for (int k = 0; k < dim; ++k) r.add(k, antipode[k].at(i));
        return r;
    }

    /// row[k] = h_l h_k h_r, memoized per (l, r); the straightening hot path.
    const std::vector<SparseVec>& sandwich_row(int l, int r) const {
        int64_t key = pair(l, r);
        auto it = sandwich_.find(key);
        if (it == sandwich_.end()) {
            std::vector<SparseVec> row(dim);
            for (int k = 0; k < dim; ++k)
                row[k] = product(mul[l][k], basis_cache(r));
            it = sandwich_.emplace(key, std::move(row)).first;
        }
        return it->second;
    }

    /// The functional y |-> f_i(L y R) expanded in the dual basis.
    SparseVec dual_sandwich(int i, const SparseVec& L, const SparseVec& R) const {
        SparseVec r;
        if (L.size() == 1 && R.size() == 1 && L.terms().begin()->second.is_one() &&
            R.terms().begin()->second.is_one()) {
            const auto& row = sandwich_row(static_cast<int>(L.terms().begin()->first),
                                           static_cast<int>(R.terms().begin()->first));
            for (int k = 0; k < dim; ++k) r.add(k, row[k].at(i));
            return r;
        }
        for (int k = 0; k < dim; ++k) {
            Cyc c = product(product(L, basis_cache(k)), R).at(i);
            r.add(k, c);
        }
        return r;
    }

    const SparseVec& basis_cache(int k) const {
        if (basis_.empty()) {
            basis_.resize(dim);
            for (int i = 0; i < dim; ++i) basis_[i] = SparseVec::basis(i);
        }
        return basis_[k];
    }

private:
    mutable std::vector<std::vector<Triple>> sw2_;
    mutable std::map<int64_t, SparseVec> dual_mul_;
    mutable std::vector<SparseVec> basis_;
    mutable std::map<int64_t, std::vector<SparseVec>> sandwich_;

    void build_dual_mul() const {
        if (!dual_mul_.empty()) return;
        for (int k = 0; k < dim; ++k)
            for (auto& [pq, c] : comul[k].terms()) {
                int a = static_cast<int>(pq / dim), b = static_cast<int>(pq % dim);
                dual_mul_[pair(a, b)].add(k, c);
            }
    }
};

/// Quasi-triangular / ribbon data attached to a HopfData.
struct RibbonData {
    SparseVec rmatrix;  // R = sum s_a (x) t_a over fused pair index
    SparseVec pivotal;  // v, grouplike with S^2 = Ad v
    SparseVec ribbon;   // u, central, S(u)=u, eps(u)=1, Delta(u)=(R21 R)^{-1}(u(x)u)
};

// ---------------------------------------------------------------------------
// tensor-square helpers (elements of H (x) H with fused index)
// ---------------------------------------------------------------------------

inline SparseVec tensor2_product(const HopfData& H, const SparseVec& x, const SparseVec& y) {
    SparseVec r;
    for (auto& [ij, c] : x.terms()) {
        int i = static_cast<int>(ij / H.dim), j = static_cast<int>(ij % H.dim);
        for (auto& [kl, d] : y.terms()) {
            int k = static_cast<int>(kl / H.dim), l = static_cast<int>(kl % H.dim);
            SparseVec p1 = H.mul[i][k];
            const SparseVec& p2 = H.mul[j][l];
            Cyc cd = c * d;
            for (auto& [a, ca] : p1.terms())
                for (auto& [b, cb] : p2.terms()) r.add(a * H.dim + b, cd * ca * cb);
        }
    }
    return r;
}

inline SparseVec tensor2_swap(const HopfData& H, const SparseVec& x) {
    SparseVec r;
    for (auto& [ij, c] : x.terms()) r.add((ij % H.dim) * H.dim + ij / H.dim, c);
    return r;
}

inline SparseVec tensor2_unit(const HopfData& H) {
    SparseVec r;
    for (auto& [i, ci] : H.unit.terms())
        for (auto& [j, cj] : H.unit.terms()) r.add(i * H.dim + j, ci * cj);
    return r;
}

/// (S (x) id) of an element of H (x) H.
inline SparseVec tensor2_S_left(const HopfData& H, const SparseVec& x) {
    SparseVec r;
    for (auto& [ij, c] : x.terms()) {
        int i = static_cast<int>(ij / H.dim), j = static_cast<int>(ij % H.dim);
        for (auto& [k, ck] : H.antipode[i].terms()) r.add(k * H.dim + j, c * ck);
    }
    return r;
}

/// Inverse of (R21 R) for a quasi-triangular R, via R^{-1} = (S (x) id) R.
inline SparseVec monodromy_inverse(const HopfData& H, const SparseVec& R) {
    SparseVec Rinv = tensor2_S_left(H, R);
    return tensor2_product(H, Rinv, tensor2_swap(H, Rinv));
}

// ---------------------------------------------------------------------------
// constructors
// ---------------------------------------------------------------------------

/// Group algebra kk[G]: basis = group elements, Delta(g) = g (x) g,
/// eps(g) = 1, S(g) = g^{-1}.  Ribbon data R = 1 (x) 1, u = v = 1.
inline std::pair<HopfData, RibbonData> group_hopf(const Group& G) {
    HopfData H;
    H.dim = G.n;
    H.name = "kk[" + G.name + "]";
    H.labels = G.labels;
    H.mul.assign(G.n, std::vector<SparseVec>(G.n));
    for (int i = 0; i < G.n; ++i)
        for (int j = 0; j < G.n; ++j) H.mul[i][j] = SparseVec::basis(G.mul[i][j]);
    H.unit = SparseVec::basis(G.e);
    H.comul.resize(G.n);
    H.counit.assign(G.n, Cyc::rational(1));
    H.antipode.resize(G.n);
    H.antipode_inv.resize(G.n);
    for (int g = 0; g < G.n; ++g) {
        H.comul[g] = SparseVec::basis(H.pair(g, g));
        H.antipode[g] = SparseVec::basis(G.inv[g]);
        H.antipode_inv[g] = SparseVec::basis(G.inv[g]);
    }
    RibbonData R;
    R.rmatrix = SparseVec::basis(H.pair(G.e, G.e));
    R.pivotal = SparseVec::basis(G.e);
    R.ribbon = SparseVec::basis(G.e);
    return {std::move(H), std::move(R)};
}

/// Dual Hopf algebra with opposite comultiplication, H^{*,cop}
///   = (H^*, Delta^*, eps, (m^*)^cop, 1, - o S^{-1}),
/// on the dual basis.
inline HopfData dual_hopf(const HopfData& H) {
    HopfData D;
    D.dim = H.dim;
    D.name = H.name + "^{*,cop}";
    D.labels.resize(H.dim);
    for (int i = 0; i < H.dim; ++i) D.labels[i] = "d(" + H.labels[i] + ")";
    // multiplication = convolution
    D.mul.assign(H.dim, std::vector<SparseVec>(H.dim));
    for (int i = 0; i < H.dim; ++i)
        for (int j = 0; j < H.dim; ++j) D.mul[i][j] = H.dual_product(i, j);
    D.unit = H.dual_unit();
    // comultiplication (m^*)^cop: Delta(f_k) = sum <f_k, h_i h_j> f_j (x) f_i
    D.comul.assign(H.dim, SparseVec());
    for (int i = 0; i < H.dim; ++i)
        for (int j = 0; j < H.dim; ++j)
            for (auto& [k, c] : H.mul[i][j].terms()) D.comul[k].add(D.pair(j, i), c);
    // counit f |-> f(1)
    D.counit.resize(H.dim);
    for (int k = 0; k < H.dim; ++k) D.counit[k] = H.unit.at(k);
    // antipode f |-> f o S^{-1}
    D.antipode.resize(H.dim);
    D.antipode_inv.resize(H.dim);
    for (int k = 0; k < H.dim; ++k) {
        D.antipode[k] = H.dual_antipode(k);
        D.antipode_inv[k] = H.dual_precompose_S(k);
    }
    return D;
}

// ---------------------------------------------------------------------------
// axiom checkers (report style)
// ---------------------------------------------------------------------------

inline std::vector<std::string> check_hopf(const HopfData& H) {
    std::vector<std::string> bad;
    auto basis = [&](int i) { return SparseVec::basis(i); };
    // associativity and unit
    for (int a = 0; a < H.dim && bad.size() < 8; ++a) {
        if (H.product(H.unit, basis(a)) != basis(a) || H.product(basis(a), H.unit) != basis(a))
            bad.push_back("unit fails at " + H.labels[a]);
        for (int b = 0; b < H.dim; ++b)
            for (int c = 0; c < H.dim; ++c) {
                if (H.product(H.mul[a][b], basis(c)) != H.product(basis(a), H.mul[b][c])) {
                    bad.push_back("associativity fails at (" + H.labels[a] + "," + H.labels[b] +
                                  "," + H.labels[c] + ")");
                    goto assoc_done;
                }
            }
    }
assoc_done:
    // coassociativity and counit
    for (int a = 0; a < H.dim && bad.size() < 8; ++a) {
        SparseVec l, r, cl, cr;
        for (auto& [pq, c] : H.comul[a].terms()) {
            int p = static_cast<int>(pq / H.dim), q = static_cast<int>(pq % H.dim);
            for (auto& [uv, c2] : H.comul[p].terms()) l.add(uv * H.dim + q, c * c2);
            for (auto& [uv, c2] : H.comul[q].terms())
                r.add(static_cast<int64_t>(p) * H.dim * H.dim + uv, c * c2);
            cl.add(q, c * H.counit[p]);
            cr.add(p, c * H.counit[q]);
        }
        if (l != r) bad.push_back("coassociativity fails at " + H.labels[a]);
        if (cl != SparseVec::basis(a) || cr != SparseVec::basis(a))
            bad.push_back("counit fails at " + H.labels[a]);
    }
    // bialgebra: Delta multiplicative, Delta(1) = 1 (x) 1, eps multiplicative
    {
        SparseVec d1;
        for (auto& [i, ci] : H.unit.terms()) d1.add(H.comul[i], ci);
        if (d1 != tensor2_unit(H)) bad.push_back("Delta(1) != 1(x)1");
    }
    for (int a = 0; a < H.dim && bad.size() < 8; ++a)
        for (int b = 0; b < H.dim; ++b) {
            SparseVec lhs;
            for (auto& [k, c] : H.mul[a][b].terms()) lhs.add(H.comul[k], c);
            SparseVec rhs = tensor2_product(H, H.comul[a], H.comul[b]);
            if (lhs != rhs) {
                bad.push_back("Delta not multiplicative at (" + H.labels[a] + "," + H.labels[b] +
                              ")");
                goto bialg_done;
            }
            Cyc el = H.counit_of(H.mul[a][b]);
            if (el != H.counit[a] * H.counit[b]) {
                bad.push_back("eps not multiplicative at (" + H.labels[a] + "," + H.labels[b] +
                              ")");
                goto bialg_done;
            }
        }
bialg_done:
    // antipode axiom m(S (x) id)Delta = unit . eps = m(id (x) S)Delta
    for (int a = 0; a < H.dim && bad.size() < 8; ++a) {
        SparseVec l, r;
        for (auto& [pq, c] : H.comul[a].terms()) {
            int p = static_cast<int>(pq / H.dim), q = static_cast<int>(pq % H.dim);
            l.add(H.product(H.antipode[p], H.basis_cache(q)), c);
            r.add(H.product(H.basis_cache(p), H.antipode[q]), c);
        }
        SparseVec want;
        want.add(H.unit, H.counit[a]);
        if (l != want) bad.push_back("antipode (S(x)id) fails at " + H.labels[a]);
        if (r != want) bad.push_back("antipode (id(x)S) fails at " + H.labels[a]);
    }
    // S^{-1} really inverts S
    for (int a = 0; a < H.dim && bad.size() < 8; ++a) {
        if (H.apply_S_inv(H.antipode[a]) != SparseVec::basis(a))
            bad.push_back("S^{-1} o S != id at " + H.labels[a]);
    }
    return bad;
}

/// Quasi-triangular + ribbon + pivotal axioms.
inline std::vector<std::string> check_ribbon(const HopfData& H, const RibbonData& R) {
    std::vector<std::string> bad;
    const int d = H.dim;
    auto fuse3 = [&](int64_t a, int64_t b, int64_t c) {
        return (a * d + b) * d + c;
    };
    // (Delta (x) id) R = R13 R23 ; (id (x) Delta) R = R13 R12
    SparseVec dl, dr, r13, r23, r12;
    for (auto& [st, c] : R.rmatrix.terms()) {
        int s = static_cast<int>(st / d), t = static_cast<int>(st % d);
        for (auto& [pq, c2] : H.comul[s].terms())
            dl.add(pq * d + t, c * c2);
        for (auto& [pq, c2] : H.comul[t].terms())
            dr.add(fuse3(s, pq / d, pq % d), c * c2);
        for (auto& [e, ce] : H.unit.terms()) {
            r13.add(fuse3(s, e, t), c * ce);
            r23.add(fuse3(e, s, t), c * ce);
            r12.add(fuse3(s, t, e), c * ce);
        }
    }
    auto mul3 = [&](const SparseVec& x, const SparseVec& y) {
        SparseVec r;
        for (auto& [i3, c] : x.terms()) {
            int a1 = static_cast<int>(i3 / (static_cast<int64_t>(d) * d));
            int b1 = static_cast<int>((i3 / d) % d);
            int c1 = static_cast<int>(i3 % d);
            for (auto& [j3, c2] : y.terms()) {
                int a2 = static_cast<int>(j3 / (static_cast<int64_t>(d) * d));
                int b2 = static_cast<int>((j3 / d) % d);
                int c2i = static_cast<int>(j3 % d);
                Cyc cc = c * c2;
                for (auto& [x1, cx1] : H.mul[a1][a2].terms())
                    for (auto& [x2, cx2] : H.mul[b1][b2].terms())
                        for (auto& [x3, cx3] : H.mul[c1][c2i].terms())
                            r.add(fuse3(x1, x2, x3), cc * cx1 * cx2 * cx3);
            }
        }
        return r;
    };
    if (dl != mul3(r13, r23)) bad.push_back("QT: (Delta(x)id)R != R13 R23");
    if (dr != mul3(r13, r12)) bad.push_back("QT: (id(x)Delta)R != R13 R12");
    // R Delta(h) = Delta^op(h) R for all basis h
    for (int h = 0; h < d && bad.size() < 8; ++h) {
        SparseVec lhs = tensor2_product(H, R.rmatrix, H.comul[h]);
        SparseVec rhs = tensor2_product(H, tensor2_swap(H, H.comul[h]), R.rmatrix);
        if (lhs != rhs) bad.push_back("QT: R Delta != Delta^op R at " + H.labels[h]);
    }
    // R invertible with inverse (S (x) id) R
    if (tensor2_product(H, R.rmatrix, tensor2_S_left(H, R.rmatrix)) != tensor2_unit(H))
        bad.push_back("QT: (S(x)id)R is not inverse to R");
    // pivotal: v grouplike, S^2 = Ad v
    {
        SparseVec dv;
        for (auto& [i, ci] : R.pivotal.terms()) dv.add(H.comul[i], ci);
        SparseVec vv;
        for (auto& [i, ci] : R.pivotal.terms())
            for (auto& [j, cj] : R.pivotal.terms()) vv.add(H.pair(static_cast<int>(i), static_cast<int>(j)), ci * cj);
        if (dv != vv) bad.push_back("pivotal: v not grouplike");
        for (int h = 0; h < d; ++h) {
            SparseVec s2 = H.apply_S(H.apply_S(H.basis_cache(h)));
            SparseVec vx = H.product(R.pivotal, H.basis_cache(h));
            // S^2(h) v = v h
            if (H.product(s2, R.pivotal) != vx) {
                bad.push_back("pivotal: S^2 != Ad v at " + H.labels[h]);
                break;
            }
        }
    }
    // ribbon: u central, S(u) = u, eps(u) = 1, Delta(u) = (R21 R)^{-1} (u (x) u)
    for (int h = 0; h < d; ++h) {
        if (H.product(R.ribbon, H.basis_cache(h)) != H.product(H.basis_cache(h), R.ribbon)) {
            bad.push_back("ribbon: u not central at " + H.labels[h]);
            break;
        }
    }
    if (H.apply_S(R.ribbon) != R.ribbon) bad.push_back("ribbon: S(u) != u");
    if (H.counit_of(R.ribbon) != Cyc::rational(1)) bad.push_back("ribbon: eps(u) != 1");
    {
        SparseVec du;
        for (auto& [i, ci] : R.ribbon.terms()) du.add(H.comul[i], ci);
        SparseVec inv = monodromy_inverse(H, R.rmatrix);
        SparseVec uu;
        for (auto& [i, ci] : R.ribbon.terms())
            for (auto& [j, cj] : R.ribbon.terms())
                uu.add(H.pair(static_cast<int>(i), static_cast<int>(j)), ci * cj);
        if (tensor2_product(H, inv, uu) != du)
            bad.push_back("ribbon: Delta(u) != (R21 R)^{-1} (u(x)u)");
    }
    return bad;
}

/// Cocommutativity test, Delta = tau Delta.
inline bool is_cocommutative(const HopfData& H) {
    for (int i = 0; i < H.dim; ++i)
        if (tensor2_swap(H, H.comul[i]) != H.comul[i]) return false;
    return true;
}

}  // namespace edl
