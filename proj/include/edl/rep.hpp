/**
 * rep.hpp -- finite-dimensional modules over the Hopf algebras and doubles.
 *
 * A RepModule stores one action matrix per basis element of its algebra; an
 * ElModule stores per-factor generator actions (H-basis, first dual copy,
 * second dual copy) for modules over an elliptic double.  Hom spaces are
 * exact linear solves; simple catalogs for group(-double) cases are built
 * constructively from conjugation orbits and centralizer irreducibles,
 * while irreducibles of plain group algebras are obtained by splitting the
 * regular module with eigenprojector-seeded cyclic submodules (all
 * eigenvalues involved are roots of unity of known order, so everything
 * stays exact; no factorization is ever performed).
 *
 * Modules keep non-owning pointers to their algebras; the caller keeps the
 * algebra alive (all of this is workbench-scope data).
 */
#pragma once

#include <random>

#include "edl/doubles.hpp"
#include "edl/matrix.hpp"

namespace edl {

struct FieldTooSmall : std::runtime_error {
    explicit FieldTooSmall(const std::string& w) : std::runtime_error(w) {}
};
struct IncompleteCatalog : std::runtime_error {
    IncompleteCatalog() : std::runtime_error("catalog does not exhaust the module") {}
};
struct NotFree : std::runtime_error {
    NotFree() : std::runtime_error("coset normal form failed") {}
};

// ---------------------------------------------------------------------------
// modules over a HopfData algebra
// ---------------------------------------------------------------------------

struct RepModule {
    const HopfData* alg = nullptr;
    int dim = 0;
    std::vector<Mat> act;  // one matrix per algebra basis element
    std::string label;

    Mat act_of(const SparseVec& x) const {
        Mat m = Mat::zero(dim, dim);
        for (auto& [i, c] : x.terms()) m += c * act[static_cast<size_t>(i)];
        return m;
    }
};

inline RepModule regular_module(const HopfData& A) {
    RepModule M;
    M.alg = &A;
    M.dim = A.dim;
    M.label = "regular(" + A.name + ")";
    M.act.resize(A.dim);
    for (int a = 0; a < A.dim; ++a) {
        Mat m(A.dim, A.dim);
        for (int b = 0; b < A.dim; ++b)
            for (auto& [k, c] : A.mul[a][b].terms()) m(static_cast<int>(k), b) = c;
        M.act[a] = std::move(m);
    }
    return M;
}

inline RepModule trivial_module(const HopfData& A) {
    RepModule M;
    M.alg = &A;
    M.dim = 1;
    M.label = "1";
    M.act.resize(A.dim);
    for (int a = 0; a < A.dim; ++a) {
        Mat m(1, 1);
        m(0, 0) = A.counit[a];
        M.act[a] = std::move(m);
    }
    return M;
}

/// Violations of the defining relations (report style).
inline std::vector<std::string> check_module(const RepModule& M) {
    std::vector<std::string> bad;
    const HopfData& A = *M.alg;
    if (M.act_of(A.unit) != Mat::identity(M.dim)) bad.push_back("unit does not act as identity");
    for (int a = 0; a < A.dim && bad.size() < 6; ++a)
        for (int b = 0; b < A.dim; ++b) {
            if (M.act[a] * M.act[b] != M.act_of(A.mul[a][b])) {
                bad.push_back("action breaks relation at (" + A.labels[a] + "," + A.labels[b] +
                              ")");
                break;
            }
        }
    return bad;
}

inline RepModule direct_sum(const RepModule& X, const RepModule& Y) {
    RepModule M;
    M.alg = X.alg;
    M.dim = X.dim + Y.dim;
    M.label = X.label + "+" + Y.label;
    M.act.resize(X.act.size());
    for (size_t a = 0; a < X.act.size(); ++a) {
        Mat m = Mat::zero(M.dim, M.dim);
        for (int i = 0; i < X.dim; ++i)
            for (int j = 0; j < X.dim; ++j) m(i, j) = X.act[a](i, j);
        for (int i = 0; i < Y.dim; ++i)
            for (int j = 0; j < Y.dim; ++j) m(X.dim + i, X.dim + j) = Y.act[a](i, j);
        M.act[a] = std::move(m);
    }
    return M;
}

/// Tensor product of modules over the same Hopf algebra, through Delta.
inline RepModule tensor_module(const RepModule& X, const RepModule& Y) {
    const HopfData& A = *X.alg;
    RepModule M;
    M.alg = X.alg;
    M.dim = X.dim * Y.dim;
    M.label = X.label + "(x)" + Y.label;
    M.act.resize(A.dim);
    for (int a = 0; a < A.dim; ++a) {
        Mat m = Mat::zero(M.dim, M.dim);
        for (auto& [pq, c] : A.comul[a].terms()) {
            int p = static_cast<int>(pq / A.dim), q = static_cast<int>(pq % A.dim);
            m += c * kron(X.act[p], Y.act[q]);
        }
        M.act[a] = std::move(m);
    }
    return M;
}

/// Left dual module, rho_{X*}(h) = rho_X(S h)^T.
inline RepModule dual_module(const RepModule& X) {
    const HopfData& A = *X.alg;
    RepModule M;
    M.alg = X.alg;
    M.dim = X.dim;
    M.label = X.label + "*";
    M.act.resize(A.dim);
    for (int a = 0; a < A.dim; ++a) M.act[a] = X.act_of(A.antipode[a]).transpose();
    return M;
}

// ---------------------------------------------------------------------------
// hom spaces
// ---------------------------------------------------------------------------

/// Basis of { f : f rho_M(g) = rho_N(g) f } for the listed generator pairs.
inline std::vector<Mat> intertwiners(int dimM, int dimN,
                                     const std::vector<std::pair<const Mat*, const Mat*>>& gens) {
    // unknowns: f (dimN x dimM), row-major flattening
    int nvar = dimN * dimM;
    std::vector<std::vector<Cyc>> rows;
    for (auto& [am, an] : gens) {
        const Mat& AM = *am;
        const Mat& AN = *an;
        // constraint: f AM - AN f = 0, entry (i, j)
        for (int i = 0; i < dimN; ++i)
            for (int j = 0; j < dimM; ++j) {
                std::vector<Cyc> row(nvar);
                for (int k = 0; k < dimM; ++k) row[i * dimM + k] += AM(k, j);
                for (int k = 0; k < dimN; ++k) row[k * dimM + j] -= AN(i, k);
                rows.push_back(std::move(row));
            }
    }
    Mat sys(static_cast<int>(rows.size()), nvar);
    for (size_t r = 0; r < rows.size(); ++r)
        for (int c = 0; c < nvar; ++c) sys(static_cast<int>(r), c) = rows[r][c];
    SolveResult s = mat_solve(sys, Mat::zero(sys.rows(), 1));
    std::vector<Mat> basis;
    for (int col = 0; col < s.nullspace.cols(); ++col) {
        Mat f(dimN, dimM);
        for (int i = 0; i < dimN; ++i)
            for (int j = 0; j < dimM; ++j) f(i, j) = s.nullspace(i * dimM + j, col);
        basis.push_back(std::move(f));
    }
    return basis;
}

inline std::vector<Mat> hom_space(const RepModule& M, const RepModule& N) {
    // the same algebra may live in several content-identical copies
    if (M.act.size() != N.act.size()) throw ShapeMismatch("hom_space: different algebras");
    std::vector<std::pair<const Mat*, const Mat*>> gens;
    for (size_t a = 0; a < M.act.size(); ++a) gens.push_back({&M.act[a], &N.act[a]});
    return intertwiners(M.dim, N.dim, gens);
}

inline bool modules_isomorphic(const RepModule& M, const RepModule& N, Mat* iso = nullptr) {
    if (M.dim != N.dim) return false;
    std::vector<Mat> homs = hom_space(M, N);
    if (homs.empty()) return false;
    // search small combinations for an invertible element
    std::mt19937_64 rng(2718281828ull);
    std::uniform_int_distribution<int> d(-3, 3);
    for (int t = 0; t < 64; ++t) {
        Mat f = Mat::zero(N.dim, M.dim);
        for (size_t r = 0; r < homs.size(); ++r) {
            long c = (t == 0) ? (r == 0 ? 1 : 0) : d(rng);
            if (c != 0) f += Cyc::rational(c) * homs[r];
        }
        if (auto inv = mat_inverse(f)) {
            if (iso) *iso = f;
            return true;
        }
    }
    return false;
}

// ---------------------------------------------------------------------------
// modules over an elliptic double
// ---------------------------------------------------------------------------

struct ElModule {
    const EllipticDouble* alg = nullptr;
    int dim = 0;
    std::vector<Mat> act_h;  // per H-basis element
    std::vector<Mat> act1;   // per dual-basis element, copy 1
    std::vector<Mat> act2;   // copy 2
    std::string label;

    Mat act_h_of(const SparseVec& x) const {
        Mat m = Mat::zero(dim, dim);
        for (auto& [i, c] : x.terms()) m += c * act_h[static_cast<size_t>(i)];
        return m;
    }
    Mat act1_of(const SparseVec& f) const {
        Mat m = Mat::zero(dim, dim);
        for (auto& [i, c] : f.terms()) m += c * act1[static_cast<size_t>(i)];
        return m;
    }
    Mat act2_of(const SparseVec& f) const {
        Mat m = Mat::zero(dim, dim);
        for (auto& [i, c] : f.terms()) m += c * act2[static_cast<size_t>(i)];
        return m;
    }
    /// Action of a normal-form word h f1 f2.
    Mat act_word(int64_t w) const {
        int h, p, q;
        alg->wsplit(w, h, p, q);
        return act_h[h] * (act1[p] * act2[q]);
    }
    Mat act_of(const SparseVec& x) const {
        Mat m = Mat::zero(dim, dim);
        for (auto& [w, c] : x.terms()) m += c * act_word(w);
        return m;
    }
};

/// Full relation check: both copies are D(H)-actions and the cross relation
/// holds; empty list means the data is a Del(H)-module.
inline std::vector<std::string> check_module(const ElModule& M) {
    std::vector<std::string> bad;
    const EllipticDouble& E = *M.alg;
    const HopfData& H = E.H;
    const int n = H.dim;
    if (M.act_h_of(H.unit) != Mat::identity(M.dim)) bad.push_back("H unit fails");
    if (M.act1_of(E.Hstar.unit) != Mat::identity(M.dim)) bad.push_back("dual unit (copy 1) fails");
    if (M.act2_of(E.Hstar.unit) != Mat::identity(M.dim)) bad.push_back("dual unit (copy 2) fails");
    for (int a = 0; a < n && bad.empty(); ++a)
        for (int b = 0; b < n && bad.empty(); ++b) {
            if (M.act_h[a] * M.act_h[b] != M.act_h_of(H.mul[a][b]))
                bad.push_back("H relation fails at (" + H.labels[a] + "," + H.labels[b] + ")");
            if (M.act1[a] * M.act1[b] != M.act1_of(E.Hstar.mul[a][b]))
                bad.push_back("dual algebra (copy 1) fails at (" + std::to_string(a) + "," +
                              std::to_string(b) + ")");
            if (M.act2[a] * M.act2[b] != M.act2_of(E.Hstar.mul[a][b]))
                bad.push_back("dual algebra (copy 2) fails at (" + std::to_string(a) + "," +
                              std::to_string(b) + ")");
        }
    // f h straightening for both copies
    for (int f = 0; f < n && bad.size() < 4; ++f)
        for (int h = 0; h < n; ++h) {
            Mat want1 = Mat::zero(M.dim, M.dim), want2 = Mat::zero(M.dim, M.dim);
            for (auto& [hf, c] : E.fh(f, h).terms()) {
                int hp = static_cast<int>(hf / n), fp = static_cast<int>(hf % n);
                want1 += c * (M.act_h[hp] * M.act1[fp]);
                want2 += c * (M.act_h[hp] * M.act2[fp]);
            }
            if (M.act1[f] * M.act_h[h] != want1) {
                bad.push_back("cross relation (copy 1 vs H) fails at (f" + std::to_string(f) +
                              "," + H.labels[h] + ")");
                break;
            }
            if (M.act2[f] * M.act_h[h] != want2) {
                bad.push_back("cross relation (copy 2 vs H) fails at (f" + std::to_string(f) +
                              "," + H.labels[h] + ")");
                break;
            }
        }
    // exchange relation between the two dual copies
    for (int q = 0; q < n && bad.size() < 4; ++q)
        for (int p = 0; p < n; ++p) {
            Mat want = Mat::zero(M.dim, M.dim);
            for (auto& [pq, c] : E.cross(q, p).terms())
                want += c * (M.act1[static_cast<int>(pq / n)] * M.act2[static_cast<int>(pq % n)]);
            if (M.act2[q] * M.act1[p] != want) {
                bad.push_back("dual exchange relation fails at (f2_" + std::to_string(q) +
                              ", f1_" + std::to_string(p) + ")");
                break;
            }
        }
    return bad;
}

inline std::vector<Mat> hom_space(const ElModule& M, const ElModule& N) {
    if (M.act_h.size() != N.act_h.size()) throw ShapeMismatch("hom_space: different algebras");
    std::vector<std::pair<const Mat*, const Mat*>> gens;
    for (size_t a = 0; a < M.act_h.size(); ++a) gens.push_back({&M.act_h[a], &N.act_h[a]});
    for (size_t a = 0; a < M.act1.size(); ++a) gens.push_back({&M.act1[a], &N.act1[a]});
    for (size_t a = 0; a < M.act2.size(); ++a) gens.push_back({&M.act2[a], &N.act2[a]});
    return intertwiners(M.dim, N.dim, gens);
}

inline ElModule direct_sum(const ElModule& X, const ElModule& Y) {
    ElModule M;
    M.alg = X.alg;
    M.dim = X.dim + Y.dim;
    M.label = X.label + "+" + Y.label;
    auto block = [&](const Mat& a, const Mat& b) {
        Mat m = Mat::zero(M.dim, M.dim);
        for (int i = 0; i < a.rows(); ++i)
            for (int j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < b.cols(); ++j) m(X.dim + i, X.dim + j) = b(i, j);
        return m;
    };
    for (size_t a = 0; a < X.act_h.size(); ++a) M.act_h.push_back(block(X.act_h[a], Y.act_h[a]));
    for (size_t a = 0; a < X.act1.size(); ++a) M.act1.push_back(block(X.act1[a], Y.act1[a]));
    for (size_t a = 0; a < X.act2.size(); ++a) M.act2.push_back(block(X.act2[a], Y.act2[a]));
    return M;
}

inline bool modules_isomorphic(const ElModule& M, const ElModule& N, Mat* iso = nullptr) {
    if (M.dim != N.dim) return false;
    std::vector<Mat> homs = hom_space(M, N);
    if (homs.empty()) return false;
    std::mt19937_64 rng(314159ull);
    std::uniform_int_distribution<int> d(-3, 3);
    for (int t = 0; t < 64; ++t) {
        Mat f = Mat::zero(N.dim, M.dim);
        for (size_t r = 0; r < homs.size(); ++r) {
            long c = (t == 0) ? (r == 0 ? 1 : 0) : d(rng);
            if (c != 0) f += Cyc::rational(c) * homs[r];
        }
        if (auto inv = mat_inverse(f)) {
            if (iso) *iso = f;
            return true;
        }
    }
    return false;
}

// ---------------------------------------------------------------------------
// splitting the regular module of a group algebra
// ---------------------------------------------------------------------------

namespace detail {

/// Column-span basis of a set of vectors, as an inclusion matrix.
inline Mat span_basis(const std::vector<std::vector<Cyc>>& vecs, int dim) {
    Mat m(dim, static_cast<int>(vecs.size()));
    for (size_t j = 0; j < vecs.size(); ++j)
        for (int i = 0; i < dim; ++i) m(i, static_cast<int>(j)) = vecs[j][i];
    Mat ech = m.transpose();
    std::vector<int> piv = ech.echelonize();
    Mat out(dim, static_cast<int>(piv.size()));
    int r = 0;
    // rows of ech with pivots form the reduced basis
    for (size_t k = 0; k < piv.size(); ++k) {
        for (int i = 0; i < dim; ++i) out(i, static_cast<int>(k)) = ech(static_cast<int>(k), i);
        ++r;
    }
    return out;
}

/// Smallest submodule containing v (span of the algebra orbit).
inline Mat cyclic_span(const RepModule& M, const std::vector<Cyc>& v) {
    std::vector<std::vector<Cyc>> vecs;
    for (size_t a = 0; a < M.act.size(); ++a) {
        std::vector<Cyc> w(M.dim);
        for (int i = 0; i < M.dim; ++i) {
            Cyc s;
            for (int j = 0; j < M.dim; ++j) s += M.act[a](i, j) * v[j];
            w[i] = s;
        }
        vecs.push_back(std::move(w));
    }
    return span_basis(vecs, M.dim);
}

/// Left inverse of a full-column-rank matrix, via pivot-row selection
/// (Gram-matrix tricks are unsound over cyclotomics, where x^T x may vanish).
inline Mat left_inverse(const Mat& incl) {
    Mat et = incl.transpose();
    Mat ech = et;
    std::vector<int> pivot_rows = ech.echelonize();  // pivot columns of incl^T = rows of incl
    if (static_cast<int>(pivot_rows.size()) != incl.cols())
        throw std::logic_error("left_inverse: not full column rank");
    Mat B(incl.cols(), incl.cols());
    for (int k = 0; k < incl.cols(); ++k)
        for (int c = 0; c < incl.cols(); ++c) B(k, c) = incl(pivot_rows[k], c);
    auto binv = mat_inverse(B);
    if (!binv) throw std::logic_error("left_inverse: pivot block singular");
    Mat out(incl.cols(), incl.rows());
    for (int i = 0; i < incl.cols(); ++i)
        for (int k = 0; k < incl.cols(); ++k) out(i, pivot_rows[k]) = (*binv)(i, k);
    return out;
}

/// Submodule carried by an inclusion matrix (columns spanning a stable
/// subspace); solves incl * X = act * incl per generator.
inline RepModule restrict_to(const RepModule& M, const Mat& incl, Mat* proj_out = nullptr) {
    RepModule S;
    S.alg = M.alg;
    S.dim = incl.cols();
    S.label = M.label + "|sub";
    S.act.resize(M.act.size());
    for (size_t a = 0; a < M.act.size(); ++a) {
        SolveResult s = mat_solve(incl, M.act[a] * incl);
        if (!s.consistent) throw std::logic_error("restrict_to: subspace not stable");
        S.act[a] = s.particular;
    }
    if (proj_out) *proj_out = left_inverse(incl);
    return S;
}

}  // namespace detail

/// Haar-averaged equivariant projector with the same image as pi.
inline Mat equivariant_projector(const RepModule& M, const Mat& pi, const SparseVec& haar) {
    const HopfData& A = *M.alg;
    Mat out = Mat::zero(M.dim, M.dim);
    for (auto& [l, cl] : haar.terms()) {
        for (auto& [pq, c] : A.comul[l].terms()) {
            int p = static_cast<int>(pq / A.dim), q = static_cast<int>(pq % A.dim);
            out += (cl * c) * (M.act[p] * pi * M.act_of(A.antipode[q]));
        }
    }
    return out;
}

/// All irreducible summands of M (with multiplicity collapsed); exact.
inline std::vector<RepModule> split_into_simples(const RepModule& M0, const SparseVec& haar,
                                                 int zeta_order) {
    const HopfData& A = *M0.alg;
    std::vector<RepModule> simples;
    std::vector<RepModule> queue{M0};
    auto record = [&](const RepModule& S) {
        for (auto& X : simples)
            if (X.dim == S.dim && !hom_space(X, S).empty()) return;
        simples.push_back(S);
    };
    while (!queue.empty()) {
        RepModule M = queue.back();
        queue.pop_back();
        if (M.dim == 0) continue;
        if (hom_space(M, M).size() == 1) {
            record(M);
            continue;
        }
        // find a proper submodule via eigenprojector-seeded cyclic spans
        Mat best;
        bool found = false;
        for (int a = 0; a < A.dim && !found; ++a) {
            // act[a] must have finite multiplicative order for exact
            // eigenprojectors; group-like basis elements do.
            Mat p = M.act[a];
            Mat pk = p;
            int ord = 1;
            bool finite = true;
            while (pk != Mat::identity(M.dim)) {
                pk = pk * p;
                ++ord;
                if (ord > zeta_order) {
                    finite = false;
                    break;
                }
            }
            if (!finite || ord == 1 || zeta_order % ord != 0) continue;
            for (int k = 0; k < ord && !found; ++k) {
                Mat proj = Mat::zero(M.dim, M.dim);
                Mat power = Mat::identity(M.dim);
                for (int m = 0; m < ord; ++m) {
                    Cyc w = Cyc::zeta(zeta_order, -static_cast<long>(k) * m * (zeta_order / ord));
                    proj += (Cyc::rational(1, ord) * w) * power;
                    power = power * p;
                }
                if (proj.is_zero()) continue;
                for (int col = 0; col < M.dim && !found; ++col) {
                    std::vector<Cyc> v(M.dim);
                    bool nz = false;
                    for (int i = 0; i < M.dim; ++i) {
                        v[i] = proj(i, col);
                        nz |= !v[i].is_zero();
                    }
                    if (!nz) continue;
                    Mat W = detail::cyclic_span(M, v);
                    if (W.cols() > 0 && W.cols() < M.dim) {
                        best = W;
                        found = true;
                    }
                }
            }
        }
        if (!found)
            throw FieldTooSmall("cannot split a non-simple module over Q(zeta_" +
                                std::to_string(zeta_order) + ")");
        // equivariant complement via Haar averaging
        Mat proj0;
        RepModule W = detail::restrict_to(M, best, &proj0);
        Mat pi = best * proj0;  // linear projector onto the submodule
        Mat pibar = equivariant_projector(M, pi, haar);
        if (pibar * pibar != pibar) throw std::logic_error("averaged projector not idempotent");
        auto [i1, p1] = mat_image_split(pibar);
        auto [i2, p2] = mat_image_split(Mat::identity(M.dim) - pibar);
        queue.push_back(detail::restrict_to(M, i1));
        queue.push_back(detail::restrict_to(M, i2));
    }
    return simples;
}

// ---------------------------------------------------------------------------
// simple catalogs
// ---------------------------------------------------------------------------

struct SimpleCatalog {
    std::vector<RepModule> simples;
    std::vector<int> dual_of;  // index of the simple isomorphic to X_j^*
    long global_dim = 0;       // sum of squared dimensions

    int find_class(const RepModule& X) const {
        for (size_t j = 0; j < simples.size(); ++j)
            if (simples[j].dim == X.dim && !hom_space(simples[j], X).empty())
                return static_cast<int>(j);
        return -1;
    }
};

inline void finish_catalog(SimpleCatalog& cat) {
    cat.global_dim = 0;
    for (auto& s : cat.simples) cat.global_dim += static_cast<long>(s.dim) * s.dim;
    cat.dual_of.assign(cat.simples.size(), -1);
    for (size_t j = 0; j < cat.simples.size(); ++j) {
        RepModule d = dual_module(cat.simples[j]);
        cat.dual_of[j] = cat.find_class(d);
        if (cat.dual_of[j] < 0) throw IncompleteCatalog();
    }
}

/// Irreducibles of kk[G] over Q(zeta_N), unit object first.
inline SimpleCatalog irreps_group(const Group& G, const HopfData& H, int zeta_order = 12) {
    if (G.n > 48) throw std::invalid_argument("group too large (desk scale is <= 48)");
    SimpleCatalog cat;
    SparseVec haar = haar_integral(H);
    std::vector<RepModule> raw = split_into_simples(regular_module(H), haar, zeta_order);
    // unit object first
    std::sort(raw.begin(), raw.end(), [](const RepModule& a, const RepModule& b) {
        return a.dim < b.dim;
    });
    RepModule triv = trivial_module(H);
    for (auto& s : raw) {
        bool is_triv = s.dim == 1 && !hom_space(s, triv).empty();
        if (is_triv) {
            cat.simples.insert(cat.simples.begin(), s);
        } else {
            cat.simples.push_back(s);
        }
    }
    for (size_t j = 0; j < cat.simples.size(); ++j)
        cat.simples[j].label = "X" + std::to_string(j);
    finish_catalog(cat);
    return cat;
}

/// One simple of D(G) per (conjugacy class, centralizer irreducible), built
/// as the induced equivariant bundle over the class.
inline SimpleCatalog simples_drinfeld_group(const Group& G, const DrinfeldDouble& dd,
                                            int zeta_order = 12) {
    SimpleCatalog cat;
    for (auto& cls : G.conjugacy_classes()) {
        int g0 = cls[0];
        auto [Z, zmap] = G.subgroup(G.centralizer(g0));
        auto [HZ, RZ] = group_hopf(Z);
        SimpleCatalog zcat = irreps_group(Z, HZ, zeta_order);
        // transversal t_x with t_x g0 t_x^{-1} = x
        std::map<int, int> transversal;
        for (int h = 0; h < G.n; ++h) {
            int x = G.conj(h, g0);
            if (!transversal.count(x)) transversal[x] = h;
        }
        std::vector<int> pts(cls.begin(), cls.end());
        auto pt_index = [&](int x) {
            for (size_t i = 0; i < pts.size(); ++i)
                if (pts[i] == x) return static_cast<int>(i);
            return -1;
        };
        std::map<int, int> zindex;  // parent group elt -> index in Z
        for (size_t i = 0; i < zmap.size(); ++i) zindex[zmap[i]] = static_cast<int>(i);
        for (auto& pi : zcat.simples) {
            RepModule V;
            V.alg = &dd.D;
            V.dim = static_cast<int>(pts.size()) * pi.dim;
            V.label = "(" + G.labels[g0] + "-class, " + pi.label + ")";
            V.act.resize(dd.D.dim);
            auto slot = [&](int point, int fib) { return point * pi.dim + fib; };
            for (int h = 0; h < G.n; ++h)
                for (int f = 0; f < G.n; ++f) {
                    Mat m = Mat::zero(V.dim, V.dim);
                    for (size_t xi = 0; xi < pts.size(); ++xi) {
                        int x = pts[static_cast<int>(xi)];
                        if (f >= 0) {
                            // delta_f picks the fiber at f, then h moves x -> h x h^{-1}
                            if (x != f) continue;
                            int y = G.conj(h, x);
                            int yi = pt_index(y);
                            // fiber transport: t_y^{-1} h t_x in Z(g0)
                            int z = G.mul[G.mul[G.inv[transversal[y]]][h]][transversal[x]];
                            const Mat& rz = pi.act[zindex[z]];
                            for (int u = 0; u < pi.dim; ++u)
                                for (int v = 0; v < pi.dim; ++v)
                                    m(slot(yi, u), slot(static_cast<int>(xi), v)) = rz(u, v);
                        }
                    }
                    V.act[dd.idx(h, f)] = std::move(m);
                }
            cat.simples.push_back(std::move(V));
        }
    }
    // unit object first: the trivial D(G)-module sits over the class of e
    RepModule triv = trivial_module(dd.D);
    for (size_t j = 0; j < cat.simples.size(); ++j)
        if (cat.simples[j].dim == 1 && !hom_space(cat.simples[j], triv).empty()) {
            std::swap(cat.simples[0], cat.simples[j]);
            break;
        }
    finish_catalog(cat);
    return cat;
}

struct ElCatalog {
    std::vector<ElModule> simples;
    long global_dim = 0;
};

/// One simple of Del(G) per (diagonal-conjugation orbit on G x G, irreducible
/// of the pairwise stabilizer).
inline ElCatalog simples_elliptic_group(const Group& G, const EllipticDouble& E,
                                        int zeta_order = 12) {
    ElCatalog cat;
    for (auto& orbit : G.diag_conj_orbits()) {
        auto [a0, b0] = orbit[0];
        auto [Z, zmap] = G.subgroup(G.centralizer_pair(a0, b0));
        auto [HZ, RZ] = group_hopf(Z);
        SimpleCatalog zcat = irreps_group(Z, HZ, zeta_order);
        std::map<std::pair<int, int>, int> transversal;
        for (int h = 0; h < G.n; ++h) {
            auto key = std::make_pair(G.conj(h, a0), G.conj(h, b0));
            if (!transversal.count(key)) transversal[key] = h;
        }
        std::map<int, int> zindex;
        for (size_t i = 0; i < zmap.size(); ++i) zindex[zmap[i]] = static_cast<int>(i);
        auto pt_index = [&](std::pair<int, int> p) {
            for (size_t i = 0; i < orbit.size(); ++i)
                if (orbit[i] == p) return static_cast<int>(i);
            return -1;
        };
        for (auto& pi : zcat.simples) {
            ElModule V;
            V.alg = &E;
            V.dim = static_cast<int>(orbit.size()) * pi.dim;
            V.label = "((" + G.labels[a0] + "," + G.labels[b0] + ")-orbit, " + pi.label + ")";
            auto slot = [&](int point, int fib) { return point * pi.dim + fib; };
            V.act_h.resize(G.n);
            V.act1.resize(G.n);
            V.act2.resize(G.n);
            for (int h = 0; h < G.n; ++h) {
                Mat m = Mat::zero(V.dim, V.dim);
                for (size_t xi = 0; xi < orbit.size(); ++xi) {
                    auto [x1, x2] = orbit[xi];
                    auto y = std::make_pair(G.conj(h, x1), G.conj(h, x2));
                    int yi = pt_index(y);
                    int z = G.mul[G.mul[G.inv[transversal[y]]][h]]
                                 [transversal[orbit[xi]]];
                    const Mat& rz = pi.act[zindex[z]];
                    for (int u = 0; u < pi.dim; ++u)
                        for (int v = 0; v < pi.dim; ++v)
                            m(slot(yi, u), slot(static_cast<int>(xi), v)) = rz(u, v);
                }
                V.act_h[h] = std::move(m);
            }
            for (int f = 0; f < G.n; ++f) {
                Mat m1 = Mat::zero(V.dim, V.dim), m2 = Mat::zero(V.dim, V.dim);
                for (size_t xi = 0; xi < orbit.size(); ++xi) {
                    auto [x1, x2] = orbit[xi];
                    for (int u = 0; u < pi.dim; ++u) {
                        if (x1 == f) m1(slot(static_cast<int>(xi), u),
                                        slot(static_cast<int>(xi), u)) = Cyc::rational(1);
                        if (x2 == f) m2(slot(static_cast<int>(xi), u),
                                        slot(static_cast<int>(xi), u)) = Cyc::rational(1);
                    }
                }
                V.act1[f] = std::move(m1);
                V.act2[f] = std::move(m2);
            }
            cat.simples.push_back(std::move(V));
        }
    }
    for (auto& s : cat.simples) cat.global_dim += static_cast<long>(s.dim) * s.dim;
    return cat;
}

// ---------------------------------------------------------------------------
// decomposition against a catalog
// ---------------------------------------------------------------------------

struct Decomposition {
    std::vector<int> multiplicity;  // per catalog simple
    Mat change_of_basis;            // isomorphism  (+) X_j^{m_j} -> M
};

template <class Module>
inline Decomposition decompose_against(const Module& M, const std::vector<Module>& simples) {
    Decomposition dec;
    dec.multiplicity.resize(simples.size());
    std::vector<Mat> blocks;
    long total = 0;
    for (size_t j = 0; j < simples.size(); ++j) {
        std::vector<Mat> homs = hom_space(simples[j], M);
        dec.multiplicity[j] = static_cast<int>(homs.size());
        total += static_cast<long>(homs.size()) * simples[j].dim;
        for (auto& f : homs) blocks.push_back(f);
    }
    if (total < M.dim) throw IncompleteCatalog();
    // assemble block map and verify invertibility
    Mat phi(M.dim, static_cast<int>(total));
    int col = 0;
    for (auto& f : blocks)
        for (int c = 0; c < f.cols(); ++c, ++col)
            for (int r = 0; r < f.rows(); ++r) phi(r, col) = f(r, c);
    if (total != M.dim || !mat_inverse(phi)) throw IncompleteCatalog();
    dec.change_of_basis = std::move(phi);
    return dec;
}

// ---------------------------------------------------------------------------
// induction along the standard embeddings
// ---------------------------------------------------------------------------

/// H-module -> D(H)-module along H -> D(H); coset basis = dual factor.
inline RepModule induce_to_double(const DrinfeldDouble& dd, const RepModule& X) {
    const HopfData& H = dd.base;
    const int n = H.dim;
    StraightenTables st(&H);
    RepModule M;
    M.alg = &dd.D;
    M.dim = n * X.dim;
    M.label = "Ind(" + X.label + ")";
    M.act.resize(dd.D.dim);
    auto slot = [&](int cosetF, int v) { return cosetF * X.dim + v; };
    for (int h = 0; h < n; ++h)
        for (int f = 0; f < n; ++f) {
            Mat m = Mat::zero(M.dim, M.dim);
            for (int j = 0; j < n; ++j) {
                // (h f) . (f_j (x) x) : first f f_j in the dual copy, then pull h left
                SparseVec ff = H.dual_product(f, j);
                for (auto& [c0, cc] : ff.terms()) {
                    for (auto& [fh2, c1] : st.hf(h, static_cast<int>(c0)).terms()) {
                        int fp = static_cast<int>(fh2 / n), hp = static_cast<int>(fh2 % n);
                        const Mat& a = X.act[hp];
                        for (int u = 0; u < X.dim; ++u)
                            for (int v = 0; v < X.dim; ++v)
                                m(slot(fp, u), slot(j, v)) += cc * c1 * a(u, v);
                    }
                }
            }
            M.act[dd.idx(h, f)] = std::move(m);
        }
    return M;
}

/// Restriction of a D(H)-module to H.
inline RepModule restrict_to_base(const DrinfeldDouble& dd, const RepModule& M) {
    RepModule X;
    X.alg = &dd.base;
    X.dim = M.dim;
    X.label = M.label + "|H";
    X.act.resize(dd.base.dim);
    for (int h = 0; h < dd.base.dim; ++h) X.act[h] = M.act_of(dd.embed_h(SparseVec::basis(h)));
    return X;
}

/// D(H)-module -> Del(H)-module along iota2 (coset basis = first dual copy).
/// This is the module realization of the intermediate induction that
/// re-attaches a first braiding.
inline ElModule induce_first(const EllipticDouble& E, const DrinfeldDouble& dd,
                             const RepModule& M) {
    const int n = E.dimH();
    if (M.alg != &dd.D || dd.dimH != n) throw ShapeMismatch("induce_first: algebra mismatch");
    ElModule out;
    out.alg = &E;
    out.dim = n * M.dim;
    out.label = "I1(" + M.label + ")";
    auto slot = [&](int coset, int v) { return coset * M.dim + v; };
    out.act_h.resize(n);
    out.act1.resize(n);
    out.act2.resize(n);
    // cache the actions of embedded generators on M
    std::vector<Mat> mh(n), mf(n);
    for (int a = 0; a < n; ++a) {
        mh[a] = M.act_of(dd.embed_h(SparseVec::basis(a)));
        mf[a] = M.act_of(dd.embed_f(SparseVec::basis(a)));
    }
    for (int h = 0; h < n; ++h) {
        Mat m = Mat::zero(out.dim, out.dim);
        for (int p = 0; p < n; ++p)
            for (auto& [fh2, c] : E.hf(h, p).terms()) {
                int fp = static_cast<int>(fh2 / n), hp = static_cast<int>(fh2 % n);
                const Mat& a = mh[hp];
                for (int u = 0; u < M.dim; ++u)
                    for (int v = 0; v < M.dim; ++v)
                        m(slot(fp, u), slot(p, v)) += c * a(u, v);
            }
        out.act_h[h] = std::move(m);
    }
    for (int f = 0; f < n; ++f) {
        Mat m1 = Mat::zero(out.dim, out.dim), m2 = Mat::zero(out.dim, out.dim);
        for (int p = 0; p < n; ++p) {
            SparseVec ff = E.Hstar.mul[f][p];
            for (auto& [c0, cc] : ff.terms())
                for (int u = 0; u < M.dim; ++u)
                    m1(slot(static_cast<int>(c0), u), slot(p, u)) += cc;
            for (auto& [pq, c] : E.cross(f, p).terms()) {
                int pp = static_cast<int>(pq / n), qq = static_cast<int>(pq % n);
                const Mat& a = mf[qq];
                for (int u = 0; u < M.dim; ++u)
                    for (int v = 0; v < M.dim; ++v)
                        m2(slot(pp, u), slot(p, v)) += c * a(u, v);
            }
        }
        out.act1[f] = std::move(m1);
        out.act2[f] = std::move(m2);
    }
    return out;
}

/// D(H)-module -> Del(H)-module along iota1 (coset basis = second dual copy).
inline ElModule induce_second(const EllipticDouble& E, const DrinfeldDouble& dd,
                              const RepModule& M) {
    const int n = E.dimH();
    if (M.alg != &dd.D || dd.dimH != n) throw ShapeMismatch("induce_second: algebra mismatch");
    ElModule out;
    out.alg = &E;
    out.dim = n * M.dim;
    out.label = "I2(" + M.label + ")";
    auto slot = [&](int coset, int v) { return coset * M.dim + v; };
    out.act_h.resize(n);
    out.act1.resize(n);
    out.act2.resize(n);
    std::vector<Mat> mh(n), mf(n);
    for (int a = 0; a < n; ++a) {
        mh[a] = M.act_of(dd.embed_h(SparseVec::basis(a)));
        mf[a] = M.act_of(dd.embed_f(SparseVec::basis(a)));
    }
    for (int h = 0; h < n; ++h) {
        Mat m = Mat::zero(out.dim, out.dim);
        for (int q = 0; q < n; ++q)
            for (auto& [fh2, c] : E.hf(h, q).terms()) {
                int fq = static_cast<int>(fh2 / n), hp = static_cast<int>(fh2 % n);
                const Mat& a = mh[hp];
                for (int u = 0; u < M.dim; ++u)
                    for (int v = 0; v < M.dim; ++v)
                        m(slot(fq, u), slot(q, v)) += c * a(u, v);
            }
        out.act_h[h] = std::move(m);
    }
    for (int f = 0; f < n; ++f) {
        Mat m1 = Mat::zero(out.dim, out.dim), m2 = Mat::zero(out.dim, out.dim);
        for (int q = 0; q < n; ++q) {
            SparseVec ff = E.Hstar.mul[f][q];
            for (auto& [c0, cc] : ff.terms())
                for (int u = 0; u < M.dim; ++u)
                    m2(slot(static_cast<int>(c0), u), slot(q, u)) += cc;
            for (auto& [qp, c] : E.cross_inv(f, q).terms()) {
                int qq = static_cast<int>(qp / n), pp = static_cast<int>(qp % n);
                const Mat& a = mf[pp];
                for (int u = 0; u < M.dim; ++u)
                    for (int v = 0; v < M.dim; ++v)
                        m1(slot(qq, u), slot(q, v)) += c * a(u, v);
            }
        }
        out.act1[f] = std::move(m1);
        out.act2[f] = std::move(m2);
    }
    return out;
}

/// H-module -> Del(H)-module along H -> Del(H); coset basis = both dual
/// copies, dim = (dim H)^2 dim X.
inline ElModule induce_elliptic(const EllipticDouble& E, const RepModule& X) {
    const int n = E.dimH();
    if (X.alg->dim != n) throw ShapeMismatch("induce_elliptic: base mismatch");
    ElModule out;
    out.alg = &E;
    out.dim = n * n * X.dim;
    out.label = "Iel(" + X.label + ")";
    auto slot = [&](int p, int q, int v) { return (p * n + q) * X.dim + v; };
    out.act_h.resize(n);
    out.act1.resize(n);
    out.act2.resize(n);
    for (int h = 0; h < n; ++h) {
        Mat m = Mat::zero(out.dim, out.dim);
        for (int p = 0; p < n; ++p)
            for (auto& [fh1, c1] : E.hf(h, p).terms()) {
                int pp = static_cast<int>(fh1 / n), h1 = static_cast<int>(fh1 % n);
                for (int q = 0; q < n; ++q)
                    for (auto& [fh2, c2] : E.hf(h1, q).terms()) {
                        int qq = static_cast<int>(fh2 / n), h2 = static_cast<int>(fh2 % n);
                        const Mat& a = X.act[h2];
                        Cyc c = c1 * c2;
                        for (int u = 0; u < X.dim; ++u)
                            for (int v = 0; v < X.dim; ++v)
                                m(slot(pp, qq, u), slot(p, q, v)) += c * a(u, v);
                    }
            }
        out.act_h[h] = std::move(m);
    }
    for (int f = 0; f < n; ++f) {
        Mat m1 = Mat::zero(out.dim, out.dim), m2 = Mat::zero(out.dim, out.dim);
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q) {
                SparseVec ff = E.Hstar.mul[f][p];
                for (auto& [c0, cc] : ff.terms())
                    for (int u = 0; u < X.dim; ++u)
                        m1(slot(static_cast<int>(c0), q, u), slot(p, q, u)) += cc;
                for (auto& [pq2, c] : E.cross(f, p).terms()) {
                    int pp = static_cast<int>(pq2 / n), qmid = static_cast<int>(pq2 % n);
                    SparseVec f2f2 = E.Hstar.mul[qmid][q];
                    for (auto& [c2, cc2] : f2f2.terms())
                        for (int u = 0; u < X.dim; ++u)
                            m2(slot(pp, static_cast<int>(c2), u), slot(p, q, u)) += c * cc2;
                }
            }
        out.act1[f] = std::move(m1);
        out.act2[f] = std::move(m2);
    }
    return out;
}

/// Forgetting one braiding: the restriction of a Del(H)-module to the copy of
/// D(H) given by iota2 (keep = 2, forgets the first dual action) or iota1.
inline RepModule restrict_iota(const DrinfeldDouble& dd, const ElModule& M, int keep_copy) {
    RepModule out;
    out.alg = &dd.D;
    out.dim = M.dim;
    out.label = M.label + "|iota" + std::to_string(keep_copy);
    out.act.resize(dd.D.dim);
    const auto& dual = keep_copy == 1 ? M.act1 : M.act2;
    for (int h = 0; h < dd.dimH; ++h)
        for (int f = 0; f < dd.dimH; ++f) out.act[dd.idx(h, f)] = M.act_h[h] * dual[f];
    return out;
}

/// Restriction of a Del(H)-module to the base H.
inline RepModule restrict_el_to_base(const EllipticDouble& E, const ElModule& M) {
    RepModule out;
    out.alg = &E.H;
    out.dim = M.dim;
    out.label = M.label + "|H";
    out.act = M.act_h;
    return out;
}

}  // namespace edl
