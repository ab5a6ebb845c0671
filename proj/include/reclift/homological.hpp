// The homotopical core: projective resolutions, Ext, projective/injective
// dimension, Gorenstein profiles, Gorenstein projective/injective membership,
// cofibrant/fibrant replacements for the Hovey triples
// (GProj, P^{<∞}, Mod) and (Mod, I^{<∞}, GInj), the weak-equivalence test,
// stable Hom, suspension and cofiber triangles.
//
// Everything is exact linear algebra; every constructed approximation verifies
// its own postconditions and fails loudly otherwise.

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "reclift/modrep.hpp"

namespace reclift {

// ---------------------------------------------------------------------------
// Resolutions and Ext
// ---------------------------------------------------------------------------

/// A (minimal) projective resolution built from iterated projective covers.
/// terms = P_0..P_L, diffs[k]: P_{k+1} -> P_k, augmentation: P_0 -> target.
/// complete == true when the last syzygy vanished (finite pd certificate).
struct Resolution {
    Module target;
    std::vector<Module> terms;
    std::vector<ModuleHom> diffs;
    ModuleHom augmentation;
    std::vector<Module> syzygies;  // syzygies[k] = Ω^{k+1}(target)
    bool complete = false;

    int length() const { return static_cast<int>(terms.size()) - 1; }
};

inline Resolution projective_resolution(const Module& x, int maxlen = 16) {
    if (maxlen < 0) throw input_error("projective_resolution: negative bound");
    auto [p0, eps] = projective_cover(x);
    Resolution r{x, {p0}, {}, eps, {}, false};
    auto [k0, m0] = kernel(eps);
    Module cur = k0;
    ModuleHom cur_mono = m0;  // Ω^{k+1} ↪ P_k
    r.syzygies.push_back(cur);
    for (int k = 1; k <= maxlen; ++k) {
        if (cur.dim == 0) {
            r.complete = true;
            return r;
        }
        auto [pk, ek] = projective_cover(cur);
        r.terms.push_back(pk);
        r.diffs.push_back(compose(cur_mono, ek));
        auto [kk, mk] = kernel(ek);
        cur = kk;
        cur_mono = mk;
        r.syzygies.push_back(cur);
    }
    r.complete = (cur.dim == 0);
    return r;
}

/// Ω^k(x): iterated kernels of projective covers (Ω^0 = x).
inline Module syzygy(const Module& x, int k) {
    Module cur = x;
    for (int i = 0; i < k; ++i) {
        if (cur.dim == 0) return cur;
        auto [P, eps] = projective_cover(cur);
        cur = kernel(eps).first;
    }
    return cur;
}

namespace detail {

/// Columns = vectorized hom-basis elements of Hom(x, y).
inline Mat hom_space_matrix(const std::vector<ModuleHom>& basis, int rows, uint32_t p) {
    Mat m(rows, static_cast<int>(basis.size()), p);
    for (size_t j = 0; j < basis.size(); ++j) {
        Mat v = vectorize(basis[j].matrix);
        for (int i = 0; i < rows; ++i) m(i, static_cast<int>(j)) = v(i, 0);
    }
    return m;
}

}  // namespace detail

/// dim Ext^n(x, y), the n-th cohomology of Hom(P_•, y).
inline int ext_dim(const Module& x, const Module& y, int n, int maxlen = 16) {
    if (n < 0) throw input_error("ext_dim: negative degree");
    check_same_algebra(x, y, "ext_dim");
    if (x.dim == 0 || y.dim == 0) return 0;
    Resolution r = projective_resolution(x, std::max(n + 1, 1) > maxlen ? maxlen : std::max(n + 1, 1));
    if (!r.complete && r.length() < n + 1)
        throw bound_error("ext_dim: resolution bound exceeded before degree " + std::to_string(n));
    auto term = [&](int k) -> const Module* {
        return k <= r.length() ? &r.terms[k] : nullptr;
    };
    auto hom_at = [&](int k) { return term(k) ? hom_basis(*term(k), y) : std::vector<ModuleHom>{}; };
    std::vector<ModuleHom> hn = hom_at(n);
    if (hn.empty()) return 0;
    uint32_t p = x.p();
    // δ_n: Hom(P_n, y) -> Hom(P_{n+1}, y), F ↦ F∘d_{n+1}
    auto delta_rank = [&](int k, const std::vector<ModuleHom>& hk) -> int {
        if (hk.empty() || k + 1 > r.length()) return 0;
        const ModuleHom& d = r.diffs[k];  // P_{k+1} -> P_k
        Mat cols(y.dim * r.terms[k + 1].dim, 0, p);
        for (const auto& f : hk) cols = hstack(cols, vectorize(f.matrix * d.matrix));
        return rank(cols);
    };
    int rank_out = delta_rank(n, hn);
    int rank_in = 0;
    if (n >= 1) {
        std::vector<ModuleHom> hprev = hom_at(n - 1);
        rank_in = delta_rank(n - 1, hprev);
    }
    return static_cast<int>(hn.size()) - rank_out - rank_in;
}

// ---------------------------------------------------------------------------
// Projective / injective dimension and the Gorenstein profile
// ---------------------------------------------------------------------------

/// pd(x) if it is < bound, else nullopt (meaning ">= bound").
inline std::optional<int> pd(const Module& x, int bound) {
    if (bound < 1) throw input_error("pd: bound must be >= 1");
    Module cur = x;
    for (int k = 0; k < bound; ++k) {
        if (is_projective(cur)) return k;
        auto [P, eps] = projective_cover(cur);
        cur = kernel(eps).first;
    }
    return std::nullopt;
}

/// id(x) via duality: pd of D(x) over the opposite algebra.
inline std::optional<int> injective_dim(const Module& x, const AlgebraPtr& op, int bound) {
    return pd(dual(x, op), bound);
}

/// Left/right self-injective dimensions of Λ, the Iwanaga-Gorenstein data.
struct GorensteinProfile {
    AlgebraPtr alg;
    AlgebraPtr op;
    std::optional<int> d_left;
    std::optional<int> d_right;
    int bound = 8;

    bool verified() const { return d_left.has_value() && d_right.has_value(); }
    int d() const {
        if (!verified()) throw construction_error("Gorenstein profile not verified");
        return std::max(*d_left, *d_right);
    }
    /// The profile of the opposite algebra (sides swap).
    GorensteinProfile opposite_profile() const { return {op, alg, d_right, d_left, bound}; }
};

inline GorensteinProfile gorenstein_profile(const AlgebraPtr& alg, int bound = 8) {
    if (bound < 1) throw input_error("gorenstein_profile: bound must be >= 1");
    GorensteinProfile g;
    g.alg = alg;
    g.op = opposite(alg);
    g.bound = bound;
    // id of the regular left module: pd over the opposite of its dual
    g.d_left = pd(dual(regular_module(alg), g.op), bound);
    // id of the regular right module = id of the regular left module over op;
    // its dual lives back over alg (= op of op, entrywise)
    g.d_right = pd(dual(regular_module(g.op), alg), bound);
    return g;
}

/// Membership in the (common) trivial class W = P^{<∞} = I^{<∞}: over a
/// verified profile with bound d, finite projective dimension forces pd <= d,
/// so it suffices to test projectivity of the d-th syzygy.
inline bool is_trivial(const Module& x, const GorensteinProfile& g) {
    if (!g.verified()) throw construction_error("is_trivial: profile not verified");
    if (x.alg.get() != g.alg.get()) throw input_error("is_trivial: wrong algebra");
    return is_projective(syzygy(x, g.d()));
}

/// Gorenstein projectivity as Ext-vanishing against the regular module in
/// degrees 1..d.
inline bool is_gp(const Module& x, const GorensteinProfile& g) {
    if (!g.verified()) throw construction_error("is_gp: profile not verified");
    if (x.alg.get() != g.alg.get()) throw input_error("is_gp: wrong algebra");
    if (x.dim == 0) return true;
    Module reg = regular_module(g.alg);
    for (int i = 1; i <= g.d(); ++i)
        if (ext_dim(x, reg, i, g.d() + 2) != 0) return false;
    return true;
}

inline bool is_gi(const Module& x, const GorensteinProfile& g) {
    if (!g.verified()) throw construction_error("is_gi: profile not verified");
    return is_gp(dual(x, g.op), g.opposite_profile());
}

// ---------------------------------------------------------------------------
// Star duality  Hom_Λ(-, Λ)  and the Gorenstein embedding step
// ---------------------------------------------------------------------------

/// Hom_A(x, A) as a module over the (given) opposite algebra; basis columns
/// are the vectorized maps x -> Λ.
struct StarModule {
    Module module;
    Mat basis;
};

inline StarModule star_module(const Module& x, const AlgebraPtr& op) {
    AlgebraPtr alg = x.alg;
    uint32_t p = x.p();
    Module reg = regular_module(alg);
    auto hb = hom_basis(x, reg);
    Mat basis = detail::hom_space_matrix(hb, alg->dim * x.dim, p);
    const int hd = basis.cols();
    // op-action: (b·F) = R_b ∘ F
    std::vector<Mat> act;
    Mat ix = Mat::identity(x.dim, p);
    for (int b = 0; b < op->dim; ++b) {
        Mat on_full = kron(alg->right_mult(vec_unit(alg->dim, b)), ix);
        auto sol = solve(basis, on_full * basis);
        if (!sol) throw construction_error("star_module: action leaves solution space");
        act.push_back(*sol);
    }
    Module mod(op, hd, std::move(act), x.name + "*");
    return {std::move(mod), std::move(basis)};
}

/// star of a map: (-)* is contravariant, F ↦ F∘f.
inline ModuleHom star_map(const ModuleHom& f, const StarModule& star_src, const StarModule& star_tgt) {
    // f: x -> y; star_map(f): y* -> x*; star_tgt = y*, star_src = x*
    uint32_t p = f.source.p();
    int algdim = f.source.alg->dim;
    Mat pre = kron(Mat::identity(algdim, p), transpose(f.matrix));
    auto sol = solve(star_src.basis, pre * star_tgt.basis);
    if (!sol) throw construction_error("star_map: image not in solution space");
    return ModuleHom(star_tgt.module, star_src.module, *sol);
}

/// Evaluation x -> x**: v ↦ (F ↦ F(v)).
inline ModuleHom evaluation_map(const Module& x, const StarModule& star_x,
                                const StarModule& star_star_x) {
    uint32_t p = x.p();
    AlgebraPtr alg = x.alg;
    const int h1 = star_x.module.dim;
    Mat ev(star_star_x.module.dim, x.dim, p);
    for (int v = 0; v < x.dim; ++v) {
        // G_v : x*-coordinates -> Λ, column j = F_j(e_v)
        Mat G(alg->dim, h1, p);
        for (int j = 0; j < h1; ++j) {
            Mat F = unvectorize(Mat::column(star_x.basis.col_vec(j), p), alg->dim, x.dim);
            for (int r = 0; r < alg->dim; ++r) G(r, j) = F(r, v);
        }
        auto sol = solve(star_star_x.basis, vectorize(G));
        if (!sol) throw construction_error("evaluation_map: image not a double-dual element");
        for (int r = 0; r < star_star_x.module.dim; ++r) ev(r, v) = (*sol)(r, 0);
    }
    return ModuleHom(x, star_star_x.module, std::move(ev));
}

struct GpEmbedding {
    ModuleHom mono;     // g ↪ P with P projective
    Module cokernel;    // GP by postcondition
    ModuleHom coker_epi;
};

/// Embeds a Gorenstein projective module into a projective with GP cokernel:
/// the star of a projective cover of Hom(g, Λ) over the opposite algebra,
/// composed with the evaluation isomorphism.  All postconditions verified.
inline GpEmbedding gp_embed_step(const Module& g, const GorensteinProfile& prof) {
    if (!is_gp(g, prof)) throw input_error("gp_embed_step: input not Gorenstein projective");
    AlgebraPtr alg = prof.alg, op = prof.op;
    if (g.dim == 0) {
        Module z = Module::zero(alg);
        ModuleHom mono(z, z, Mat(0, 0, alg->p));
        return {mono, z, ModuleHom(z, z, Mat(0, 0, alg->p))};
    }
    StarModule sg = star_module(g, op);
    auto [Q, c] = projective_cover(sg.module);  // over op
    StarModule ssg = star_module(sg.module, alg);
    StarModule sQ = star_module(Q, alg);
    ModuleHom cstar = star_map(c, sQ, ssg);  // (g*)* -> Q*
    ModuleHom ev = evaluation_map(g, sg, ssg);
    ModuleHom mono = compose(cstar, ev);
    if (!mono.is_injective())
        throw construction_error("gp_embed_step: embedding not injective (non-GP input slipped through?)");
    if (!is_projective(mono.target))
        throw construction_error("gp_embed_step: star of projective cover is not projective");
    auto ck = cokernel(mono);
    if (!is_gp(ck.module, prof))
        throw construction_error("gp_embed_step: cokernel fails the GP test");
    return {std::move(mono), std::move(ck.module), std::move(ck.epi)};
}

// ---------------------------------------------------------------------------
// Replacements (the Hovey-triple approximation sequences)
// ---------------------------------------------------------------------------

enum class ApproxKind { cofibrant, fibrant };

/// A certified approximation sequence:
///   cofibrant: 0 -> W -> Q(X) -> X -> 0 with Q(X) GP and W trivial;
///   fibrant:   0 -> X -> R(X) -> C -> 0 with R(X) GI and C trivial.
struct ApproxSeq {
    ApproxKind kind;
    SES ses;
    Module replaced;
};

/// Gorenstein projective approximation by the inductive pushout scheme: fold
/// the d-step projective resolution back up, at each stage embedding the
/// current GP approximant into a projective and pushing out.
inline ApproxSeq cofibrant_replacement(const Module& x, const GorensteinProfile& prof) {
    if (!prof.verified()) throw construction_error("cofibrant_replacement: profile not verified");
    if (x.alg.get() != prof.alg.get()) throw input_error("cofibrant_replacement: wrong algebra");
    uint32_t p = x.p();
    const int d = prof.d();

    auto finish = [&](SES ses, Module q) -> ApproxSeq {
        if (!is_gp(q, prof)) throw construction_error("cofibrant_replacement: middle term not GP");
        if (!is_trivial(ses.mono.source, prof))
            throw construction_error("cofibrant_replacement: kernel not trivial");
        return ApproxSeq{ApproxKind::cofibrant, std::move(ses), std::move(q)};
    };

    if (d == 0) {
        // every module is GP; the identity sequence is the replacement
        Module z = Module::zero(x.alg);
        SES ses(ModuleHom(z, x, Mat(x.dim, 0, p)), ModuleHom::identity(x));
        return finish(std::move(ses), x);
    }

    // downward: SESs 0 -> Y_{k+1} -> P_k -> Y_k -> 0 from covers, Y_0 = x
    std::vector<ModuleHom> cover_epis;   // P_k -> Y_k
    std::vector<ModuleHom> cover_monos;  // Y_{k+1} ↪ P_k
    Module cur = x;
    for (int k = 0; k < d; ++k) {
        auto [P, eps] = projective_cover(cur);
        auto [K, mono] = kernel(eps);
        cover_epis.push_back(eps);
        cover_monos.push_back(mono);
        cur = K;  // Y_{k+1}
    }
    // start: Y_d is GP (d-th syzygy over a Gorenstein algebra)
    Module approx_mid = cur;  // G'
    ModuleHom approx_epi = ModuleHom::identity(cur);
    for (int k = d - 1; k >= 0; --k) {
        const ModuleHom& iota = cover_monos[k];  // Y_{k+1} ↪ P_k
        const Module& Pk = iota.target;
        const Module& Yk = cover_epis[k].target;
        GpEmbedding emb = gp_embed_step(approx_mid, prof);
        const Module& T = emb.mono.target;
        // pushout V of  P_k <- G' -> T  along φ = ι∘π and the embedding e
        ModuleHom phi = compose(iota, approx_epi);
        DirectSum pt = direct_sum({Pk, T});
        Fp f(p);
        Mat rel(pt.module.dim, approx_mid.dim, p);
        for (int c = 0; c < approx_mid.dim; ++c) {
            for (int r = 0; r < Pk.dim; ++r) rel(r, c) = phi.matrix(r, c);
            for (int r = 0; r < T.dim; ++r)
                rel(Pk.dim + r, c) = f.neg(emb.mono.matrix(r, c));
        }
        auto V = quotient_module(pt.module, image_basis(rel), "pushout");
        // epi V -> Y_k: induced by (cover epi, 0) on P_k ⊕ T
        Mat on_sum(Yk.dim, pt.module.dim, p);
        for (int r = 0; r < Yk.dim; ++r)
            for (int c = 0; c < Pk.dim; ++c) on_sum(r, c) = cover_epis[k].matrix(r, c);
        ModuleHom new_epi(V.module, Yk, on_sum * V.section);
        approx_mid = V.module;
        approx_epi = new_epi;
    }
    auto [W, wmono] = kernel(approx_epi);
    SES ses(wmono, approx_epi);
    return finish(std::move(ses), approx_mid);
}

/// Fibrant (Gorenstein injective) approximation: the dualized cofibrant
/// replacement of the dual module over the opposite algebra.
inline ApproxSeq fibrant_replacement(const Module& x, const GorensteinProfile& prof) {
    if (!prof.verified()) throw construction_error("fibrant_replacement: profile not verified");
    GorensteinProfile opp = prof.opposite_profile();
    Module dx = dual(x, prof.op);
    ApproxSeq ca = cofibrant_replacement(dx, opp);
    // dualize 0 -> W -> Q -> D(x) -> 0 to 0 -> x -> D(Q) -> D(W) -> 0
    ModuleHom mono_raw = dual(ca.ses.epi, prof.alg);  // D(D(x)) -> D(Q), D(D(x)) = x entrywise
    ModuleHom mono(x, mono_raw.target, mono_raw.matrix);
    ModuleHom epi = dual(ca.ses.mono, prof.alg);  // D(Q) -> D(W)
    SES ses(std::move(mono), std::move(epi));
    Module R = ses.mono.target;
    if (!is_gi(R, prof)) throw construction_error("fibrant_replacement: middle term not GI");
    if (!is_trivial(ses.epi.target, prof))
        throw construction_error("fibrant_replacement: cokernel not trivial");
    return ApproxSeq{ApproxKind::fibrant, std::move(ses), std::move(R)};
}

// ---------------------------------------------------------------------------
// Weak equivalences and the stable category
// ---------------------------------------------------------------------------

/// f factors as (id,0): X ↪ X ⊕ P(Y) (mono with projective = trivial cokernel)
/// followed by (f, π): X ⊕ P(Y) ↠ Y; f is a weak equivalence iff the epi part
/// has trivial kernel.
inline bool is_weak_equivalence(const ModuleHom& f, const GorensteinProfile& prof) {
    if (!prof.verified()) throw construction_error("is_weak_equivalence: profile not verified");
    uint32_t p = f.source.p();
    auto [P, pi] = projective_cover(f.target);
    if (f.source.dim + P.dim == 0) return f.target.dim == 0;
    std::vector<Module> parts;
    parts.push_back(f.source);
    parts.push_back(P);
    DirectSum ds = direct_sum(parts);
    Mat m(f.target.dim, ds.module.dim, p);
    for (int r = 0; r < f.target.dim; ++r) {
        for (int c = 0; c < f.source.dim; ++c) m(r, c) = f.matrix(r, c);
        for (int c = 0; c < P.dim; ++c) m(r, f.source.dim + c) = pi.matrix(r, c);
    }
    ModuleHom epi(ds.module, f.target, std::move(m));
    auto [K, mono] = kernel(epi);
    return is_trivial(K, prof);
}

/// Stable Hom: Hom(x,y) modulo maps factoring through a projective (they all
/// factor through the cover).  Returns the dimension and representative maps.
struct StableHom {
    int dim = 0;
    std::vector<ModuleHom> representatives;
};

inline StableHom stable_hom(const Module& x, const Module& y) {
    auto H = hom_basis(x, y);
    if (H.empty()) return {};
    uint32_t p = x.p();
    auto [P, pi] = projective_cover(y);
    auto through = hom_basis(x, P);
    Mat hom_mat = detail::hom_space_matrix(H, y.dim * x.dim, p);
    Mat fact(y.dim * x.dim, 0, p);
    for (const auto& g : through) fact = hstack(fact, vectorize(pi.matrix * g.matrix));
    Mat fact_basis = image_basis(fact);
    // complement of the factoring subspace inside Hom(x,y) coordinates
    Mat coords(static_cast<int>(H.size()), 0, p);
    {
        auto sol = solve(hom_mat, fact_basis);
        if (!sol) throw construction_error("stable_hom: factoring maps outside hom space");
        coords = *sol;
    }
    auto [rr, pivots] = rref(transpose(coords));
    std::vector<bool> is_piv(H.size(), false);
    for (int c : pivots) is_piv[c] = true;
    StableHom out;
    out.dim = static_cast<int>(H.size()) - static_cast<int>(pivots.size());
    for (size_t i = 0; i < H.size(); ++i)
        if (!is_piv[i]) out.representatives.push_back(H[i]);
    return out;
}

/// Dual recipe: Hom(x,y) modulo maps factoring through an injective (through
/// the injective envelope of x).
inline StableHom costable_hom(const Module& x, const Module& y, const AlgebraPtr& op) {
    auto H = hom_basis(x, y);
    if (H.empty()) return {};
    uint32_t p = x.p();
    auto [E, iota] = injective_envelope(x, op);
    auto through = hom_basis(E, y);
    Mat hom_mat = detail::hom_space_matrix(H, y.dim * x.dim, p);
    Mat fact(y.dim * x.dim, 0, p);
    for (const auto& g : through) fact = hstack(fact, vectorize(g.matrix * iota.matrix));
    auto sol = solve(hom_mat, image_basis(fact));
    if (!sol) throw construction_error("costable_hom: factoring maps outside hom space");
    auto [rr, pivots] = rref(transpose(*sol));
    std::vector<bool> is_piv(H.size(), false);
    for (int c : pivots) is_piv[c] = true;
    StableHom out;
    out.dim = static_cast<int>(H.size()) - static_cast<int>(pivots.size());
    for (size_t i = 0; i < H.size(); ++i)
        if (!is_piv[i]) out.representatives.push_back(H[i]);
    return out;
}

/// Σg = cokernel of a Gorenstein embedding (well-defined up to stable iso).
inline Module suspension(const Module& g, const GorensteinProfile& prof) {
    return gp_embed_step(g, prof).cokernel;
}

/// Ω x = kernel of the projective cover.
inline Module loop_module(const Module& x) { return syzygy(x, 1); }

struct CofiberTriangle {
    Module cone;      // Z
    ModuleHom v;      // h -> Z
    ModuleHom w;      // Z -> Σg
    Module sigma_g;
};

/// Cofiber of f: g -> h between GP modules: Z = coker(g -> h ⊕ P) with the
/// embedding in the second slot; realizes the pushout with trivial middle W.
inline CofiberTriangle cofiber_triangle(const ModuleHom& f, const GorensteinProfile& prof) {
    if (!is_gp(f.source, prof) || !is_gp(f.target, prof))
        throw input_error("cofiber_triangle: endpoints must be GP");
    uint32_t p = f.source.p();
    GpEmbedding emb = gp_embed_step(f.source, prof);
    const Module& P = emb.mono.target;
    DirectSum hp = direct_sum({f.target, P});
    Fp fld(p);
    Mat rel(hp.module.dim, f.source.dim, p);
    for (int c = 0; c < f.source.dim; ++c) {
        for (int r = 0; r < f.target.dim; ++r) rel(r, c) = f.matrix(r, c);
        for (int r = 0; r < P.dim; ++r) rel(f.target.dim + r, c) = fld.neg(emb.mono.matrix(r, c));
    }
    auto Z = quotient_module(hp.module, image_basis(rel), "cone");
    ModuleHom v = compose(Z.epi, hp.injections[0]);
    // w: Z -> Σg induced by (0, coker-projection of the embedding)
    Mat on_sum(emb.cokernel.dim, hp.module.dim, p);
    for (int r = 0; r < emb.cokernel.dim; ++r)
        for (int c = 0; c < P.dim; ++c) on_sum(r, f.target.dim + c) = emb.coker_epi.matrix(r, c);
    ModuleHom w(Z.module, emb.cokernel, on_sum * Z.section);
    return {Z.module, std::move(v), std::move(w), emb.cokernel};
}

}  // namespace reclift
