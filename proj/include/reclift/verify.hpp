// Verifiers for the recollement instances: adjunction checks, the recollement
// axioms, the lifting setup (trivial-object preservation and the acyclicity
// conditions), derived-embedding and kernel-unit conditions, degree-bounded
// homological embeddings (stratifying ideals), and the stable-level report.
//
// All checks run over deterministic sample families and report failures with
// replayable witnesses instead of throwing.

#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "reclift/recollement.hpp"
#include "reclift/report.hpp"

namespace reclift {

// ---------------------------------------------------------------------------
// Sample families
// ---------------------------------------------------------------------------

struct SampleConfig {
    uint64_t seed = 42;
    int depth = 2;        // syzygy/cosyzygy depth
    int dim_bound = 8;    // random modules above this are dropped
    int random_count = 4;
};

/// Deterministic sample family: indecomposable projectives, simples,
/// injectives, syzygies and cosyzygies to the configured depth, plus seeded
/// random modules of bounded dimension.
inline std::vector<Module> sample_modules(const AlgebraPtr& alg, const SampleConfig& cfg) {
    std::vector<Module> out;
    if (alg->is_zero_algebra()) return out;
    AlgebraPtr op = opposite(alg);
    std::vector<Module> seeds;
    for (size_t i = 0; i < alg->idempotents.size(); ++i) {
        seeds.push_back(projective_module(alg, static_cast<int>(i)));
        seeds.push_back(simple_module(alg, static_cast<int>(i)));
        seeds.push_back(injective_module(alg, op, static_cast<int>(i)));
    }
    for (const Module& s : seeds) {
        out.push_back(s);
        Module cur = s;
        for (int k = 0; k < cfg.depth; ++k) {
            cur = syzygy(cur, 1);
            if (cur.dim == 0) break;
            out.push_back(cur);
        }
        cur = s;
        for (int k = 0; k < cfg.depth; ++k) {
            auto [env, mono] = injective_envelope(cur, op);
            cur = cokernel(mono).module;
            if (cur.dim == 0) break;
            out.push_back(cur);
        }
    }
    SplitMix64 rng(cfg.seed);
    for (int i = 0; i < cfg.random_count; ++i) {
        Module m = seeded_random_module(alg, rng);
        if (m.dim > 0 && m.dim <= cfg.dim_bound) out.push_back(m);
    }
    // drop exact duplicates (same action matrices), keep order
    std::vector<Module> dedup;
    for (auto& m : out) {
        bool seen = false;
        for (const auto& d : dedup)
            if (d.dim == m.dim && d.action == m.action) {
                seen = true;
                break;
            }
        if (!seen) dedup.push_back(std::move(m));
    }
    return dedup;
}

namespace detail {

inline Witness module_witness(const std::string& desc, const Module& m,
                              const std::string& label = "module") {
    Witness w;
    w.description = desc;
    w.facts.emplace_back("algebra", m.alg->name);
    w.facts.emplace_back("dim", std::to_string(m.dim));
    for (size_t i = 0; i < m.action.size(); ++i)
        w.matrices.emplace_back(label + ".action[" + m.alg->labels[i] + "]", m.action[i]);
    return w;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Adjunctions and recollement axioms
// ---------------------------------------------------------------------------

/// Hom-dimension equalities dim Hom(F X, Y) = dim Hom(X, G Y) on all sample
/// pairs, plus both triangle identities when unit/counit are supplied.
inline CheckRecord verify_adjunction(const FunctorHandle& left, const FunctorHandle& right,
                                     const std::vector<Module>& samples_src,
                                     const std::vector<Module>& samples_tgt,
                                     std::function<ModuleHom(const Module&)> unit = nullptr,
                                     std::function<ModuleHom(const Module&)> counit = nullptr) {
    CheckRecord rec;
    rec.name = "adjunction " + left.name + " -| " + right.name;
    rec.scope = "sample objects on both sides";
    for (const Module& x : samples_src)
        for (const Module& y : samples_tgt) {
            ++rec.samples;
            int lhs = hom_dim(left(x), y);
            int rhs = hom_dim(x, right(y));
            if (lhs != rhs) {
                Witness w = detail::module_witness(
                    "hom-dimension mismatch: dim Hom(" + left.name + " X, Y) = " +
                        std::to_string(lhs) + " but dim Hom(X, " + right.name + " Y) = " +
                        std::to_string(rhs),
                    x, "X");
                Witness wy = detail::module_witness("", y, "Y");
                w.matrices.insert(w.matrices.end(), wy.matrices.begin(), wy.matrices.end());
                rec.fail(std::move(w));
            }
        }
    if (unit && counit) {
        for (const Module& x : samples_src) {
            // 1_{FX} = counit_{FX} ∘ F(unit_X)
            ModuleHom eta = unit(x);
            ModuleHom feta = left(eta);
            ModuleHom eps = counit(left(x));
            Mat comp = eps.matrix * feta.matrix;
            if (comp != Mat::identity(left(x).dim, x.p()))
                rec.fail(detail::module_witness("triangle identity fails at F(X)", x, "X"));
        }
        for (const Module& y : samples_tgt) {
            // 1_{GY} = G(counit_Y) ∘ unit_{GY}
            ModuleHom eps = counit(y);
            ModuleHom geps = right(eps);
            ModuleHom eta = unit(right(y));
            Mat comp = geps.matrix * eta.matrix;
            if (comp != Mat::identity(right(y).dim, y.p()))
                rec.fail(detail::module_witness("triangle identity fails at G(Y)", y, "Y"));
        }
    }
    return rec;
}

/// Functoriality spot-check: identities and composites on sample data.
inline CheckRecord verify_functoriality(const FunctorHandle& F, const std::vector<Module>& samples) {
    CheckRecord rec;
    rec.name = "functoriality " + F.name;
    rec.scope = "identities and composable sample pairs";
    for (const Module& x : samples) {
        ++rec.samples;
        ModuleHom fid = F(ModuleHom::identity(x));
        if (fid.matrix != Mat::identity(F(x).dim, x.p()))
            rec.fail(detail::module_witness(F.name + " does not preserve the identity", x, "X"));
    }
    for (size_t a = 0; a < samples.size() && a < 3; ++a)
        for (size_t b = 0; b < samples.size() && b < 3; ++b) {
            auto homs = hom_basis(samples[a], samples[b]);
            if (homs.empty()) continue;
            for (size_t c = 0; c < samples.size() && c < 3; ++c) {
                auto homs2 = hom_basis(samples[b], samples[c]);
                if (homs2.empty()) continue;
                ++rec.samples;
                ModuleHom gf = compose(homs2[0], homs[0]);
                if (F(gf).matrix != (F(homs2[0]).matrix * F(homs[0]).matrix))
                    rec.fail(detail::module_witness(F.name + " does not preserve composition",
                                                    samples[a], "X"));
            }
        }
    return rec;
}

/// SES preservation at the declared exactness level, on SESs derived from
/// projective covers of the samples.
inline CheckRecord verify_exactness(const FunctorHandle& F, const std::vector<Module>& samples) {
    CheckRecord rec;
    rec.name = "exactness " + F.name;
    rec.scope = "cover sequences of samples, at declared level";
    for (const Module& x : samples) {
        if (x.dim == 0) continue;
        auto [P, epi] = projective_cover(x);
        auto [K, mono] = kernel(epi);
        if (K.dim == 0) continue;
        ++rec.samples;
        ModuleHom fm = F(mono), fe = F(epi);
        bool mono_ok = fm.is_injective();
        bool epi_ok = fe.is_surjective();
        bool middle_ok = (fe.matrix * fm.matrix).is_zero() &&
                         rank(fm.matrix) == fe.source.dim - rank(fe.matrix);
        bool ok = true;
        switch (F.exactness) {
            case FunctorHandle::Exactness::exact: ok = mono_ok && epi_ok && middle_ok; break;
            case FunctorHandle::Exactness::right_exact: ok = epi_ok && middle_ok; break;
            case FunctorHandle::Exactness::left_exact:
                // preserves kernels: F(K) = ker(F(P) -> F(X))
                ok = mono_ok && (fe.matrix * fm.matrix).is_zero() &&
                     (fe.source.dim - rank(fe.matrix)) == rank(fm.matrix);
                break;
        }
        if (!ok)
            rec.fail(detail::module_witness("declared exactness violated for " + F.name, x, "X"));
    }
    return rec;
}

/// The recollement axioms on samples: e∘i = 0, the four unit/counit
/// isomorphisms, full faithfulness of i, and the essential-image property for
/// samples killed by e.
inline std::vector<CheckRecord> verify_recollement_axioms(const RecollementInstance& inst,
                                                          const std::vector<Module>& samplesA,
                                                          const std::vector<Module>& samplesB,
                                                          const std::vector<Module>& samplesC) {
    std::vector<CheckRecord> out;
    {
        CheckRecord rec;
        rec.name = "e∘i = 0";
        rec.scope = "A-side samples";
        for (const Module& y : samplesA) {
            ++rec.samples;
            Module eiy = inst.e(inst.i(y));
            if (eiy.dim != 0)
                rec.fail(detail::module_witness("e(i(Y)) nonzero, dim " + std::to_string(eiy.dim),
                                                y, "Y"));
        }
        out.push_back(std::move(rec));
    }
    {
        CheckRecord rec;
        rec.name = "q∘i ≅ id";
        rec.scope = "A-side samples";
        for (const Module& y : samplesA) {
            ++rec.samples;
            ModuleHom eps = inst.counit_qi(y);
            if (!eps.is_iso())
                rec.fail(detail::module_witness("counit q(i(Y)) -> Y not invertible", y, "Y"));
        }
        out.push_back(std::move(rec));
    }
    {
        CheckRecord rec;
        rec.name = "p∘i ≅ id";
        rec.scope = "A-side samples";
        for (const Module& y : samplesA) {
            ++rec.samples;
            ModuleHom eta = inst.unit_ip(y);
            if (!eta.is_iso())
                rec.fail(detail::module_witness("unit Y -> p(i(Y)) not invertible", y, "Y"));
        }
        out.push_back(std::move(rec));
    }
    {
        CheckRecord rec;
        rec.name = "e∘l ≅ id";
        rec.scope = "C-side samples";
        for (const Module& z : samplesC) {
            ++rec.samples;
            ModuleHom eta = inst.unit_le(z);
            if (!eta.is_iso())
                rec.fail(detail::module_witness("unit Z -> e(l(Z)) not invertible", z, "Z"));
        }
        out.push_back(std::move(rec));
    }
    {
        CheckRecord rec;
        rec.name = "e∘r ≅ id";
        rec.scope = "C-side samples";
        for (const Module& z : samplesC) {
            ++rec.samples;
            ModuleHom eps = inst.counit_er(z);
            if (!eps.is_iso())
                rec.fail(detail::module_witness("counit e(r(Z)) -> Z not invertible", z, "Z"));
        }
        out.push_back(std::move(rec));
    }
    {
        CheckRecord rec;
        rec.name = "i fully faithful";
        rec.scope = "A-side sample pairs";
        for (const Module& y1 : samplesA)
            for (const Module& y2 : samplesA) {
                ++rec.samples;
                int lhs = hom_dim(y1, y2);
                int rhs = hom_dim(inst.i(y1), inst.i(y2));
                if (lhs != rhs) {
                    Witness w = detail::module_witness(
                        "dim Hom(Y1,Y2) = " + std::to_string(lhs) + " but dim Hom(iY1,iY2) = " +
                            std::to_string(rhs),
                        y1, "Y1");
                    rec.fail(std::move(w));
                }
            }
        out.push_back(std::move(rec));
    }
    {
        CheckRecord rec;
        rec.name = "essential image of i on Ker e";
        rec.scope = "B-side samples with e(X) = 0";
        for (const Module& x : samplesB) {
            if (inst.e(x).dim != 0) continue;
            ++rec.samples;
            // the unit X -> i(q(X)) must be an isomorphism when e kills X
            ModuleHom eta = inst.unit_qi(x);
            if (!eta.is_iso())
                rec.fail(detail::module_witness("X in Ker e but X -> i(q(X)) not invertible", x,
                                                "X"));
        }
        out.push_back(std::move(rec));
    }
    {
        // naturality spot-check of the (q ⊣ i) unit on sample morphisms
        CheckRecord rec;
        rec.name = "unit naturality (q -| i)";
        rec.scope = "morphisms between first B-side samples";
        for (size_t a = 0; a < samplesB.size() && a < 3; ++a)
            for (size_t b = 0; b < samplesB.size() && b < 3; ++b) {
                auto homs = hom_basis(samplesB[a], samplesB[b]);
                if (homs.empty()) continue;
                ++rec.samples;
                const ModuleHom& f = homs[0];
                ModuleHom lhs = compose(inst.i(inst.q(f)), inst.unit_qi(f.source));
                ModuleHom rhs = compose(inst.unit_qi(f.target), f);
                if (lhs.matrix != rhs.matrix)
                    rec.fail(detail::module_witness("unit square does not commute", samplesB[a],
                                                    "X"));
            }
        out.push_back(std::move(rec));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Lifting setup and theorem conditions
// ---------------------------------------------------------------------------

/// Setup checks: e preserves trivial objects; the right acyclicity condition
/// i(Proj A) ⊆ W_B; the left acyclicity condition i(Inj A) ⊆ W_B.
inline std::vector<CheckRecord> check_setup(const RecollementInstance& inst,
                                            const std::vector<Module>& samplesB) {
    std::vector<CheckRecord> out;
    {
        CheckRecord rec;
        rec.name = "e preserves trivial objects";
        rec.scope = "trivial B-side samples";
        for (const Module& x : samplesB) {
            if (!is_trivial(x, inst.profB)) continue;
            ++rec.samples;
            Module ex = inst.e(x);
            if (!is_trivial(ex, inst.profC))
                rec.fail(detail::module_witness("e(X) not trivial for trivial X", x, "X"));
        }
        out.push_back(std::move(rec));
    }
    {
        CheckRecord rec;
        rec.name = "right acyclicity: i(Proj A) trivial";
        rec.scope = "indecomposable projectives of the A-side";
        for (size_t i = 0; i < inst.A->idempotents.size(); ++i) {
            ++rec.samples;
            Module P = projective_module(inst.A, static_cast<int>(i));
            if (!is_trivial(inst.i(P), inst.profB))
                rec.fail(detail::module_witness("i(P) not trivial", P, "P"));
        }
        if (inst.A->is_zero_algebra()) rec.notes.push_back("A-side is the zero category (vacuous)");
        out.push_back(std::move(rec));
    }
    {
        CheckRecord rec;
        rec.name = "left acyclicity: i(Inj A) trivial";
        rec.scope = "indecomposable injectives of the A-side";
        for (size_t i = 0; i < inst.A->idempotents.size(); ++i) {
            ++rec.samples;
            Module I = injective_module(inst.A, inst.profA.op, static_cast<int>(i));
            if (!is_trivial(inst.i(I), inst.profB))
                rec.fail(detail::module_witness("i(I) not trivial", I, "I"));
        }
        if (inst.A->is_zero_algebra()) rec.notes.push_back("A-side is the zero category (vacuous)");
        out.push_back(std::move(rec));
    }
    return out;
}

/// Condition (i): i is a derived embedding.  Fast mode runs the unit-map
/// criterion on cofibrant replacements of i(Y); thorough mode additionally
/// compares Ext-dimensions per the fully-faithfulness criterion up to the
/// given degree.
inline CheckRecord check_derived_embedding(const RecollementInstance& inst,
                                           const std::vector<Module>& samplesA, bool thorough,
                                           int degree = 3) {
    CheckRecord rec;
    rec.name = "derived embedding (condition i)";
    rec.mode = thorough ? "thorough" : "fast";
    rec.scope = "A-side samples";
    for (const Module& y : samplesA) {
        ++rec.samples;
        Module iy = inst.i(y);
        ApproxSeq q_iy = cofibrant_replacement(iy, inst.profB);
        ModuleHom eta = inst.unit_qi(q_iy.replaced);
        if (!is_weak_equivalence(eta, inst.profB))
            rec.fail(detail::module_witness("unit Q(iY) -> i q Q(iY) not a weak equivalence", y,
                                            "Y"));
    }
    if (thorough) {
        size_t limit = std::min<size_t>(samplesA.size(), 4);
        for (size_t a = 0; a < limit; ++a)
            for (size_t b = 0; b < limit; ++b) {
                const Module& X = samplesA[a];
                const Module& Y = samplesA[b];
                Module qa_ = cofibrant_replacement(X, inst.profA).replaced;
                Module qb_ = cofibrant_replacement(inst.i(X), inst.profB).replaced;
                for (int n = 1; n <= degree; ++n) {
                    ++rec.samples;
                    int lhs = ext_dim(qa_, Y, n);
                    int rhs = ext_dim(qb_, inst.i(Y), n);
                    if (lhs != rhs) {
                        Witness w = detail::module_witness(
                            "Ext^" + std::to_string(n) + " mismatch: A-side " +
                                std::to_string(lhs) + ", B-side " + std::to_string(rhs),
                            X, "X");
                        w.facts.emplace_back("degree", std::to_string(n));
                        rec.fail(std::move(w));
                    }
                }
            }
    }
    return rec;
}

/// Condition (ii): for cofibrant (GP) B-side X killed by Re, the unit
/// X -> i q X is a weak equivalence; the canonical sequence
/// 0 -> l e X -> X -> i q X -> 0 is built and its exactness asserted.
inline CheckRecord check_kernel_unit(const RecollementInstance& inst,
                                     const std::vector<Module>& samplesB) {
    CheckRecord rec;
    rec.name = "kernel unit (condition ii)";
    rec.scope = "GP B-side samples with e(X) trivial";
    for (const Module& x : samplesB) {
        if (!is_gp(x, inst.profB)) continue;
        Module ex = inst.e(x);
        if (!is_trivial(ex, inst.profC)) continue;  // precondition filter
        ++rec.samples;
        ModuleHom eta = inst.unit_qi(x);
        ModuleHom eps = inst.counit_le(x);
        // canonical short exact sequence 0 -> leX -> X -> iqX -> 0
        bool exact = eps.is_injective() && eta.is_surjective() &&
                     (eta.matrix * eps.matrix).is_zero() &&
                     rank(eps.matrix) == x.dim - rank(eta.matrix);
        if (!exact) {
            rec.fail(detail::module_witness("canonical sequence leX -> X -> iqX not exact", x, "X"));
            continue;
        }
        if (!is_weak_equivalence(eta, inst.profB))
            rec.fail(detail::module_witness("unit X -> i q X not a weak equivalence", x, "X"));
    }
    return rec;
}

/// Condition (ii)': for fibrant (GI) B-side Y killed by Le, the counit
/// i p Y -> Y is a weak equivalence.
inline CheckRecord check_kernel_counit(const RecollementInstance& inst,
                                       const std::vector<Module>& samplesB) {
    CheckRecord rec;
    rec.name = "kernel counit (condition ii')";
    rec.scope = "GI B-side samples with e(Y) trivial";
    for (const Module& y0 : samplesB) {
        // fibrant sampling: fibrant replacement of the sample
        Module y = fibrant_replacement(y0, inst.profB).replaced;
        if (!is_trivial(inst.e(y), inst.profC)) continue;
        ++rec.samples;
        ModuleHom eps = inst.counit_ip(y);
        if (!is_weak_equivalence(eps, inst.profB))
            rec.fail(detail::module_witness("counit i p Y -> Y not a weak equivalence", y, "Y"));
    }
    return rec;
}

// ---------------------------------------------------------------------------
// Homological embedding degree (stratifying ideals)
// ---------------------------------------------------------------------------

namespace detail {

/// Cohomology of Hom(P_•, y) at degree n, with class coordinates.
struct ExtSpace {
    std::vector<ModuleHom> hom_basis_n;
    Mat hom_matrix = Mat(0, 0, 2);   // columns = vectorized basis
    Mat cocycles = Mat(0, 0, 2);     // columns: coords of ker δ_n in the hom basis
    Mat class_basis = Mat(0, 0, 2);  // columns: coords of a basis of H^n
    SubspaceReduction boundary_reduction = SubspaceReduction(Mat(0, 0, 2));
    int ext = 0;

    /// Class coordinates of a cocycle map P_n -> y.
    std::optional<Mat> class_of(const Mat& map_matrix, uint32_t p) const {
        if (hom_basis_n.empty()) return Mat(0, 1, p);
        auto c = solve(hom_matrix, vectorize(map_matrix));
        if (!c) return std::nullopt;
        Mat reduced = boundary_reduction.reduce(*c);
        return solve(class_basis.cols() ? class_basis : Mat(static_cast<int>(hom_basis_n.size()), 0, p),
                     reduced);
    }
};

inline ExtSpace ext_space(const Resolution& r, const Module& y, int n) {
    uint32_t p = y.p();
    ExtSpace es;
    if (n > r.length()) return es;
    es.hom_basis_n = hom_basis(r.terms[n], y);
    if (es.hom_basis_n.empty()) return es;
    const int h = static_cast<int>(es.hom_basis_n.size());
    es.hom_matrix = hom_space_matrix(es.hom_basis_n, y.dim * r.terms[n].dim, p);
    // δ_n columns, in Hom(P_{n+1}, y) vectorized coordinates
    Mat delta_cols(0, 0, p);
    if (n + 1 <= r.length()) {
        delta_cols = Mat(y.dim * r.terms[n + 1].dim, h, p);
        for (int t = 0; t < h; ++t) {
            Mat img = vectorize(es.hom_basis_n[t].matrix * r.diffs[n].matrix);
            for (int i = 0; i < img.rows(); ++i) delta_cols(i, t) = img(i, 0);
        }
    } else {
        delta_cols = Mat(0, h, p);
    }
    es.cocycles = kernel_basis(delta_cols);
    // boundaries: image of δ_{n-1} expressed in the hom basis
    Mat boundary_coords(h, 0, p);
    if (n >= 1) {
        auto hprev = hom_basis(r.terms[n - 1], y);
        for (const auto& f : hprev) {
            auto c = solve(es.hom_matrix, vectorize(f.matrix * r.diffs[n - 1].matrix));
            if (!c) throw construction_error("ext_space: boundary outside hom space");
            boundary_coords = hstack(boundary_coords, *c);
        }
    }
    es.boundary_reduction = SubspaceReduction(image_basis(boundary_coords));
    Mat reduced = es.boundary_reduction.reduce(es.cocycles);
    es.class_basis = image_basis(reduced);
    es.ext = es.class_basis.cols();
    return es;
}

/// Chain map lifting the identity of i(X) from a B-side resolution of iX to
/// the image of an A-side resolution under i.
inline std::vector<ModuleHom> lift_chain_map(const RecollementInstance& inst, const Resolution& ra,
                                             const Resolution& rb, int upto) {
    uint32_t p = inst.B->p;
    std::vector<ModuleHom> u;
    for (int j = 0; j <= upto; ++j) {
        Module src = rb.terms[j];
        Module tgt = inst.i(ra.terms[j]);
        auto hb = hom_basis(src, tgt);
        Mat cols(0, 0, p);
        Mat target_vec(0, 1, p);
        if (j == 0) {
            ModuleHom iaug = inst.i(ra.augmentation);  // i(P_0^A) -> iX
            cols = Mat(iaug.target.dim * src.dim, static_cast<int>(hb.size()), p);
            for (size_t t = 0; t < hb.size(); ++t) {
                Mat img = vectorize(iaug.matrix * hb[t].matrix);
                for (int i = 0; i < img.rows(); ++i) cols(i, static_cast<int>(t)) = img(i, 0);
            }
            target_vec = vectorize(rb.augmentation.matrix);
        } else {
            ModuleHom idiff = inst.i(ra.diffs[j - 1]);  // i(P_j^A) -> i(P_{j-1}^A)
            Mat rhs = u[j - 1].matrix * rb.diffs[j - 1].matrix;
            cols = Mat(idiff.target.dim * src.dim, static_cast<int>(hb.size()), p);
            for (size_t t = 0; t < hb.size(); ++t) {
                Mat img = vectorize(idiff.matrix * hb[t].matrix);
                for (int i = 0; i < img.rows(); ++i) cols(i, static_cast<int>(t)) = img(i, 0);
            }
            target_vec = vectorize(rhs);
        }
        auto coeff = solve(cols, target_vec);
        if (!coeff) throw construction_error("lift_chain_map: comparison lift missing");
        Mat m(tgt.dim, src.dim, p);
        for (size_t t = 0; t < hb.size(); ++t)
            if ((*coeff)(static_cast<int>(t), 0))
                m = m + scale((*coeff)(static_cast<int>(t), 0), hb[t].matrix);
        u.emplace_back(src, tgt, std::move(m));
    }
    return u;
}

}  // namespace detail

/// Degree-bounded homological-embedding check for the inclusion functor i.
/// Fast mode compares Ext dimensions on both sides for n <= k; thorough mode
/// builds the comparison map by lifting resolutions and checks invertibility
/// on cohomology.
inline CheckRecord homological_embedding_degree(const RecollementInstance& inst,
                                                const std::vector<Module>& samplesA, int k,
                                                bool thorough) {
    CheckRecord rec;
    rec.name = "homological embedding to degree " + std::to_string(k);
    rec.mode = thorough ? "thorough" : "fast";
    rec.scope = "A-side sample pairs, degrees 0.." + std::to_string(k);
    size_t limit = std::min<size_t>(samplesA.size(), 5);
    for (size_t a = 0; a < limit; ++a)
        for (size_t b = 0; b < limit; ++b) {
            const Module& X = samplesA[a];
            const Module& Y = samplesA[b];
            Module iX = inst.i(X), iY = inst.i(Y);
            Resolution resA = projective_resolution(X, k + 1);
            Resolution resB = projective_resolution(iX, k + 1);
            std::vector<ModuleHom> lift;
            if (thorough) lift = detail::lift_chain_map(inst, resA, resB, std::min(k, resA.length()));
            for (int n = 0; n <= k; ++n) {
                ++rec.samples;
                int dA = ext_dim(X, Y, n, k + 2);
                int dB = ext_dim(iX, iY, n, k + 2);
                if (dA != dB) {
                    Witness w = detail::module_witness(
                        "Ext^" + std::to_string(n) + " dimension mismatch: " + std::to_string(dA) +
                            " on the A-side vs " + std::to_string(dB) + " on the B-side",
                        X, "X");
                    w.facts.emplace_back("degree", std::to_string(n));
                    rec.fail(std::move(w));
                    continue;
                }
                if (!thorough) continue;
                // comparison map on cohomology classes
                if (n > resA.length() || n > resB.length()) continue;
                detail::ExtSpace ea = detail::ext_space(resA, Y, n);
                detail::ExtSpace eb = detail::ext_space(resB, iY, n);
                if (ea.ext == 0 && eb.ext == 0) continue;
                uint32_t p = inst.B->p;
                Mat cmp(eb.ext, ea.ext, p);
                bool broke = false;
                for (int t = 0; t < ea.ext; ++t) {
                    // representative cocycle on the A-side
                    Mat coords = ea.class_basis.cols() ? Mat::column(ea.class_basis.col_vec(t), p)
                                                       : Mat(0, 1, p);
                    Mat phi(Y.dim, resA.terms[n].dim, p);
                    for (int h = 0; h < coords.rows(); ++h)
                        if (coords(h, 0)) phi = phi + scale(coords(h, 0), ea.hom_basis_n[h].matrix);
                    // image cocycle i(phi) ∘ u_n
                    ModuleHom iphi = inst.i(ModuleHom(resA.terms[n], Y, phi));
                    Mat psi = iphi.matrix * lift[n].matrix;
                    auto cls = eb.class_of(psi, p);
                    if (!cls) {
                        rec.fail(detail::module_witness("comparison image is not a cocycle class",
                                                        X, "X"));
                        broke = true;
                        break;
                    }
                    for (int i2 = 0; i2 < eb.ext; ++i2) cmp(i2, t) = (*cls)(i2, 0);
                }
                if (broke) continue;
                if (!(ea.ext == eb.ext && rank(cmp) == ea.ext)) {
                    Witness w = detail::module_witness(
                        "comparison map not invertible at degree " + std::to_string(n), X, "X");
                    w.matrices.emplace_back("comparison", cmp);
                    w.facts.emplace_back("degree", std::to_string(n));
                    rec.fail(std::move(w));
                }
            }
        }
    return rec;
}

// ---------------------------------------------------------------------------
// Stable-level report
// ---------------------------------------------------------------------------

/// Hom in the homotopy category: stable maps between cofibrant replacements.
inline int ho_hom_dim(const Module& u, const Module& v, const GorensteinProfile& prof) {
    Module qu = cofibrant_replacement(u, prof).replaced;
    Module qv = cofibrant_replacement(v, prof).replaced;
    return stable_hom(qu, qv).dim;
}

/// Stable-level checks: derived-functor values on samples, the four
/// adjunction dimension equalities in Ho, Ker Re membership vs the unit, and
/// the trivial-class coincidence i^{-1}(W_B) = W_A on samples.
inline std::vector<CheckRecord> stable_recollement_report(const RecollementInstance& inst,
                                                          const std::vector<Module>& samplesA,
                                                          const std::vector<Module>& samplesB,
                                                          const std::vector<Module>& samplesC) {
    std::vector<CheckRecord> out;
    size_t nA = std::min<size_t>(samplesA.size(), 4), nB = std::min<size_t>(samplesB.size(), 4),
           nC = std::min<size_t>(samplesC.size(), 4);
    {
        CheckRecord rec;
        rec.name = "stable adjunction Lq -| Ri";
        rec.scope = "Ho-hom dimension equalities on samples";
        for (size_t a = 0; a < nB; ++a)
            for (size_t b = 0; b < nA; ++b) {
                ++rec.samples;
                const Module& X = samplesB[a];
                const Module& Y = samplesA[b];
                Module LqX = inst.q(cofibrant_replacement(X, inst.profB).replaced);
                int lhs = ho_hom_dim(LqX, Y, inst.profA);
                int rhs = ho_hom_dim(X, inst.i(Y), inst.profB);
                if (lhs != rhs) {
                    Witness w = detail::module_witness(
                        "Ho-hom mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs), X,
                        "X");
                    rec.fail(std::move(w));
                }
            }
        out.push_back(std::move(rec));
    }
    {
        CheckRecord rec;
        rec.name = "stable adjunction Li -| Rp";
        rec.scope = "Ho-hom dimension equalities on samples";
        for (size_t a = 0; a < nA; ++a)
            for (size_t b = 0; b < nB; ++b) {
                ++rec.samples;
                const Module& Y = samplesA[a];
                const Module& X = samplesB[b];
                Module RpX = inst.p(fibrant_replacement(X, inst.profB).replaced);
                int lhs = ho_hom_dim(inst.i(Y), X, inst.profB);
                int rhs = ho_hom_dim(Y, RpX, inst.profA);
                if (lhs != rhs)
                    rec.fail(detail::module_witness(
                        "Ho-hom mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs), Y,
                        "Y"));
            }
        out.push_back(std::move(rec));
    }
    {
        CheckRecord rec;
        rec.name = "stable adjunction Ll -| Re";
        rec.scope = "Ho-hom dimension equalities on samples";
        for (size_t a = 0; a < nC; ++a)
            for (size_t b = 0; b < nB; ++b) {
                ++rec.samples;
                const Module& Z = samplesC[a];
                const Module& X = samplesB[b];
                Module LlZ = inst.l(cofibrant_replacement(Z, inst.profC).replaced);
                int lhs = ho_hom_dim(LlZ, X, inst.profB);
                int rhs = ho_hom_dim(Z, inst.e(X), inst.profC);
                if (lhs != rhs)
                    rec.fail(detail::module_witness(
                        "Ho-hom mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs), Z,
                        "Z"));
            }
        out.push_back(std::move(rec));
    }
    {
        CheckRecord rec;
        rec.name = "stable adjunction Le -| Rr";
        rec.scope = "Ho-hom dimension equalities on samples";
        for (size_t a = 0; a < nB; ++a)
            for (size_t b = 0; b < nC; ++b) {
                ++rec.samples;
                const Module& X = samplesB[a];
                const Module& Z = samplesC[b];
                Module RrZ = inst.r(fibrant_replacement(Z, inst.profC).replaced);
                int lhs = ho_hom_dim(inst.e(X), Z, inst.profC);
                int rhs = ho_hom_dim(X, RrZ, inst.profB);
                if (lhs != rhs)
                    rec.fail(detail::module_witness(
                        "Ho-hom mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs), X,
                        "X"));
            }
        out.push_back(std::move(rec));
    }
    {
        CheckRecord rec;
        rec.name = "Ker Re vs essential image of Ri";
        rec.scope = "B-side samples with e(Q X) trivial";
        for (size_t a = 0; a < samplesB.size(); ++a) {
            Module Q = cofibrant_replacement(samplesB[a], inst.profB).replaced;
            if (!is_trivial(inst.e(Q), inst.profC)) continue;
            ++rec.samples;
            ModuleHom eta = inst.unit_qi(Q);
            if (!is_weak_equivalence(eta, inst.profB))
                rec.fail(detail::module_witness("Ker Re sample not reached by Ri", samplesB[a],
                                                "X"));
        }
        out.push_back(std::move(rec));
    }
    {
        CheckRecord rec;
        rec.name = "trivial-class coincidence i^{-1}(W_B) = W_A";
        rec.scope = "A-side samples, both directions";
        for (const Module& y : samplesA) {
            ++rec.samples;
            bool own = is_trivial(y, inst.profA);
            bool lifted = is_trivial(inst.i(y), inst.profB);
            if (own != lifted) {
                Witness w = detail::module_witness(
                    std::string("mismatch: W_A says ") + (own ? "trivial" : "nontrivial") +
                        ", i^{-1}(W_B) says " + (lifted ? "trivial" : "nontrivial"),
                    y, "Y");
                rec.fail(std::move(w));
            }
        }
        out.push_back(std::move(rec));
    }
    if (inst.degenerate) {
        CheckRecord rec;
        rec.name = "degenerate instance";
        rec.notes.push_back(inst.degenerate_reason);
        out.push_back(std::move(rec));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Structural GP test on morphism categories
// ---------------------------------------------------------------------------

/// The structural description of Gorenstein projectives in Mor_n: every map
/// injective, every component GP over the base, every cokernel GP.
inline bool gp_structural_test_morn(const MorSeq& s, const GorensteinProfile& base_prof) {
    s.validate();
    for (const Module& c : s.components)
        if (!is_gp(c, base_prof)) return false;
    for (const ModuleHom& f : s.maps) {
        if (!f.is_injective()) return false;
        if (!is_gp(cokernel(f).module, base_prof)) return false;
    }
    return true;
}

/// All direct sums of the given indecomposables with total dimension <= maxdim
/// (a complete iso-class enumeration when the list is the full indecomposable
/// list, e.g. {k, Λ} for the dual numbers or {S1, S2, P1} for kA2).
inline std::vector<Module> enumerate_sums(const std::vector<Module>& indecs, int maxdim) {
    std::vector<Module> out;
    if (indecs.empty()) return out;
    std::vector<int> counts(indecs.size(), 0), maxc(indecs.size());
    for (size_t i = 0; i < indecs.size(); ++i)
        maxc[i] = indecs[i].dim > 0 ? maxdim / indecs[i].dim : 0;
    while (true) {
        int t = 0;
        for (size_t i = 0; i < indecs.size(); ++i) t += counts[i] * indecs[i].dim;
        if (t <= maxdim) {
            if (t == 0) {
                out.push_back(Module::zero(indecs[0].alg));
            } else {
                std::vector<Module> parts;
                for (size_t i = 0; i < indecs.size(); ++i)
                    for (int c = 0; c < counts[i]; ++c) parts.push_back(indecs[i]);
                out.push_back(direct_sum(parts).module);
            }
        }
        size_t i = 0;
        while (i < counts.size() && ++counts[i] > maxc[i]) counts[i++] = 0;
        if (i == counts.size()) break;
    }
    return out;
}

/// Every Mor_2 object with components from the pool and every connecting map,
/// paired as (structural verdict, Ext verdict). Used by the flagship
/// oracle-equivalence check.
struct GpOracleResult {
    int tested = 0;
    int mismatches = 0;
    std::vector<Witness> witnesses;
};

inline GpOracleResult gp_oracle_equivalence_mor2(const AlgebraPtr& base,
                                                 const std::vector<Module>& component_pool,
                                                 int max_total_dim, int max_maps_per_pair = 4096) {
    GorensteinProfile base_prof = gorenstein_profile(base);
    MornAlgebra T = morn_algebra(base, 2);
    GorensteinProfile big_prof = gorenstein_profile(T.algebra);
    GpOracleResult res;
    uint32_t p = base->p;
    for (const Module& x1 : component_pool)
        for (const Module& x2 : component_pool) {
            if (x1.dim + x2.dim > max_total_dim) continue;
            auto hb = hom_basis(x1, x2);
            const int h = static_cast<int>(hb.size());
            double combos = 1;
            for (int i = 0; i < h; ++i) combos *= p;
            if (combos > max_maps_per_pair) continue;
            std::vector<uint32_t> c(h, 0);
            while (true) {
                Mat m(x2.dim, x1.dim, p);
                for (int i = 0; i < h; ++i)
                    if (c[i]) m = m + scale(c[i], hb[i].matrix);
                MorSeq s{{x1, x2}, {ModuleHom(x1, x2, m)}};
                bool structural = gp_structural_test_morn(s, base_prof);
                bool ext_test = is_gp(morseq_to_module(T, s), big_prof);
                ++res.tested;
                if (structural != ext_test) {
                    ++res.mismatches;
                    Witness w = detail::module_witness("structural vs Ext GP verdict differs", x1,
                                                       "X1");
                    w.facts.emplace_back("structural", structural ? "GP" : "not GP");
                    w.facts.emplace_back("ext", ext_test ? "GP" : "not GP");
                    w.matrices.emplace_back("f", m);
                    res.witnesses.push_back(std::move(w));
                }
                int i = 0;
                while (i < h && ++c[i] == p) c[i++] = 0;
                if (i == h || h == 0) break;
            }
        }
    return res;
}

}  // namespace reclift
