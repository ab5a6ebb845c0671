// The two recollement instances of module categories with their explicit six
// functors and canonical adjunction units/counits:
//
//   idempotent:  Mod Λ/ΛeΛ  --i-->  Mod Λ  --e-->  Mod eΛe
//                with q = Λ/ΛeΛ ⊗_Λ -, p = Hom_Λ(Λ/ΛeΛ, -),
//                     l = Λe ⊗_{eΛe} -, r = Hom_{eΛe}(eΛ, -);
//
//   morphism categories:  Mor_{n-1}(Λ)  --i-->  Mor_n(Λ)  --e-->  Mod Λ
//                with l(Z) = (0→…→0→Z), e(X) = X_n, r(Z) = (Z=Z=…=Z),
//                     q = drop the last component, i = append 0,
//                     p(X) = (Ker(f_{n-1}…f_1) → … → Ker f_{n-1}).

#pragma once

#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "reclift/homological.hpp"

namespace reclift {

struct FunctorHandle {
    enum class Exactness { exact, right_exact, left_exact };

    std::string name;
    AlgebraPtr source_alg;
    AlgebraPtr target_alg;
    Exactness exactness = Exactness::exact;
    std::function<Module(const Module&)> on_objects;
    std::function<ModuleHom(const ModuleHom&)> on_morphisms;

    Module operator()(const Module& x) const { return on_objects(x); }
    ModuleHom operator()(const ModuleHom& f) const { return on_morphisms(f); }
};

/// A recollement of module categories A --i--> B --e--> C with adjoint chains
/// q ⊣ i ⊣ p and l ⊣ e ⊣ r, plus the canonical natural transformations the
/// verifiers exercise.  Gorenstein profiles of the three algebras are carried
/// along for the model-structure checks.
struct RecollementInstance {
    std::string provenance;
    AlgebraPtr A, B, C;
    FunctorHandle q, i, p, l, e, r;

    std::function<ModuleHom(const Module&)> unit_qi;    // X -> i q X        (X over B)
    std::function<ModuleHom(const Module&)> counit_qi;  // q i Y -> Y        (Y over A)
    std::function<ModuleHom(const Module&)> unit_ip;    // Y -> p i Y        (Y over A)
    std::function<ModuleHom(const Module&)> counit_ip;  // i p X -> X        (X over B)
    std::function<ModuleHom(const Module&)> unit_le;    // Z -> e l Z        (Z over C)
    std::function<ModuleHom(const Module&)> counit_le;  // l e X -> X        (X over B)
    std::function<ModuleHom(const Module&)> unit_er;    // X -> r e X        (X over B)
    std::function<ModuleHom(const Module&)> counit_er;  // e r Z -> Z        (Z over C)

    GorensteinProfile profA, profB, profC;
    bool degenerate = false;
    std::string degenerate_reason;
};

// ---------------------------------------------------------------------------
// Idempotent recollement
// ---------------------------------------------------------------------------

namespace detail {

/// Shared construction data for the idempotent instance.
struct IdempotentData {
    AlgebraPtr lambda;
    Vec e;
    CornerAlgebra c;
    Mat ideal = Mat(0, 0, 2);
    QuotientAlgebra quot;
    std::shared_ptr<AlgebraMap> phi;  // Λ -> Λ/ΛeΛ
    Mat le_basis = Mat(0, 0, 2);      // image basis of Λe inside Λ
    Mat el_basis = Mat(0, 0, 2);      // image basis of eΛ inside Λ
    std::shared_ptr<Bimodule> le;     // Λe as (Λ, eΛe)
    std::shared_ptr<Bimodule> el;     // eΛ as (eΛe, Λ)

    Module apply_e(const Module& X) const {
        Mat S = image_basis(X.act(e));
        std::vector<Mat> act;
        for (int j = 0; j < c.algebra->dim; ++j) {
            auto sol = solve(S, X.act(c.embedding.col_vec(j)) * S);
            if (!sol) throw construction_error("e-functor: corner subspace not stable");
            act.push_back(*sol);
        }
        return Module(c.algebra, S.cols(), std::move(act), "e(" + X.name + ")");
    }

    Mat ideal_action_span(const Module& X) const {
        Mat cols(X.dim, 0, X.p());
        for (int j = 0; j < ideal.cols(); ++j) cols = hstack(cols, X.act(ideal.col_vec(j)));
        return image_basis(cols);
    }

    Module apply_q(const Module& X) const {
        SubspaceReduction red(ideal_action_span(X));
        Mat sec = red.section();
        std::vector<Mat> act;
        for (int n = 0; n < quot.algebra->dim; ++n) {
            Vec lift = quot.section.col_vec(n);
            act.push_back(red.project(X.act(lift) * sec));
        }
        return Module(quot.algebra, red.quotient_dim(), std::move(act), "q(" + X.name + ")");
    }

    Module apply_p(const Module& X) const {
        Mat sys(0, X.dim, X.p());
        for (int j = 0; j < ideal.cols(); ++j) sys = vstack(sys, X.act(ideal.col_vec(j)));
        Mat K = kernel_basis(sys);
        std::vector<Mat> act;
        for (int n = 0; n < quot.algebra->dim; ++n) {
            auto sol = solve(K, X.act(quot.section.col_vec(n)) * K);
            if (!sol) throw construction_error("p-functor: annihilator not stable");
            act.push_back(*sol);
        }
        return Module(quot.algebra, K.cols(), std::move(act), "p(" + X.name + ")");
    }
};

}  // namespace detail

inline RecollementInstance idempotent_recollement(const AlgebraPtr& lambda, const Vec& e,
                                                  int profile_bound = 8) {
    if (!lambda->is_idempotent(e)) throw input_error("idempotent_recollement: e not idempotent");
    auto d = std::make_shared<detail::IdempotentData>();
    d->lambda = lambda;
    d->e = e;
    d->c = corner(lambda, e);
    d->ideal = two_sided_ideal(lambda, e);
    d->quot = quotient(lambda, d->ideal);
    d->phi = std::make_shared<AlgebraMap>(lambda, d->quot.algebra, d->quot.projection);
    d->le_basis = image_basis(lambda->right_mult(e));
    d->el_basis = image_basis(lambda->left_mult(e));
    if (!d->c.degenerate) {
        d->le = std::make_shared<Bimodule>(lambda_e_bimodule(lambda, d->c));
        d->el = std::make_shared<Bimodule>(e_lambda_bimodule(lambda, d->c));
    }

    RecollementInstance inst;
    inst.provenance = "idempotent(" + lambda->name + ", e=" + lambda->label_of(e) + ")";
    inst.A = d->quot.algebra;
    inst.B = lambda;
    inst.C = d->c.algebra;
    if (vec_is_zero(e)) {
        inst.degenerate = true;
        inst.degenerate_reason = "e = 0: corner side is the zero category";
    } else if (e == lambda->unit) {
        inst.degenerate = true;
        inst.degenerate_reason = "e = 1: quotient side is the zero category";
    }

    using EX = FunctorHandle::Exactness;
    inst.i = {"i", inst.A, inst.B, EX::exact,
              [d](const Module& y) { return restrict(y, *d->phi); },
              [d](const ModuleHom& f) { return restrict(f, *d->phi); }};
    inst.e = {"e", inst.B, inst.C, EX::exact, [d](const Module& x) { return d->apply_e(x); },
              [d](const ModuleHom& f) {
                  Module es = d->apply_e(f.source), et = d->apply_e(f.target);
                  Mat Ss = image_basis(f.source.act(d->e)), St = image_basis(f.target.act(d->e));
                  auto sol = solve(St, f.matrix * Ss);
                  if (!sol) throw construction_error("e-functor: hom does not restrict");
                  return ModuleHom(es, et, *sol);
              }};
    inst.q = {"q", inst.B, inst.A, EX::right_exact,
              [d](const Module& x) { return d->apply_q(x); },
              [d](const ModuleHom& f) {
                  Module qs = d->apply_q(f.source), qt = d->apply_q(f.target);
                  SubspaceReduction rs(d->ideal_action_span(f.source)),
                      rt(d->ideal_action_span(f.target));
                  return ModuleHom(qs, qt, rt.project(f.matrix * rs.section()));
              }};
    inst.p = {"p", inst.B, inst.A, EX::left_exact,
              [d](const Module& x) { return d->apply_p(x); },
              [d](const ModuleHom& f) {
                  Module ps = d->apply_p(f.source), pt = d->apply_p(f.target);
                  Mat sys_s(0, f.source.dim, f.source.p()), sys_t(0, f.target.dim, f.target.p());
                  for (int j = 0; j < d->ideal.cols(); ++j) {
                      sys_s = vstack(sys_s, f.source.act(d->ideal.col_vec(j)));
                      sys_t = vstack(sys_t, f.target.act(d->ideal.col_vec(j)));
                  }
                  Mat Ks = kernel_basis(sys_s), Kt = kernel_basis(sys_t);
                  auto sol = solve(Kt, f.matrix * Ks);
                  if (!sol) throw construction_error("p-functor: hom does not restrict");
                  return ModuleHom(ps, pt, *sol);
              }};
    inst.l = {"l", inst.C, inst.B, EX::right_exact,
              [d](const Module& z) {
                  if (!d->le) return Module::zero(d->lambda);
                  return tensor_over(*d->le, z).module;
              },
              [d](const ModuleHom& f) {
                  if (!d->le)
                      return ModuleHom(Module::zero(d->lambda), Module::zero(d->lambda),
                                       Mat(0, 0, d->lambda->p));
                  TensorModule ts = tensor_over(*d->le, f.source), tt = tensor_over(*d->le, f.target);
                  return tensor_over(*d->le, f, ts, tt);
              }};
    inst.r = {"r", inst.C, inst.B, EX::left_exact,
              [d](const Module& z) {
                  if (!d->el) return Module::zero(d->lambda);
                  Module m = hom_over(*d->el, z).module;
                  // hom_over produces a module over el->right_alg == Λ
                  return m;
              },
              [d](const ModuleHom& f) {
                  if (!d->el)
                      return ModuleHom(Module::zero(d->lambda), Module::zero(d->lambda),
                                       Mat(0, 0, d->lambda->p));
                  HomModule hs = hom_over(*d->el, f.source), ht = hom_over(*d->el, f.target);
                  return hom_over(*d->el, f, hs, ht);
              }};

    // canonical natural maps
    inst.unit_qi = [d, inst_i = inst.i, inst_q = inst.q](const Module& X) {
        Module iqX = inst_i(inst_q(X));
        SubspaceReduction red(d->ideal_action_span(X));
        return ModuleHom(X, iqX, red.project(Mat::identity(X.dim, X.p())));
    };
    inst.counit_qi = [inst_i = inst.i, inst_q = inst.q](const Module& Y) {
        Module qiY = inst_q(inst_i(Y));
        if (qiY.dim != Y.dim) throw construction_error("counit_qi: dimension mismatch");
        return ModuleHom(qiY, Y, Mat::identity(Y.dim, Y.p()));
    };
    inst.unit_ip = [inst_i = inst.i, inst_p = inst.p](const Module& Y) {
        Module piY = inst_p(inst_i(Y));
        if (piY.dim != Y.dim) throw construction_error("unit_ip: dimension mismatch");
        return ModuleHom(Y, piY, Mat::identity(Y.dim, Y.p()));
    };
    inst.counit_ip = [d, inst_i = inst.i, inst_p = inst.p](const Module& X) {
        Module ipX = inst_i(inst_p(X));
        Mat sys(0, X.dim, X.p());
        for (int j = 0; j < d->ideal.cols(); ++j) sys = vstack(sys, X.act(d->ideal.col_vec(j)));
        return ModuleHom(ipX, X, kernel_basis(sys));
    };
    inst.unit_le = [d, inst_e = inst.e, inst_l = inst.l](const Module& Z) {
        Module elZ = inst_e(inst_l(Z));
        if (!d->le) return ModuleHom(Z, elZ, Mat(elZ.dim, Z.dim, Z.p()));
        TensorModule lZ = tensor_over(*d->le, Z);
        Mat S = image_basis(lZ.module.act(d->e));
        auto ecoords = solve(d->le_basis, Mat::column(d->e, Z.p()));
        if (!ecoords) throw construction_error("unit_le: e outside Λe");
        Mat m(elZ.dim, Z.dim, Z.p());
        for (int j = 0; j < Z.dim; ++j) {
            Mat full(d->le->dim * Z.dim, 1, Z.p());
            for (int a = 0; a < d->le->dim; ++a) full(a * Z.dim + j, 0) = (*ecoords)(a, 0);
            auto coords = solve(S, lZ.proj * full);
            if (!coords) throw construction_error("unit_le: image outside e-part");
            for (int r_ = 0; r_ < elZ.dim; ++r_) m(r_, j) = (*coords)(r_, 0);
        }
        return ModuleHom(Z, elZ, std::move(m));
    };
    inst.counit_le = [d, inst_e = inst.e, inst_l = inst.l](const Module& X) {
        Module leX = inst_l(inst_e(X));
        if (!d->le) return ModuleHom(leX, X, Mat(X.dim, 0, X.p()));
        Module eX = d->apply_e(X);
        Mat SX = image_basis(X.act(d->e));
        TensorModule t = tensor_over(*d->le, eX);
        Mat full(X.dim, d->le->dim * eX.dim, X.p());
        for (int a = 0; a < d->le->dim; ++a) {
            Mat actL = X.act(d->le_basis.col_vec(a));
            for (int b = 0; b < eX.dim; ++b) {
                Vec img = apply_vec(actL, SX.col_vec(b));
                for (int r_ = 0; r_ < X.dim; ++r_) full(r_, a * eX.dim + b) = img[r_];
            }
        }
        return ModuleHom(leX, X, full * t.section);
    };
    inst.unit_er = [d, inst_e = inst.e, inst_r = inst.r](const Module& X) {
        Module reX = inst_r(inst_e(X));
        if (!d->el) return ModuleHom(X, reX, Mat(reX.dim, X.dim, X.p()));
        Module eX = d->apply_e(X);
        Mat SX = image_basis(X.act(d->e));
        HomModule h = hom_over(*d->el, eX);
        Mat m(reX.dim, X.dim, X.p());
        for (int j = 0; j < X.dim; ++j) {
            // F_j : eΛ -> eX, u ↦ e-part of u·x_j
            Mat F(eX.dim, d->el->dim, X.p());
            for (int a = 0; a < d->el->dim; ++a) {
                Mat img = Mat::column(apply_vec(X.act(d->el_basis.col_vec(a)), vec_unit(X.dim, j)),
                                      X.p());
                auto coord = solve(SX, img);
                if (!coord) throw construction_error("unit_er: value outside e-part");
                for (int r_ = 0; r_ < eX.dim; ++r_) F(r_, a) = (*coord)(r_, 0);
            }
            auto coords = solve(h.basis, vectorize(F));
            if (!coords) throw construction_error("unit_er: map not eΛe-linear");
            for (int r_ = 0; r_ < reX.dim; ++r_) m(r_, j) = (*coords)(r_, 0);
        }
        return ModuleHom(X, reX, std::move(m));
    };
    inst.counit_er = [d, inst_e = inst.e, inst_r = inst.r](const Module& Z) {
        Module erZ = inst_e(inst_r(Z));
        if (!d->el) return ModuleHom(erZ, Z, Mat(Z.dim, 0, Z.p()));
        HomModule h = hom_over(*d->el, Z);
        Mat S = image_basis(h.module.act(d->e));
        auto u = solve(d->el_basis, Mat::column(d->e, Z.p()));
        if (!u) throw construction_error("counit_er: e outside eΛ");
        Mat m(Z.dim, erZ.dim, Z.p());
        for (int s = 0; s < S.cols(); ++s) {
            Mat F = unvectorize(Mat::column(apply_vec(h.basis, S.col_vec(s)), Z.p()), Z.dim,
                                d->el->dim);
            Mat val = F * *u;
            for (int r_ = 0; r_ < Z.dim; ++r_) m(r_, s) = val(r_, 0);
        }
        return ModuleHom(erZ, Z, std::move(m));
    };

    inst.profA = gorenstein_profile(inst.A, profile_bound);
    inst.profB = gorenstein_profile(inst.B, profile_bound);
    inst.profC = gorenstein_profile(inst.C, profile_bound);
    return inst;
}

// ---------------------------------------------------------------------------
// Morphism-category recollement
// ---------------------------------------------------------------------------

namespace detail {

struct MornData {
    MornAlgebra big;    // T_n
    MornAlgebra small;  // T_{n-1}
    AlgebraPtr base;
    int n = 0;

    /// Change of basis X -> block coordinates (the stacked vertex bases).
    Mat block_basis(const Module& X, const MornAlgebra& T) const {
        Mat B(X.dim, 0, X.p());
        for (int v = 0; v < T.n; ++v) B = hstack(B, image_basis(X.act(T.vertex_idempotents[v])));
        if (B.cols() != X.dim) throw construction_error("morn: vertex blocks do not fill module");
        return B;
    }

    /// X in its own coordinates -> the block-coordinate model, as an iso.
    ModuleHom canon(const Module& X, const MornAlgebra& T) const {
        MorSeq s = module_to_morseq(T, X);
        Module blockX = morseq_to_module(T, s);
        Mat B = block_basis(X, T);
        auto Binv = inverse(B);
        if (!Binv) throw construction_error("morn: block basis not invertible");
        return ModuleHom(X, blockX, *Binv);
    }

    MorSeq seq_append_zero(const MorSeq& s) const {
        MorSeq out = s;
        Module z = Module::zero(base);
        out.maps.emplace_back(s.components.back(), z, Mat(0, s.components.back().dim, base->p));
        out.components.push_back(z);
        return out;
    }

    MorSeq seq_drop_last(const MorSeq& s) const {
        MorSeq out;
        out.components.assign(s.components.begin(), s.components.end() - 1);
        out.maps.assign(s.maps.begin(), s.maps.end() - 1);
        return out;
    }

    /// p(X): kernels of the composites into the last component.
    MorSeq seq_kernels(const MorSeq& s, std::vector<Mat>* kernel_bases = nullptr) const {
        const int n_ = s.length();
        MorSeq out;
        std::vector<Mat> bases;
        for (int k = 0; k < n_ - 1; ++k) {
            Mat comp = Mat::identity(s.components[k].dim, base->p);
            for (int t = k; t < n_ - 1; ++t) comp = s.maps[t].matrix * comp;
            Mat K = kernel_basis(comp);
            std::vector<Mat> act;
            for (int b = 0; b < base->dim; ++b) {
                auto sol = solve(K, s.components[k].action[b] * K);
                if (!sol) throw construction_error("morn p: kernel not stable");
                act.push_back(*sol);
            }
            out.components.emplace_back(base, K.cols(), std::move(act), "ker");
            bases.push_back(K);
        }
        for (int k = 0; k + 1 < n_ - 1; ++k) {
            auto sol = solve(bases[k + 1], s.maps[k].matrix * bases[k]);
            if (!sol) throw construction_error("morn p: induced map missing");
            out.maps.emplace_back(out.components[k], out.components[k + 1], *sol);
        }
        if (kernel_bases) *kernel_bases = bases;
        return out;
    }
};

}  // namespace detail

inline RecollementInstance morn_recollement(const AlgebraPtr& base, int n, int profile_bound = 8) {
    if (n < 2) throw input_error("morn_recollement: n must be >= 2");
    auto d = std::make_shared<detail::MornData>();
    d->base = base;
    d->n = n;
    d->big = morn_algebra(base, n);
    d->small = morn_algebra(base, n - 1);

    RecollementInstance inst;
    inst.provenance = "morn(" + base->name + ", n=" + std::to_string(n) + ")";
    inst.A = d->small.algebra;
    inst.B = d->big.algebra;
    inst.C = base;

    using EX = FunctorHandle::Exactness;
    auto to_seq_big = [d](const Module& X) { return module_to_morseq(d->big, X); };
    auto to_seq_small = [d](const Module& Y) { return module_to_morseq(d->small, Y); };

    inst.i = {"i", inst.A, inst.B, EX::exact,
              [d, to_seq_small](const Module& y) {
                  return morseq_to_module(d->big, d->seq_append_zero(to_seq_small(y)));
              },
              [d, to_seq_small](const ModuleHom& f) {
                  MorSeq ss = to_seq_small(f.source), st = to_seq_small(f.target);
                  MorSeqHom h = hom_to_morseq(d->small, f, ss, st);
                  MorSeq es = d->seq_append_zero(ss), et = d->seq_append_zero(st);
                  MorSeqHom eh = h;
                  Module z = Module::zero(d->base);
                  eh.components.emplace_back(z, z, Mat(0, 0, d->base->p));
                  Module Ms = morseq_to_module(d->big, es), Mt = morseq_to_module(d->big, et);
                  return morseqhom_to_hom(d->big, eh, Ms, Mt, es, et);
              }};
    inst.q = {"q", inst.B, inst.A, EX::exact,
              [d, to_seq_big](const Module& x) {
                  return morseq_to_module(d->small, d->seq_drop_last(to_seq_big(x)));
              },
              [d, to_seq_big](const ModuleHom& f) {
                  MorSeq ss = to_seq_big(f.source), st = to_seq_big(f.target);
                  MorSeqHom h = hom_to_morseq(d->big, f, ss, st);
                  MorSeq qs = d->seq_drop_last(ss), qt = d->seq_drop_last(st);
                  MorSeqHom qh;
                  qh.components.assign(h.components.begin(), h.components.end() - 1);
                  Module Ms = morseq_to_module(d->small, qs), Mt = morseq_to_module(d->small, qt);
                  return morseqhom_to_hom(d->small, qh, Ms, Mt, qs, qt);
              }};
    inst.p = {"p", inst.B, inst.A, EX::left_exact,
              [d, to_seq_big](const Module& x) {
                  return morseq_to_module(d->small, d->seq_kernels(to_seq_big(x)));
              },
              [d, to_seq_big](const ModuleHom& f) {
                  MorSeq ss = to_seq_big(f.source), st = to_seq_big(f.target);
                  MorSeqHom h = hom_to_morseq(d->big, f, ss, st);
                  std::vector<Mat> kbs, kbt;
                  MorSeq ps = d->seq_kernels(ss, &kbs), pt = d->seq_kernels(st, &kbt);
                  MorSeqHom ph;
                  for (int k = 0; k + 1 < d->n; ++k) {
                      auto sol = solve(kbt[k], h.components[k].matrix * kbs[k]);
                      if (!sol) throw construction_error("morn p: hom does not restrict");
                      ph.components.emplace_back(ps.components[k], pt.components[k], *sol);
                  }
                  Module Ms = morseq_to_module(d->small, ps), Mt = morseq_to_module(d->small, pt);
                  return morseqhom_to_hom(d->small, ph, Ms, Mt, ps, pt);
              }};
    inst.e = {"e", inst.B, inst.C, EX::exact,
              [d, to_seq_big](const Module& x) { return to_seq_big(x).components.back(); },
              [d, to_seq_big](const ModuleHom& f) {
                  MorSeq ss = to_seq_big(f.source), st = to_seq_big(f.target);
                  MorSeqHom h = hom_to_morseq(d->big, f, ss, st);
                  return h.components.back();
              }};
    inst.l = {"l", inst.C, inst.B, EX::exact,
              [d](const Module& z) {
                  MorSeq s;
                  Module zero = Module::zero(d->base);
                  for (int v = 0; v + 1 < d->n; ++v) s.components.push_back(zero);
                  s.components.push_back(z);
                  for (int v = 0; v + 2 < d->n; ++v)
                      s.maps.emplace_back(zero, zero, Mat(0, 0, d->base->p));
                  s.maps.emplace_back(zero, z, Mat(z.dim, 0, d->base->p));
                  return morseq_to_module(d->big, s);
              },
              [d, inst_l_obj = 0](const ModuleHom& f) {
                  Module zero = Module::zero(d->base);
                  MorSeq ss, st;
                  for (int v = 0; v + 1 < d->n; ++v) {
                      ss.components.push_back(zero);
                      st.components.push_back(zero);
                  }
                  ss.components.push_back(f.source);
                  st.components.push_back(f.target);
                  for (int v = 0; v + 2 < d->n; ++v) {
                      ss.maps.emplace_back(zero, zero, Mat(0, 0, d->base->p));
                      st.maps.emplace_back(zero, zero, Mat(0, 0, d->base->p));
                  }
                  ss.maps.emplace_back(zero, f.source, Mat(f.source.dim, 0, d->base->p));
                  st.maps.emplace_back(zero, f.target, Mat(f.target.dim, 0, d->base->p));
                  MorSeqHom h;
                  for (int v = 0; v + 1 < d->n; ++v)
                      h.components.emplace_back(zero, zero, Mat(0, 0, d->base->p));
                  h.components.emplace_back(f);
                  Module Ms = morseq_to_module(d->big, ss), Mt = morseq_to_module(d->big, st);
                  return morseqhom_to_hom(d->big, h, Ms, Mt, ss, st);
              }};
    inst.r = {"r", inst.C, inst.B, EX::exact,
              [d](const Module& z) {
                  MorSeq s;
                  for (int v = 0; v < d->n; ++v) s.components.push_back(z);
                  for (int v = 0; v + 1 < d->n; ++v) s.maps.push_back(ModuleHom::identity(z));
                  return morseq_to_module(d->big, s);
              },
              [d](const ModuleHom& f) {
                  MorSeq ss, st;
                  for (int v = 0; v < d->n; ++v) {
                      ss.components.push_back(f.source);
                      st.components.push_back(f.target);
                  }
                  for (int v = 0; v + 1 < d->n; ++v) {
                      ss.maps.push_back(ModuleHom::identity(f.source));
                      st.maps.push_back(ModuleHom::identity(f.target));
                  }
                  MorSeqHom h;
                  for (int v = 0; v < d->n; ++v) h.components.push_back(f);
                  Module Ms = morseq_to_module(d->big, ss), Mt = morseq_to_module(d->big, st);
                  return morseqhom_to_hom(d->big, h, Ms, Mt, ss, st);
              }};

    // canonical natural maps (built blockwise, conjugated by the canonical iso)
    inst.unit_qi = [d, inst_i = inst.i, inst_q = inst.q](const Module& X) {
        MorSeq s = module_to_morseq(d->big, X);
        Module iqX = inst_i(inst_q(X));
        // block map: identity on the first n-1 components, zero on the last
        Mat B = d->block_basis(X, d->big);
        auto Binv = inverse(B);
        if (!Binv) throw construction_error("unit_qi: block basis");
        int keep = 0;
        for (int v = 0; v + 1 < d->n; ++v) keep += s.components[v].dim;
        Mat m(iqX.dim, X.dim, X.p());
        for (int r_ = 0; r_ < keep; ++r_)
            for (int c_ = 0; c_ < X.dim; ++c_) m(r_, c_) = (*Binv)(r_, c_);
        return ModuleHom(X, iqX, std::move(m));
    };
    inst.counit_qi = [d, inst_i = inst.i, inst_q = inst.q](const Module& Y) {
        Module qiY = inst_q(inst_i(Y));
        Mat B = d->block_basis(Y, d->small);
        // q(i(Y)) is the block model of Y: counit = inclusion of blocks back
        if (qiY.dim != Y.dim) throw construction_error("counit_qi: dimension mismatch");
        return ModuleHom(qiY, Y, B);
    };
    inst.unit_ip = [d, inst_i = inst.i, inst_p = inst.p](const Module& Y) {
        Module piY = inst_p(inst_i(Y));
        if (piY.dim != Y.dim) throw construction_error("unit_ip: dimension mismatch");
        Mat B = d->block_basis(Y, d->small);
        auto Binv = inverse(B);
        if (!Binv) throw construction_error("unit_ip: block basis");
        return ModuleHom(Y, piY, *Binv);
    };
    inst.counit_ip = [d, inst_i = inst.i, inst_p = inst.p](const Module& X) {
        Module ipX = inst_i(inst_p(X));
        MorSeq s = module_to_morseq(d->big, X);
        std::vector<Mat> kbs;
        d->seq_kernels(s, &kbs);
        // block-diagonal inclusion K_k ↪ X_k, and 0 -> X_n
        Mat B = d->block_basis(X, d->big);
        Mat m(X.dim, ipX.dim, X.p());
        int roff = 0, coff = 0;
        for (int v = 0; v + 1 < d->n; ++v) {
            const Mat& K = kbs[v];
            for (int i2 = 0; i2 < K.rows(); ++i2)
                for (int j2 = 0; j2 < K.cols(); ++j2) m(roff + i2, coff + j2) = K(i2, j2);
            roff += s.components[v].dim;
            coff += K.cols();
        }
        return ModuleHom(ipX, X, B * m);
    };
    inst.unit_le = [d, inst_e = inst.e, inst_l = inst.l](const Module& Z) {
        Module elZ = inst_e(inst_l(Z));
        if (elZ.dim != Z.dim) throw construction_error("unit_le: dimension mismatch");
        return ModuleHom(Z, elZ, Mat::identity(Z.dim, Z.p()));
    };
    inst.counit_le = [d, inst_e = inst.e, inst_l = inst.l](const Module& X) {
        Module leX = inst_l(inst_e(X));
        MorSeq s = module_to_morseq(d->big, X);
        Mat B = d->block_basis(X, d->big);
        // place the last block
        Mat m(X.dim, leX.dim, X.p());
        int last_off = 0;
        for (int v = 0; v + 1 < d->n; ++v) last_off += s.components[v].dim;
        for (int i2 = 0; i2 < leX.dim; ++i2) m(last_off + i2, i2) = 1;
        return ModuleHom(leX, X, B * m);
    };
    inst.unit_er = [d, inst_e = inst.e, inst_r = inst.r](const Module& X) {
        Module reX = inst_r(inst_e(X));
        MorSeq s = module_to_morseq(d->big, X);
        Mat B = d->block_basis(X, d->big);
        auto Binv = inverse(B);
        if (!Binv) throw construction_error("unit_er: block basis");
        // row blocks: composite f_{n-1}…f_v : X_v -> X_n per vertex
        Module Xn = s.components.back();
        Mat m(reX.dim, X.dim, X.p());
        int roff = 0, coff = 0;
        for (int v = 0; v < d->n; ++v) {
            Mat comp = Mat::identity(s.components[v].dim, X.p());
            for (int t = v; t + 1 < d->n; ++t) comp = s.maps[t].matrix * comp;
            for (int i2 = 0; i2 < comp.rows(); ++i2)
                for (int j2 = 0; j2 < comp.cols(); ++j2) m(roff + i2, coff + j2) = comp(i2, j2);
            roff += Xn.dim;
            coff += s.components[v].dim;
        }
        return ModuleHom(X, reX, m * *Binv);
    };
    inst.counit_er = [d, inst_e = inst.e, inst_r = inst.r](const Module& Z) {
        Module erZ = inst_e(inst_r(Z));
        if (erZ.dim != Z.dim) throw construction_error("counit_er: dimension mismatch");
        return ModuleHom(erZ, Z, Mat::identity(Z.dim, Z.p()));
    };

    inst.profA = gorenstein_profile(inst.A, profile_bound);
    inst.profB = gorenstein_profile(inst.B, profile_bound);
    inst.profC = gorenstein_profile(inst.C, profile_bound);
    return inst;
}

// ---------------------------------------------------------------------------
// Engineered corruption (negative control)
// ---------------------------------------------------------------------------

/// Replaces i by the zero functor (and the natural maps touching i by zero
/// maps): the resulting instance must fail verify_recollement_axioms.
inline RecollementInstance make_corrupt_zero_i(RecollementInstance inst) {
    AlgebraPtr B = inst.B;
    FunctorHandle zero_i = inst.i;
    zero_i.on_objects = [B](const Module&) { return Module::zero(B); };
    zero_i.on_morphisms = [B](const ModuleHom&) {
        Module z = Module::zero(B);
        return ModuleHom(z, z, Mat(0, 0, B->p));
    };
    FunctorHandle q = inst.q, p = inst.p;
    inst.i = zero_i;
    inst.unit_qi = [q, zero_i](const Module& X) {
        return ModuleHom(X, zero_i(q(X)), Mat(0, X.dim, X.p()));
    };
    inst.counit_qi = [q, zero_i](const Module& Y) {
        return ModuleHom(q(zero_i(Y)), Y, Mat(Y.dim, 0, Y.p()));
    };
    inst.unit_ip = [p, zero_i](const Module& Y) {
        return ModuleHom(Y, p(zero_i(Y)), Mat(p(zero_i(Y)).dim, Y.dim, Y.p()));
    };
    inst.counit_ip = [p, zero_i](const Module& X) {
        return ModuleHom(zero_i(p(X)), X, Mat(X.dim, 0, X.p()));
    };
    inst.provenance += " [corrupted: i := 0]";
    return inst;
}

}  // namespace reclift
