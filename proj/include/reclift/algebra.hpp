// Finite-dimensional associative unital algebras over GF(p): bound quiver
// presentations, structure-constant tables, opposite algebras, corners eΛe,
// two-sided ideals ΛeΛ, quotients Λ/ΛeΛ, triangular matrix algebras and the
// n-morphism-category algebras T_n(Λ).
//
// Composition convention: p·q means "first q, then p" (function order).  A
// left module over a path algebra is a representation with each arrow acting
// as a map V_source -> V_target.

#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "reclift/linalg.hpp"

namespace reclift {

/// Thrown when an operation needs idempotent/radical data the algebra lacks.
struct unsupported_algebra_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// AlgebraSpec
// ---------------------------------------------------------------------------

/// A finite-dimensional associative unital algebra given by a basis and a full
/// multiplication table, together with a complete list of primitive orthogonal
/// idempotents and a radical basis (both may be absent for raw
/// structure-constant input; they are auto-derived for quiver presentations).
///
/// Associativity, unit laws, idempotent laws and radical two-sidedness plus
/// nilpotency are checked at construction; construction fails loudly.
class AlgebraSpec {
public:
    uint32_t p;
    int dim;
    std::string name;
    std::vector<std::string> labels;
    // table[i][j] = coordinates of b_i · b_j
    std::vector<std::vector<Vec>> table;
    Vec unit;
    std::vector<Vec> idempotents;  // complete primitive orthogonal list, or empty if unknown
    std::vector<Vec> radical;      // basis of rad(Λ), meaningful when idempotents known

    AlgebraSpec(uint32_t p_, int dim_, std::string name_, std::vector<std::string> labels_,
                std::vector<std::vector<Vec>> table_, Vec unit_, std::vector<Vec> idem,
                std::vector<Vec> rad)
        : p(p_),
          dim(dim_),
          name(std::move(name_)),
          labels(std::move(labels_)),
          table(std::move(table_)),
          unit(std::move(unit_)),
          idempotents(std::move(idem)),
          radical(std::move(rad)) {
        validate();
    }

    bool is_zero_algebra() const { return dim == 0; }
    bool has_idempotent_data() const { return dim == 0 || !idempotents.empty(); }

    Vec mult(const Vec& x, const Vec& y) const {
        Fp f(p);
        Vec r(dim, 0);
        for (int i = 0; i < dim; ++i) {
            if (!x[i]) continue;
            for (int j = 0; j < dim; ++j) {
                if (!y[j]) continue;
                uint32_t c = f.mul(x[i], y[j]);
                const Vec& t = table[i][j];
                for (int k = 0; k < dim; ++k)
                    if (t[k]) r[k] = f.add(r[k], f.mul(c, t[k]));
            }
        }
        return r;
    }

    /// Matrix of x ↦ a·x.
    Mat left_mult(const Vec& a) const {
        Mat m(dim, dim, p);
        for (int j = 0; j < dim; ++j) {
            Vec col = mult(a, vec_unit(dim, j));
            for (int i = 0; i < dim; ++i) m(i, j) = col[i];
        }
        return m;
    }

    /// Matrix of x ↦ x·a.
    Mat right_mult(const Vec& a) const {
        Mat m(dim, dim, p);
        for (int j = 0; j < dim; ++j) {
            Vec col = mult(vec_unit(dim, j), a);
            for (int i = 0; i < dim; ++i) m(i, j) = col[i];
        }
        return m;
    }

    bool is_idempotent(const Vec& e) const { return mult(e, e) == e; }

    std::string label_of(const Vec& v) const {
        std::string s;
        for (int i = 0; i < dim; ++i) {
            if (!v[i]) continue;
            if (!s.empty()) s += "+";
            if (v[i] != 1) s += std::to_string(v[i]) + "*";
            s += labels[i];
        }
        return s.empty() ? "0" : s;
    }

private:
    void validate() const {
        if (dim == 0) {
            if (!idempotents.empty() || !radical.empty() || !unit.empty())
                throw construction_error("zero algebra carries nonzero data");
            return;
        }
        if (static_cast<int>(labels.size()) != dim || static_cast<int>(table.size()) != dim ||
            static_cast<int>(unit.size()) != dim)
            throw construction_error("algebra field sizes inconsistent");
        for (const auto& row : table) {
            if (static_cast<int>(row.size()) != dim) throw construction_error("table not square");
            for (const auto& v : row)
                if (static_cast<int>(v.size()) != dim) throw construction_error("table entry wrong length");
        }
        // unit laws
        for (int i = 0; i < dim; ++i) {
            Vec b = vec_unit(dim, i);
            if (mult(unit, b) != b || mult(b, unit) != b)
                throw construction_error("unit law fails at basis " + labels[i]);
        }
        // associativity on all basis triples
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) {
                const Vec& ij = table[i][j];
                for (int k = 0; k < dim; ++k) {
                    Vec lhs = mult(ij, vec_unit(dim, k));
                    Vec rhs = mult(vec_unit(dim, i), table[j][k]);
                    if (lhs != rhs)
                        throw construction_error("associativity fails at (" + labels[i] + "," +
                                                 labels[j] + "," + labels[k] + ")");
                }
            }
        if (!idempotents.empty()) {
            Vec sum(dim, 0);
            for (size_t a = 0; a < idempotents.size(); ++a) {
                const Vec& e = idempotents[a];
                if (mult(e, e) != e) throw construction_error("idempotent fails e^2=e");
                for (size_t b = 0; b < idempotents.size(); ++b)
                    if (a != b && !vec_is_zero(mult(e, idempotents[b])))
                        throw construction_error("idempotents not orthogonal");
                sum = vec_add(sum, e, p);
            }
            if (sum != unit) throw construction_error("idempotents do not sum to 1");
            validate_radical();
        }
    }

    void validate_radical() const {
        if (radical.empty()) return;
        Mat rad = mat_from_columns(radical, dim, p);
        // two-sided: b_i·r and r·b_i stay in the span
        for (int i = 0; i < dim; ++i) {
            Vec b = vec_unit(dim, i);
            for (const Vec& r : radical) {
                Mat lr = Mat::column(mult(b, r), p);
                Mat rr = Mat::column(mult(r, b), p);
                if (!subspace_contains(rad, lr) || !subspace_contains(rad, rr))
                    throw construction_error("radical basis is not a two-sided ideal");
            }
        }
        // nilpotency: iterated products reach 0 within dim steps
        std::vector<Vec> power = radical;
        for (int step = 0; step < dim + 1 && !power.empty(); ++step) {
            std::vector<Vec> next;
            for (const Vec& x : power)
                for (const Vec& r : radical) {
                    Vec prod = mult(x, r);
                    if (!vec_is_zero(prod)) next.push_back(prod);
                }
            if (next.empty()) return;
            Mat span = image_basis(mat_from_columns(next, dim, p));
            power.clear();
            for (int j = 0; j < span.cols(); ++j) power.push_back(span.col_vec(j));
        }
        if (!power.empty()) throw construction_error("radical is not nilpotent");
    }
};

using AlgebraPtr = std::shared_ptr<const AlgebraSpec>;

/// A unit-preserving multiplicative linear map between algebras, verified on
/// basis pairs at construction.
struct AlgebraMap {
    AlgebraPtr source;
    AlgebraPtr target;
    Mat matrix;  // target.dim × source.dim

    AlgebraMap(AlgebraPtr src, AlgebraPtr tgt, Mat m)
        : source(std::move(src)), target(std::move(tgt)), matrix(std::move(m)) {
        if (matrix.rows() != target->dim || matrix.cols() != source->dim)
            throw input_error("algebra map shape mismatch");
        if (source->dim == 0) return;
        if (target->dim == 0) return;  // zero algebra target: the zero map is the algebra map
        if (apply_vec(matrix, source->unit) != target->unit)
            throw input_error("algebra map does not preserve the unit");
        for (int i = 0; i < source->dim; ++i)
            for (int j = 0; j < source->dim; ++j) {
                Vec lhs = apply_vec(matrix, source->table[i][j]);
                Vec rhs = target->mult(apply_vec(matrix, vec_unit(source->dim, i)),
                                       apply_vec(matrix, vec_unit(source->dim, j)));
                if (lhs != rhs) throw input_error("algebra map is not multiplicative");
            }
    }

    Vec operator()(const Vec& v) const { return apply_vec(matrix, v); }
};

// ---------------------------------------------------------------------------
// Bimodule
// ---------------------------------------------------------------------------

/// A finite-dimensional (A,B)-bimodule: commuting left A-action and right
/// B-action on a coordinate space.
struct Bimodule {
    AlgebraPtr left_alg;
    AlgebraPtr right_alg;
    int dim;
    std::vector<Mat> left_action;   // per left_alg basis element
    std::vector<Mat> right_action;  // per right_alg basis element

    Bimodule(AlgebraPtr la, AlgebraPtr ra, int d, std::vector<Mat> lact, std::vector<Mat> ract)
        : left_alg(std::move(la)),
          right_alg(std::move(ra)),
          dim(d),
          left_action(std::move(lact)),
          right_action(std::move(ract)) {
        validate();
    }

    Mat left(const Vec& a) const { return combine(left_action, a, left_alg->p); }
    Mat right(const Vec& b) const { return combine(right_action, b, right_alg->p); }

private:
    static Mat combine(const std::vector<Mat>& acts, const Vec& x, uint32_t p) {
        Mat r(acts.empty() ? 0 : acts[0].rows(), acts.empty() ? 0 : acts[0].cols(), p);
        for (size_t i = 0; i < x.size(); ++i)
            if (x[i]) r = r + scale(x[i], acts[i]);
        return r;
    }

    void validate() const {
        uint32_t p = left_alg->p;
        if (right_alg->p != p) throw input_error("bimodule: mixed characteristics");
        if (static_cast<int>(left_action.size()) != left_alg->dim ||
            static_cast<int>(right_action.size()) != right_alg->dim)
            throw input_error("bimodule: action list sizes");
        for (const Mat& m : left_action)
            if (m.rows() != dim || m.cols() != dim) throw input_error("bimodule: action shape");
        for (const Mat& m : right_action)
            if (m.rows() != dim || m.cols() != dim) throw input_error("bimodule: action shape");
        if (dim == 0) return;
        Mat id = Mat::identity(dim, p);
        if (left(left_alg->unit) != id || right(right_alg->unit) != id)
            throw input_error("bimodule: unit does not act as identity");
        // left action multiplicative, right action anti-multiplicative
        for (int i = 0; i < left_alg->dim; ++i)
            for (int j = 0; j < left_alg->dim; ++j)
                if (left_action[i] * left_action[j] != left(left_alg->table[i][j]))
                    throw input_error("bimodule: left action not a representation");
        for (int i = 0; i < right_alg->dim; ++i)
            for (int j = 0; j < right_alg->dim; ++j)
                if (right_action[j] * right_action[i] != right(right_alg->table[i][j]))
                    throw input_error("bimodule: right action not a right representation");
        for (int i = 0; i < left_alg->dim; ++i)
            for (int j = 0; j < right_alg->dim; ++j)
                if (left_action[i] * right_action[j] != right_action[j] * left_action[i])
                    throw input_error("bimodule: left and right actions do not commute");
    }
};

// ---------------------------------------------------------------------------
// Quiver presentations
// ---------------------------------------------------------------------------

struct QuiverArrow {
    std::string label;
    int source;
    int target;
};

/// One summand of a relation: coeff * (arrow list, first applied first).
struct PathTerm {
    Scalar coeff;
    std::vector<int> arrows;
};

struct QuiverRelation {
    std::vector<PathTerm> terms;
};

struct QuiverPresentation {
    uint32_t p;
    std::vector<std::string> vertices;
    std::vector<QuiverArrow> arrows;
    std::vector<QuiverRelation> relations;
    int degree_bound = 64;
    std::string name = "quiver-algebra";
};

namespace detail {

struct Path {
    int source;
    int target;
    std::vector<int> arrows;  // applied in order
};

inline std::string path_label(const QuiverPresentation& q, const Path& path) {
    if (path.arrows.empty()) return "e_" + q.vertices[path.source];
    std::string s;
    // function order: the last-applied arrow is written leftmost
    for (auto it = path.arrows.rbegin(); it != path.arrows.rend(); ++it) {
        if (!s.empty()) s += "*";
        s += q.arrows[*it].label;
    }
    return s;
}

}  // namespace detail

/// Builds the bound quiver algebra kQ/I degree by degree.  Relations must be
/// combinations of parallel paths of one common length >= 2 (the relation
/// ideal is then graded and each degree component is an exact linear-algebra
/// quotient).  Path enumeration aborts at q.degree_bound with a
/// "not finite-dimensional" error.
inline AlgebraPtr from_quiver(const QuiverPresentation& q) {
    using detail::Path;
    Fp f(q.p);
    const int nv = static_cast<int>(q.vertices.size());
    if (nv == 0) throw input_error("quiver needs at least one vertex");
    for (const auto& a : q.arrows)
        if (a.source < 0 || a.source >= nv || a.target < 0 || a.target >= nv)
            throw input_error("arrow endpoint out of range");

    // validate relations: parallel, homogeneous, length >= 2
    auto term_endpoints = [&](const PathTerm& t) -> std::pair<int, int> {
        if (t.arrows.empty()) throw input_error("relation term must have length >= 2");
        int src = q.arrows[t.arrows.front()].source;
        int cur = src;
        for (int ai : t.arrows) {
            if (ai < 0 || ai >= static_cast<int>(q.arrows.size()))
                throw input_error("relation refers to unknown arrow");
            if (q.arrows[ai].source != cur) throw input_error("relation term is not a composable path");
            cur = q.arrows[ai].target;
        }
        return {src, cur};
    };
    for (const auto& rel : q.relations) {
        if (rel.terms.empty()) throw input_error("empty relation");
        auto [s0, t0] = term_endpoints(rel.terms.front());
        size_t len0 = rel.terms.front().arrows.size();
        if (len0 < 2) throw input_error("relation paths must have length >= 2 (admissible ideal)");
        for (const auto& t : rel.terms) {
            auto [s, tt] = term_endpoints(t);
            if (s != s0 || tt != t0) throw input_error("relation combines non-parallel paths");
            if (t.arrows.size() != len0)
                throw input_error("relation combines paths of different lengths (unsupported)");
            if (t.coeff.p != q.p) throw input_error("relation coefficient modulus mismatch");
        }
    }

    // paths by degree
    std::vector<std::vector<Path>> paths(1);
    for (int v = 0; v < nv; ++v) paths[0].push_back({v, v, {}});

    // ideal spanning vectors per degree (coordinates over that degree's paths)
    // and the per-degree reduction data
    struct DegreeData {
        std::vector<int> basis_paths;       // indices into paths[k] surviving the quotient
        std::vector<int> coord_of_path;     // path index -> basis position or -1
        Mat rref_rows = Mat(0, 0, 2);       // rref of the ideal component, rows
        std::vector<int> pivots;
    };
    std::vector<DegreeData> degs;

    // find index of a path inside paths[k] by source vertex + arrow list
    // (trivial paths share the empty arrow list, so the source disambiguates)
    auto find_path = [&](int k, int source, const std::vector<int>& arrows) {
        for (size_t i = 0; i < paths[k].size(); ++i)
            if (paths[k][i].source == source && paths[k][i].arrows == arrows)
                return static_cast<int>(i);
        return -1;
    };

    // degree 0: no relations in degree 0
    {
        DegreeData d0;
        d0.coord_of_path.assign(nv, 0);
        for (int v = 0; v < nv; ++v) {
            d0.basis_paths.push_back(v);
            d0.coord_of_path[v] = v;
        }
        d0.rref_rows = Mat(0, nv, q.p);
        degs.push_back(std::move(d0));
    }

    std::vector<std::vector<Vec>> ideal_by_degree(1);  // degree 0 empty

    const size_t raw_path_cap = 200000;
    int top_degree = 0;  // last degree with nonzero quotient
    for (int k = 1; k <= q.degree_bound + 1; ++k) {
        if (k > q.degree_bound)
            throw input_error("quiver algebra not finite-dimensional within degree bound " +
                              std::to_string(q.degree_bound));
        // extend paths: apply one more arrow after a degree k-1 path
        std::vector<Path> next;
        for (const Path& pth : paths[k - 1])
            for (size_t ai = 0; ai < q.arrows.size(); ++ai)
                if (q.arrows[ai].source == pth.target) {
                    Path np = pth;
                    np.arrows.push_back(static_cast<int>(ai));
                    np.target = q.arrows[ai].target;
                    next.push_back(std::move(np));
                }
        if (next.size() > raw_path_cap) throw input_error("path enumeration exploded; not admissible?");
        paths.push_back(next);
        const int np = static_cast<int>(next.size());

        // ideal component in degree k: relations of degree k, plus arrow·I_{k-1} and I_{k-1}·arrow
        std::vector<Vec> comp;
        for (const auto& rel : q.relations) {
            if (static_cast<int>(rel.terms.front().arrows.size()) != k) continue;
            Vec v(np, 0);
            for (const auto& t : rel.terms) {
                int idx = find_path(k, q.arrows[t.arrows.front()].source, t.arrows);
                if (idx < 0) throw construction_error("relation path not enumerated");
                v[idx] = f.add(v[idx], t.coeff.value);
            }
            comp.push_back(std::move(v));
        }
        if (k >= 2) {
            for (const Vec& w : ideal_by_degree[k - 1]) {
                // left multiply by an arrow (apply the arrow after), right multiply (before)
                for (size_t ai = 0; ai < q.arrows.size(); ++ai) {
                    Vec lv(np, 0), rv(np, 0);
                    bool lany = false, rany = false;
                    for (size_t pi = 0; pi < paths[k - 1].size(); ++pi) {
                        if (!w[pi]) continue;
                        const Path& pp = paths[k - 1][pi];
                        if (q.arrows[ai].source == pp.target) {
                            std::vector<int> arr = pp.arrows;
                            arr.push_back(static_cast<int>(ai));
                            int idx = find_path(k, pp.source, arr);
                            lv[idx] = f.add(lv[idx], w[pi]);
                            lany = true;
                        }
                        if (q.arrows[ai].target == pp.source) {
                            std::vector<int> arr;
                            arr.push_back(static_cast<int>(ai));
                            arr.insert(arr.end(), pp.arrows.begin(), pp.arrows.end());
                            int idx = find_path(k, q.arrows[ai].source, arr);
                            rv[idx] = f.add(rv[idx], w[pi]);
                            rany = true;
                        }
                    }
                    if (lany) comp.push_back(std::move(lv));
                    if (rany) comp.push_back(std::move(rv));
                }
            }
        }
        // reduce the component
        Mat rows(static_cast<int>(comp.size()), np, q.p);
        for (size_t r = 0; r < comp.size(); ++r)
            for (int c = 0; c < np; ++c) rows(static_cast<int>(r), c) = comp[r][c];
        auto [rr, pivots] = rref(rows);
        std::vector<Vec> reduced;
        for (size_t r = 0; r < pivots.size(); ++r) {
            Vec v(np, 0);
            for (int c = 0; c < np; ++c) v[c] = rr(static_cast<int>(r), c);
            reduced.push_back(std::move(v));
        }
        ideal_by_degree.push_back(reduced);

        DegreeData dd;
        dd.rref_rows = Mat(static_cast<int>(pivots.size()), np, q.p);
        for (size_t r = 0; r < pivots.size(); ++r)
            for (int c = 0; c < np; ++c) dd.rref_rows(static_cast<int>(r), c) = rr(static_cast<int>(r), c);
        dd.pivots = pivots;
        dd.coord_of_path.assign(np, -1);
        std::vector<bool> is_piv(np, false);
        for (int c : pivots) is_piv[c] = true;
        for (int c = 0; c < np; ++c)
            if (!is_piv[c]) {
                dd.coord_of_path[c] = static_cast<int>(dd.basis_paths.size());
                dd.basis_paths.push_back(c);
            }
        bool dead = dd.basis_paths.empty();
        degs.push_back(std::move(dd));
        if (dead) break;
        top_degree = k;
    }

    // global basis: residues of non-pivot paths, degree by degree
    struct BasisElem {
        int degree;
        int path;  // index into paths[degree]
    };
    std::vector<BasisElem> basis;
    std::vector<int> offset(top_degree + 1, 0);
    for (int k = 0; k <= top_degree; ++k) {
        offset[k] = static_cast<int>(basis.size());
        for (int pi : degs[k].basis_paths) basis.push_back({k, pi});
    }
    const int dim = static_cast<int>(basis.size());

    // reduce a degree-k path-coordinate vector modulo the ideal component,
    // returning global coordinates
    auto reduce_to_global = [&](int k, Vec w) -> Vec {
        Vec out(dim, 0);
        if (k > top_degree) return out;  // everything beyond is in the ideal
        const DegreeData& dd = degs[k];
        for (size_t r = 0; r < dd.pivots.size(); ++r) {
            uint32_t c = w[dd.pivots[r]];
            if (!c) continue;
            for (int j = 0; j < static_cast<int>(w.size()); ++j)
                w[j] = f.sub(w[j], f.mul(c, dd.rref_rows(static_cast<int>(r), j)));
        }
        for (int j = 0; j < static_cast<int>(w.size()); ++j)
            if (w[j]) out[offset[k] + dd.coord_of_path[j]] = w[j];
        return out;
    };

    // multiplication table
    std::vector<std::vector<Vec>> table(dim, std::vector<Vec>(dim, Vec(dim, 0)));
    for (int i = 0; i < dim; ++i) {
        const Path& pi_ = paths[basis[i].degree][basis[i].path];
        for (int j = 0; j < dim; ++j) {
            const Path& pj = paths[basis[j].degree][basis[j].path];
            // b_i · b_j = "first b_j, then b_i": composable iff target(b_j) == source(b_i)
            if (pj.target != pi_.source) continue;
            int k = basis[i].degree + basis[j].degree;
            if (k > top_degree) continue;
            std::vector<int> arr = pj.arrows;
            arr.insert(arr.end(), pi_.arrows.begin(), pi_.arrows.end());
            int idx = find_path(k, pj.source, arr);
            if (idx < 0) throw construction_error("product path missing from enumeration");
            Vec w(paths[k].size(), 0);
            w[idx] = 1;
            table[i][j] = reduce_to_global(k, std::move(w));
        }
    }

    std::vector<std::string> labels;
    for (const auto& be : basis) labels.push_back(detail::path_label(q, paths[be.degree][be.path]));

    Vec unit(dim, 0);
    std::vector<Vec> idem;
    for (int v = 0; v < nv; ++v) {
        Vec e(dim, 0);
        e[offset[0] + v] = 1;  // trivial paths survive (ideal admissible, degree 0 untouched)
        unit = vec_add(unit, e, q.p);
        idem.push_back(std::move(e));
    }
    std::vector<Vec> rad;
    for (int i = 0; i < dim; ++i)
        if (basis[i].degree > 0) rad.push_back(vec_unit(dim, i));

    return std::make_shared<AlgebraSpec>(q.p, dim, q.name, std::move(labels), std::move(table),
                                         std::move(unit), std::move(idem), std::move(rad));
}

// ---------------------------------------------------------------------------
// opposite / corner / ideal / quotient
// ---------------------------------------------------------------------------

inline AlgebraPtr opposite(const AlgebraPtr& a) {
    std::vector<std::vector<Vec>> table(a->dim, std::vector<Vec>(a->dim));
    for (int i = 0; i < a->dim; ++i)
        for (int j = 0; j < a->dim; ++j) table[i][j] = a->table[j][i];
    return std::make_shared<AlgebraSpec>(a->p, a->dim, a->name + "^op", a->labels, std::move(table),
                                         a->unit, a->idempotents, a->radical);
}

struct CornerAlgebra {
    AlgebraPtr algebra;    // eΛe
    Mat embedding;         // parent.dim × corner.dim, corner coords -> Λ coords
    Vec idempotent;        // e, in parent coordinates
    bool degenerate = false;  // e == 0
};

/// eΛe for an idempotent e, with the corner basis realized inside Λ as the
/// image basis of x ↦ e·x·e.
inline CornerAlgebra corner(const AlgebraPtr& a, const Vec& e) {
    if (!a->is_idempotent(e)) throw input_error("corner: e is not idempotent");
    uint32_t p = a->p;
    Mat proj = a->left_mult(e) * a->right_mult(e);  // x ↦ e·x·e
    Mat basis = image_basis(proj);
    int cd = basis.cols();
    CornerAlgebra out;
    out.embedding = basis;
    out.idempotent = e;
    if (cd == 0) {
        out.degenerate = true;
        out.algebra = std::make_shared<AlgebraSpec>(p, 0, a->name + ".corner", std::vector<std::string>{},
                                                    std::vector<std::vector<Vec>>{}, Vec{},
                                                    std::vector<Vec>{}, std::vector<Vec>{});
        return out;
    }
    auto to_corner = [&](const Vec& x) -> Vec {
        auto sol = solve(basis, Mat::column(x, p));
        if (!sol) throw construction_error("corner: element outside corner span");
        return sol->col_vec(0);
    };
    std::vector<std::vector<Vec>> table(cd, std::vector<Vec>(cd));
    for (int i = 0; i < cd; ++i)
        for (int j = 0; j < cd; ++j)
            table[i][j] = to_corner(a->mult(basis.col_vec(i), basis.col_vec(j)));
    std::vector<std::string> labels;
    for (int i = 0; i < cd; ++i) labels.push_back("c" + std::to_string(i));
    Vec unit = to_corner(e);
    // surviving primitive idempotents: those e_i with e·e_i·e == e_i
    std::vector<Vec> idem;
    Vec sum(a->dim, 0);
    for (const Vec& ei : a->idempotents) {
        Vec proj_ei = apply_vec(proj, ei);
        if (proj_ei == ei && !vec_is_zero(ei)) {
            idem.push_back(to_corner(ei));
            sum = vec_add(sum, ei, p);
        }
    }
    if (sum != e) idem.clear();  // e not a sum of listed primitives: no derived data
    std::vector<Vec> rad;
    if (!idem.empty() && !a->radical.empty()) {
        std::vector<Vec> cand;
        for (const Vec& r : a->radical) {
            Vec pr = apply_vec(proj, r);
            if (!vec_is_zero(pr)) cand.push_back(pr);
        }
        if (!cand.empty()) {
            Mat span = image_basis(mat_from_columns(cand, a->dim, p));
            for (int j = 0; j < span.cols(); ++j) rad.push_back(to_corner(span.col_vec(j)));
        }
    }
    out.algebra = std::make_shared<AlgebraSpec>(p, cd, a->name + ".corner", std::move(labels),
                                                std::move(table), std::move(unit), std::move(idem),
                                                std::move(rad));
    return out;
}

/// Basis of the two-sided ideal ΛeΛ (columns).
inline Mat two_sided_ideal(const AlgebraPtr& a, const Vec& e) {
    if (!a->is_idempotent(e)) throw input_error("two_sided_ideal: e is not idempotent");
    std::vector<Vec> gens;
    for (int i = 0; i < a->dim; ++i) {
        Vec bie = a->mult(vec_unit(a->dim, i), e);
        for (int j = 0; j < a->dim; ++j) {
            Vec v = a->mult(bie, vec_unit(a->dim, j));
            if (!vec_is_zero(v)) gens.push_back(std::move(v));
        }
    }
    if (gens.empty()) return Mat(a->dim, 0, a->p);
    return image_basis(mat_from_columns(gens, a->dim, a->p));
}

struct QuotientAlgebra {
    AlgebraPtr algebra;   // Λ/I
    Mat projection;       // quot.dim × parent.dim
    Mat section;          // parent.dim × quot.dim (complement coordinate inclusion)
};

/// Λ/I for a two-sided ideal given by a basis (columns).  The quotient basis
/// is the set of non-pivot coordinates of the ideal's rref; the projection is
/// reduction modulo the ideal.
inline QuotientAlgebra quotient(const AlgebraPtr& a, const Mat& ideal) {
    uint32_t p = a->p;
    if (ideal.rows() != a->dim) throw input_error("quotient: ideal basis shape");
    // verify two-sided closure
    for (int i = 0; i < a->dim; ++i) {
        Vec b = vec_unit(a->dim, i);
        for (int j = 0; j < ideal.cols(); ++j) {
            Vec g = ideal.col_vec(j);
            if (!subspace_contains(ideal, Mat::column(a->mult(b, g), p)) ||
                !subspace_contains(ideal, Mat::column(a->mult(g, b), p)))
                throw construction_error("quotient: ideal is not two-sided closed");
        }
    }
    auto [rr, pivots] = rref(transpose(ideal));
    std::vector<bool> is_piv(a->dim, false);
    for (int c : pivots) is_piv[c] = true;
    std::vector<int> comp;
    for (int c = 0; c < a->dim; ++c)
        if (!is_piv[c]) comp.push_back(c);
    const int qd = static_cast<int>(comp.size());
    Fp f(p);

    QuotientAlgebra out;
    out.projection = Mat(qd, a->dim, p);
    out.section = Mat(a->dim, qd, p);
    for (int k = 0; k < qd; ++k) out.section(comp[k], k) = 1;
    // reduction: subtract rref rows to clear pivot coordinates
    for (int col = 0; col < a->dim; ++col) {
        Vec x(a->dim, 0);
        x[col] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) {
            uint32_t c = x[pivots[r]];
            if (!c) continue;
            for (int j = 0; j < a->dim; ++j) x[j] = f.sub(x[j], f.mul(c, rr(static_cast<int>(r), j)));
        }
        for (int k = 0; k < qd; ++k) out.projection(k, col) = x[comp[k]];
    }

    if (qd == 0) {
        out.algebra = std::make_shared<AlgebraSpec>(p, 0, a->name + ".quot", std::vector<std::string>{},
                                                    std::vector<std::vector<Vec>>{}, Vec{},
                                                    std::vector<Vec>{}, std::vector<Vec>{});
        return out;
    }

    auto pi = [&](const Vec& x) { return apply_vec(out.projection, x); };
    std::vector<std::vector<Vec>> table(qd, std::vector<Vec>(qd));
    for (int i = 0; i < qd; ++i)
        for (int j = 0; j < qd; ++j)
            table[i][j] = pi(a->mult(vec_unit(a->dim, comp[i]), vec_unit(a->dim, comp[j])));
    std::vector<std::string> labels;
    for (int k = 0; k < qd; ++k) labels.push_back(a->labels[comp[k]]);
    Vec unit = pi(a->unit);
    // surviving idempotents: nonzero orthogonal images
    std::vector<Vec> idem;
    bool ok = true;
    for (const Vec& ei : a->idempotents) {
        Vec im = pi(ei);
        if (!vec_is_zero(im)) idem.push_back(im);
    }
    {
        // they must stay orthogonal idempotents summing to 1; otherwise drop data
        Vec sum(qd, 0);
        AlgebraSpec probe(p, qd, "probe", labels, table, unit, {}, {});
        for (size_t i = 0; i < idem.size() && ok; ++i) {
            if (probe.mult(idem[i], idem[i]) != idem[i]) ok = false;
            for (size_t j = 0; j < idem.size(); ++j)
                if (i != j && !vec_is_zero(probe.mult(idem[i], idem[j]))) ok = false;
            sum = vec_add(sum, idem[i], p);
        }
        if (sum != unit) ok = false;
        if (!ok) idem.clear();
    }
    std::vector<Vec> rad;
    if (ok && !a->radical.empty()) {
        std::vector<Vec> cand;
        for (const Vec& r : a->radical) {
            Vec im = pi(r);
            if (!vec_is_zero(im)) cand.push_back(im);
        }
        if (!cand.empty()) {
            Mat span = image_basis(mat_from_columns(cand, qd, p));
            for (int j = 0; j < span.cols(); ++j) rad.push_back(span.col_vec(j));
        }
    }
    out.algebra = std::make_shared<AlgebraSpec>(p, qd, a->name + ".quot", std::move(labels),
                                                std::move(table), std::move(unit), std::move(idem),
                                                std::move(rad));
    return out;
}

// ---------------------------------------------------------------------------
// Triangular matrix algebras and T_n
// ---------------------------------------------------------------------------

struct TriangularAlgebra {
    AlgebraPtr algebra;  // [[A, M], [0, B]]
    AlgebraPtr a_part;
    AlgebraPtr b_part;
    Vec corner_idempotent;  // 1_A embedded (the idempotent inducing the recollement)
    int a_offset = 0, m_offset = 0, b_offset = 0;
};

/// The upper triangular matrix algebra [[A, M], [0, B]] of an (A,B)-bimodule.
/// Basis order: A-basis, M-basis, B-basis.
inline TriangularAlgebra triangular_matrix(const AlgebraPtr& a, const AlgebraPtr& b,
                                           const Bimodule& m) {
    if (m.left_alg.get() != a.get() || m.right_alg.get() != b.get())
        throw input_error("triangular_matrix: bimodule algebras do not match");
    uint32_t p = a->p;
    const int da = a->dim, dm = m.dim, db = b->dim;
    const int dim = da + dm + db;
    Fp f(p);

    auto mult = [&](const Vec& x, const Vec& y) -> Vec {
        Vec xa(x.begin(), x.begin() + da), xm(x.begin() + da, x.begin() + da + dm),
            xb(x.begin() + da + dm, x.end());
        Vec ya(y.begin(), y.begin() + da), ym(y.begin() + da, y.begin() + da + dm),
            yb(y.begin() + da + dm, y.end());
        Vec ra = a->mult(xa, ya);
        Vec rb = b->mult(xb, yb);
        Vec rm = vec_add(apply_vec(m.left(xa), ym), apply_vec(m.right(yb), xm), p);
        Vec out(dim, 0);
        std::copy(ra.begin(), ra.end(), out.begin());
        std::copy(rm.begin(), rm.end(), out.begin() + da);
        std::copy(rb.begin(), rb.end(), out.begin() + da + dm);
        return out;
    };

    std::vector<std::vector<Vec>> table(dim, std::vector<Vec>(dim));
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) table[i][j] = mult(vec_unit(dim, i), vec_unit(dim, j));
    (void)f;

    std::vector<std::string> labels;
    for (const auto& s : a->labels) labels.push_back("A." + s);
    for (int i = 0; i < dm; ++i) labels.push_back("M." + std::to_string(i));
    for (const auto& s : b->labels) labels.push_back("B." + s);

    Vec unit(dim, 0);
    for (int i = 0; i < da; ++i) unit[i] = a->unit[i];
    for (int i = 0; i < db; ++i) unit[da + dm + i] = b->unit[i];

    std::vector<Vec> idem;
    for (const Vec& e : a->idempotents) {
        Vec v(dim, 0);
        std::copy(e.begin(), e.end(), v.begin());
        idem.push_back(std::move(v));
    }
    for (const Vec& e : b->idempotents) {
        Vec v(dim, 0);
        std::copy(e.begin(), e.end(), v.begin() + da + dm);
        idem.push_back(std::move(v));
    }
    std::vector<Vec> rad;
    for (const Vec& r : a->radical) {
        Vec v(dim, 0);
        std::copy(r.begin(), r.end(), v.begin());
        rad.push_back(std::move(v));
    }
    for (int i = 0; i < dm; ++i) rad.push_back(vec_unit(dim, da + i));
    for (const Vec& r : b->radical) {
        Vec v(dim, 0);
        std::copy(r.begin(), r.end(), v.begin() + da + dm);
        rad.push_back(std::move(v));
    }

    TriangularAlgebra out;
    out.a_part = a;
    out.b_part = b;
    out.a_offset = 0;
    out.m_offset = da;
    out.b_offset = da + dm;
    out.corner_idempotent = Vec(dim, 0);
    for (int i = 0; i < da; ++i) out.corner_idempotent[i] = a->unit[i];
    out.algebra = std::make_shared<AlgebraSpec>(
        p, dim, "T(" + a->name + "," + b->name + ")", std::move(labels), std::move(table),
        std::move(unit), std::move(idem), std::move(rad));
    return out;
}

/// Λe as a (Λ, eΛe)-bimodule, in the coordinates of its image basis inside Λ.
inline Bimodule lambda_e_bimodule(const AlgebraPtr& a, const CornerAlgebra& c) {
    uint32_t p = a->p;
    Mat basis = image_basis(a->right_mult(c.idempotent));
    auto restrict_to = [&](const Mat& full) {
        auto sol = solve(basis, full * basis);
        if (!sol) throw construction_error("lambda_e_bimodule: subspace not stable");
        return *sol;
    };
    std::vector<Mat> lact, ract;
    for (int i = 0; i < a->dim; ++i) lact.push_back(restrict_to(a->left_mult(vec_unit(a->dim, i))));
    for (int j = 0; j < c.algebra->dim; ++j)
        ract.push_back(restrict_to(a->right_mult(c.embedding.col_vec(j))));
    return Bimodule(a, c.algebra, basis.cols(), std::move(lact), std::move(ract));
}

/// eΛ as an (eΛe, Λ)-bimodule.
inline Bimodule e_lambda_bimodule(const AlgebraPtr& a, const CornerAlgebra& c) {
    uint32_t p = a->p;
    (void)p;
    Mat basis = image_basis(a->left_mult(c.idempotent));
    auto restrict_to = [&](const Mat& full) {
        auto sol = solve(basis, full * basis);
        if (!sol) throw construction_error("e_lambda_bimodule: subspace not stable");
        return *sol;
    };
    std::vector<Mat> lact, ract;
    for (int j = 0; j < c.algebra->dim; ++j)
        lact.push_back(restrict_to(a->left_mult(c.embedding.col_vec(j))));
    for (int i = 0; i < a->dim; ++i) ract.push_back(restrict_to(a->right_mult(vec_unit(a->dim, i))));
    return Bimodule(c.algebra, a, basis.cols(), std::move(lact), std::move(ract));
}

/// The regular bimodule A over (A,A): left and right multiplication.
inline Bimodule regular_bimodule(const AlgebraPtr& a) {
    std::vector<Mat> lact, ract;
    for (int i = 0; i < a->dim; ++i) {
        lact.push_back(a->left_mult(vec_unit(a->dim, i)));
        ract.push_back(a->right_mult(vec_unit(a->dim, i)));
    }
    return Bimodule(a, a, a->dim, std::move(lact), std::move(ract));
}

/// T_n(a) = a ⊗ kA_n, realizing modules over it as sequences
/// X_1 -> X_2 -> ... -> X_n of a-modules (the n-morphism category).
/// Basis: for path v->w (v <= w, ordered by length then source) and each
/// a-basis element.  Records the idempotents, arrow units and per-vertex
/// embeddings needed for the module dictionary.
struct MornAlgebra {
    AlgebraPtr algebra;  // T_n(base)
    AlgebraPtr base;
    int n = 0;
    std::vector<Vec> vertex_idempotents;        // ε_v = e_v ⊗ 1
    std::vector<Vec> arrow_units;               // α_v ⊗ 1 : vertex v -> v+1
    std::vector<std::vector<Vec>> base_embed;   // base_embed[v][i] = e_v ⊗ b_i
    std::vector<std::vector<int>> vertex_block; // basis indices of {e_v ⊗ b_i} in order i
};

inline MornAlgebra morn_algebra(const AlgebraPtr& base, int n) {
    if (n < 1) throw input_error("morn_algebra: n must be >= 1");
    uint32_t p = base->p;
    const int db = base->dim;
    struct P {
        int v, w;
    };
    std::vector<P> paths;
    for (int len = 0; len < n; ++len)
        for (int v = 0; v + len < n; ++v) paths.push_back({v, v + len});
    const int np = static_cast<int>(paths.size());
    const int dim = np * db;
    auto idx = [&](int pi, int bi) { return pi * db + bi; };
    auto find_p = [&](int v, int w) {
        for (int i = 0; i < np; ++i)
            if (paths[i].v == v && paths[i].w == w) return i;
        return -1;
    };

    Fp f(p);
    std::vector<std::vector<Vec>> table(dim, std::vector<Vec>(dim, Vec(dim, 0)));
    for (int pi = 0; pi < np; ++pi)
        for (int bi = 0; bi < db; ++bi)
            for (int pj = 0; pj < np; ++pj) {
                // (p_i ⊗ b_i)·(p_j ⊗ b_j): composable iff target(p_j) == source(p_i)
                if (paths[pj].w != paths[pi].v) continue;
                int pk = find_p(paths[pj].v, paths[pi].w);
                for (int bj = 0; bj < db; ++bj) {
                    const Vec& prod = base->table[bi][bj];
                    Vec out(dim, 0);
                    for (int k = 0; k < db; ++k)
                        if (prod[k]) out[idx(pk, k)] = prod[k];
                    table[idx(pi, bi)][idx(pj, bj)] = std::move(out);
                }
            }
    (void)f;

    std::vector<std::string> labels;
    for (int pi = 0; pi < np; ++pi)
        for (int bi = 0; bi < db; ++bi) {
            std::string pl = paths[pi].v == paths[pi].w
                                 ? "e" + std::to_string(paths[pi].v + 1)
                                 : "p" + std::to_string(paths[pi].v + 1) + std::to_string(paths[pi].w + 1);
            labels.push_back(pl + "." + base->labels[bi]);
        }

    Vec unit(dim, 0);
    for (int v = 0; v < n; ++v) {
        int pi = find_p(v, v);
        for (int bi = 0; bi < db; ++bi) unit[idx(pi, bi)] = base->unit[bi];
    }
    std::vector<Vec> idem;
    for (int v = 0; v < n; ++v) {
        int pi = find_p(v, v);
        for (const Vec& e : base->idempotents) {
            Vec out(dim, 0);
            for (int bi = 0; bi < db; ++bi) out[idx(pi, bi)] = e[bi];
            idem.push_back(std::move(out));
        }
    }
    std::vector<Vec> rad;
    for (int pi = 0; pi < np; ++pi) {
        if (paths[pi].v == paths[pi].w) {
            for (const Vec& r : base->radical) {
                Vec out(dim, 0);
                for (int bi = 0; bi < db; ++bi) out[idx(pi, bi)] = r[bi];
                rad.push_back(std::move(out));
            }
        } else {
            for (int bi = 0; bi < db; ++bi) rad.push_back(vec_unit(dim, idx(pi, bi)));
        }
    }

    MornAlgebra out;
    out.base = base;
    out.n = n;
    for (int v = 0; v < n; ++v) {
        int pi = find_p(v, v);
        Vec e(dim, 0);
        for (int bi = 0; bi < db; ++bi) e[idx(pi, bi)] = base->unit[bi];
        out.vertex_idempotents.push_back(std::move(e));
        std::vector<Vec> emb;
        std::vector<int> blk;
        for (int bi = 0; bi < db; ++bi) {
            emb.push_back(vec_unit(dim, idx(pi, bi)));
            blk.push_back(idx(pi, bi));
        }
        out.base_embed.push_back(std::move(emb));
        out.vertex_block.push_back(std::move(blk));
    }
    for (int v = 0; v + 1 < n; ++v) {
        int pi = find_p(v, v + 1);
        Vec au(dim, 0);
        for (int bi = 0; bi < db; ++bi) au[idx(pi, bi)] = base->unit[bi];
        out.arrow_units.push_back(std::move(au));
    }
    out.algebra = std::make_shared<AlgebraSpec>(p, dim, "T" + std::to_string(n) + "(" + base->name + ")",
                                                std::move(labels), std::move(table), std::move(unit),
                                                std::move(idem), std::move(rad));
    return out;
}

// convenience builders for the desk algebras

/// GF(p) as a one-dimensional algebra.
inline AlgebraPtr field_algebra(uint32_t p, const std::string& name = "k") {
    return std::make_shared<AlgebraSpec>(p, 1, name, std::vector<std::string>{"1"},
                                         std::vector<std::vector<Vec>>{{Vec{1}}}, Vec{1},
                                         std::vector<Vec>{Vec{1}}, std::vector<Vec>{});
}

/// k[x]/(x^2), presented as the one-loop quiver with relation x*x.
inline AlgebraPtr dual_numbers(uint32_t p) {
    QuiverPresentation q;
    q.p = p;
    q.name = "k[x]/(x^2)";
    q.vertices = {"v"};
    q.arrows = {{"x", 0, 0}};
    q.relations = {{{{Scalar(1, p), {0, 0}}}}};
    return from_quiver(q);
}

/// Path algebra of A_2: 1 -> 2.
inline AlgebraPtr kA2(uint32_t p) {
    QuiverPresentation q;
    q.p = p;
    q.name = "kA2";
    q.vertices = {"1", "2"};
    q.arrows = {{"a", 0, 1}};
    return from_quiver(q);
}

}  // namespace reclift
