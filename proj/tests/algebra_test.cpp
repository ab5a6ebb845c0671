#include "reclift/algebra.hpp"

#include <gtest/gtest.h>

using namespace reclift;

TEST(Quiver, OneVertexNoArrowsIsGroundField) {
    QuiverPresentation q;
    q.p = 3;
    q.vertices = {"v"};
    auto a = from_quiver(q);
    EXPECT_EQ(a->dim, 1);
    EXPECT_EQ(a->unit, Vec{1});
    EXPECT_EQ(a->idempotents.size(), 1u);
    EXPECT_TRUE(a->radical.empty());
}

TEST(Quiver, DualNumbers) {
    auto a = dual_numbers(2);
    ASSERT_EQ(a->dim, 2);
    // basis: e_v, x; x·x = 0
    Vec x = vec_unit(2, 1);
    EXPECT_TRUE(vec_is_zero(a->mult(x, x)));
    ASSERT_EQ(a->radical.size(), 1u);
    EXPECT_EQ(a->radical[0], x);
    EXPECT_EQ(a->labels[1], "x");
}

TEST(Quiver, KA2PathEnumeration) {
    auto a = kA2(2);
    ASSERT_EQ(a->dim, 3);  // e1, e2, a
    EXPECT_EQ(a->idempotents.size(), 2u);
    ASSERT_EQ(a->radical.size(), 1u);
    Vec e1 = a->idempotents[0], e2 = a->idempotents[1], ar = a->radical[0];
    // arrow = e2·a·e1 under the function-order convention
    EXPECT_EQ(a->mult(e2, ar), ar);
    EXPECT_EQ(a->mult(ar, e1), ar);
    EXPECT_TRUE(vec_is_zero(a->mult(e1, ar)));
    EXPECT_TRUE(vec_is_zero(a->mult(ar, ar)));
}

TEST(Quiver, NonParallelRelationRejected) {
    QuiverPresentation q;
    q.p = 2;
    q.vertices = {"1", "2", "3"};
    q.arrows = {{"a", 0, 1}, {"b", 1, 2}, {"c", 0, 0}};
    // b∘a (1->3) combined with c∘c (1->1): not parallel
    q.relations = {{{{Scalar(1, 2), {0, 1}}, {Scalar(1, 2), {2, 2}}}}};
    EXPECT_THROW(from_quiver(q), input_error);
}

TEST(Quiver, NonTerminatingEnumerationRejected) {
    QuiverPresentation q;
    q.p = 2;
    q.vertices = {"v"};
    q.arrows = {{"x", 0, 0}};  // free loop: infinite-dimensional
    q.degree_bound = 10;
    EXPECT_THROW(from_quiver(q), input_error);
}

TEST(Quiver, CommutativeSquareRelation) {
    // 4 vertices, two parallel compositions identified
    QuiverPresentation q;
    q.p = 2;
    q.vertices = {"1", "2", "3", "4"};
    q.arrows = {{"a", 0, 1}, {"b", 1, 3}, {"c", 0, 2}, {"d", 2, 3}};
    q.relations = {{{{Scalar(1, 2), {0, 1}}, {Scalar(1, 2), {2, 3}}}}};
    auto alg = from_quiver(q);
    // paths: 4 trivial + 4 arrows + one surviving length-2 residue
    EXPECT_EQ(alg->dim, 9);
}

TEST(Opposite, CommutativeAlgebraIsFixed) {
    auto a = dual_numbers(3);
    auto op = opposite(a);
    EXPECT_EQ(op->table, a->table);
}

TEST(Opposite, InvolutionAndKA2Reversal) {
    auto a = kA2(2);
    auto op = opposite(a);
    auto opop = opposite(op);
    EXPECT_EQ(opop->table, a->table);
    // in kA2^op the arrow satisfies e1·a = a and a·e2 = a (arrows reversed)
    Vec e1 = op->idempotents[0], e2 = op->idempotents[1], ar = op->radical[0];
    EXPECT_EQ(op->mult(e1, ar), ar);
    EXPECT_EQ(op->mult(ar, e2), ar);
    // matches the path algebra of 2 -> 1
    QuiverPresentation q;
    q.p = 2;
    q.vertices = {"1", "2"};
    q.arrows = {{"a", 1, 0}};
    auto rev = from_quiver(q);
    EXPECT_EQ(rev->dim, 3);
    Vec f1 = rev->idempotents[0], f2 = rev->idempotents[1], br = rev->radical[0];
    EXPECT_EQ(rev->mult(f1, br), br);
    EXPECT_EQ(rev->mult(br, f2), br);
}

TEST(Corner, FullIdempotentGivesWholeAlgebra) {
    auto a = dual_numbers(2);
    auto c = corner(a, a->unit);
    EXPECT_EQ(c.algebra->dim, 2);
    EXPECT_FALSE(c.degenerate);
}

TEST(Corner, ZeroIdempotentIsDegenerate) {
    auto a = dual_numbers(2);
    auto c = corner(a, Vec(2, 0));
    EXPECT_TRUE(c.degenerate);
    EXPECT_EQ(c.algebra->dim, 0);
}

TEST(Corner, KA2AtE1IsGroundField) {
    auto a = kA2(2);
    auto c = corner(a, a->idempotents[0]);
    EXPECT_EQ(c.algebra->dim, 1);
    // embedding carries the corner unit to e1
    EXPECT_EQ(apply_vec(c.embedding, c.algebra->unit), a->idempotents[0]);
}

TEST(Corner, NonIdempotentRejected) {
    auto a = kA2(2);
    EXPECT_THROW(corner(a, a->radical[0]), input_error);
}

TEST(Ideal, FullAndZero) {
    auto a = kA2(3);
    Mat full = two_sided_ideal(a, a->unit);
    EXPECT_EQ(full.cols(), 3);
    auto qfull = quotient(a, full);
    EXPECT_EQ(qfull.algebra->dim, 0);
    Mat zero = two_sided_ideal(a, Vec(3, 0));
    EXPECT_EQ(zero.cols(), 0);
    auto qzero = quotient(a, zero);
    EXPECT_EQ(qzero.algebra->dim, 3);
    EXPECT_EQ(qzero.algebra->table, a->table);
}

TEST(Ideal, KA2AtE2) {
    auto a = kA2(2);
    Mat ideal = two_sided_ideal(a, a->idempotents[1]);
    EXPECT_EQ(ideal.cols(), 2);  // span{e2, arrow}
    EXPECT_TRUE(subspace_contains(ideal, Mat::column(a->idempotents[1], 2)));
    EXPECT_TRUE(subspace_contains(ideal, Mat::column(a->radical[0], 2)));
    auto qt = quotient(a, ideal);
    EXPECT_EQ(qt.algebra->dim, 1);
    // projection is an algebra map
    AlgebraMap pi(a, qt.algebra, qt.projection);
    EXPECT_EQ(pi(a->unit), qt.algebra->unit);
}

TEST(Ideal, NotTwoSidedRejected) {
    auto a = kA2(2);
    // span{e_1} is not an ideal: a·e1 = a falls outside
    Mat bad = Mat::column(a->idempotents[0], 2);
    EXPECT_THROW(quotient(a, bad), construction_error);
}

TEST(Triangular, ZeroBimoduleGivesProduct) {
    auto a = dual_numbers(2);
    auto b = field_algebra(2);
    Bimodule zero(a, b, 0, std::vector<Mat>(a->dim, Mat(0, 0, 2)),
                  std::vector<Mat>(b->dim, Mat(0, 0, 2)));
    auto t = triangular_matrix(a, b, zero);
    EXPECT_EQ(t.algebra->dim, 3);
    // product algebra: the two units are central orthogonal idempotents
    Vec ea = t.corner_idempotent;
    Vec eb = vec_sub(t.algebra->unit, ea, 2);
    EXPECT_TRUE(vec_is_zero(t.algebra->mult(ea, eb)));
    for (int i = 0; i < 3; ++i) {
        Vec bi = vec_unit(3, i);
        EXPECT_EQ(t.algebra->mult(ea, bi), t.algebra->mult(bi, ea));
    }
}

TEST(Triangular, T2OfFieldMatchesKA2) {
    auto k = field_algebra(2);
    auto t = triangular_matrix(k, k, regular_bimodule(k));
    ASSERT_EQ(t.algebra->dim, 3);
    // relabel [e_A, m, e_B] -> [e_2, arrow, e_1] and compare with kA2
    auto a2 = kA2(2);
    Vec eA = vec_unit(3, 0), m = vec_unit(3, 1), eB = vec_unit(3, 2);
    // e_A·m = m, m·e_B = m, m·m = 0 — the kA2 arrow relations
    EXPECT_EQ(t.algebra->mult(eA, m), m);
    EXPECT_EQ(t.algebra->mult(m, eB), m);
    EXPECT_TRUE(vec_is_zero(t.algebra->mult(m, m)));
    Vec e2 = a2->idempotents[1], ar = a2->radical[0], e1 = a2->idempotents[0];
    EXPECT_EQ(a2->mult(e2, ar), ar);
    EXPECT_EQ(a2->mult(ar, e1), ar);
}

TEST(Triangular, T2DualNumbersDimension) {
    auto d = dual_numbers(2);
    auto t = triangular_matrix(d, d, regular_bimodule(d));
    EXPECT_EQ(t.algebra->dim, 6);
    EXPECT_EQ(t.algebra->idempotents.size(), 2u);
    EXPECT_EQ(t.algebra->radical.size(), 4u);  // rad A ⊕ M ⊕ rad B = 1 + 2 + 1
}

TEST(Morn, NIsOneGivesBase) {
    auto d = dual_numbers(2);
    auto m = morn_algebra(d, 1);
    EXPECT_EQ(m.algebra->dim, 2);
    EXPECT_EQ(m.algebra->table, d->table);
}

TEST(Morn, N2OverFieldIsKA2) {
    auto m = morn_algebra(field_algebra(2), 2);
    ASSERT_EQ(m.algebra->dim, 3);
    auto a2 = kA2(2);
    Vec e1 = m.vertex_idempotents[0], e2 = m.vertex_idempotents[1], ar = m.arrow_units[0];
    EXPECT_EQ(m.algebra->mult(e2, ar), ar);
    EXPECT_EQ(m.algebra->mult(ar, e1), ar);
    EXPECT_TRUE(vec_is_zero(m.algebra->mult(e1, ar)));
    EXPECT_EQ(a2->dim, m.algebra->dim);
}

TEST(Morn, DimensionFormula) {
    auto m3 = morn_algebra(field_algebra(2), 3);
    EXPECT_EQ(m3.algebra->dim, 6);  // n(n+1)/2 · dim a
    auto d = dual_numbers(2);
    EXPECT_EQ(morn_algebra(d, 3).algebra->dim, 12);
    EXPECT_THROW(morn_algebra(d, 0), input_error);
}

TEST(Morn, ArrowComposition) {
    auto m = morn_algebra(field_algebra(2), 3);
    // α_2·α_1 is the length-2 path 1->3, and ε_3·(α_2 α_1)·ε_1 = α_2 α_1
    Vec comp = m.algebra->mult(m.arrow_units[1], m.arrow_units[0]);
    EXPECT_FALSE(vec_is_zero(comp));
    EXPECT_EQ(m.algebra->mult(m.vertex_idempotents[2], comp), comp);
    EXPECT_EQ(m.algebra->mult(comp, m.vertex_idempotents[0]), comp);
    EXPECT_TRUE(vec_is_zero(m.algebra->mult(m.arrow_units[0], m.arrow_units[1])));
}

TEST(AlgebraSpec, AssociativityCheckedLoudly) {
    // basis u,a,b with a·b = u and all other non-unit products zero:
    // (a·a)·b = 0 but a·(a·b) = a
    std::vector<std::vector<Vec>> table = {
        {Vec{1, 0, 0}, Vec{0, 1, 0}, Vec{0, 0, 1}},
        {Vec{0, 1, 0}, Vec{0, 0, 0}, Vec{1, 0, 0}},
        {Vec{0, 0, 1}, Vec{0, 0, 0}, Vec{0, 0, 0}}};
    EXPECT_THROW(AlgebraSpec(2, 3, "bad", {"u", "a", "b"}, table, Vec{1, 0, 0}, {}, {}),
                 construction_error);
}

TEST(AlgebraSpec, RadicalMustBeNilpotent) {
    // claim the unit spans the radical: not nilpotent
    EXPECT_THROW(AlgebraSpec(2, 1, "bad", {"1"}, {{Vec{1}}}, Vec{1}, {Vec{1}}, {Vec{1}}),
                 construction_error);
}
