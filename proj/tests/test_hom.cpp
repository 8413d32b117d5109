#include <doctest.h>

#include <qring/errors.hpp>
#include <qring/hom.hpp>
#include <qring/presentation.hpp>

using namespace qring;

namespace {

Scalar qp(const PresentationPtr& p, int power = 1) {
    return Scalar::param(p->params(), "q", power);
}

}  // namespace

TEST_CASE("generator-image maps validate against the source relations") {
    auto p = preset_quantum_plane();
    auto one = Scalar::one(p->params());

    // Scaling each generator is an endomorphism.
    AlgebraHom scale(p, p, {NcPoly::generator(p, 0).scaled(qp(p)),
                            NcPoly::generator(p, 1).scaled(qp(p, -1))});
    CHECK(scale.verify());
    // y*x*y = q^-1 x y^2 picks up q^1 from x and q^-2 from y^2.
    NcPoly word = NcPoly::from_word(p, {1, 0, 1}, one);
    CHECK(scale.apply(word) == word.scaled(qp(p, -1)));

    // Swapping x and y reverses the relation, so it is not one.
    AlgebraHom swap(p, p, {NcPoly::generator(p, 1), NcPoly::generator(p, 0)});
    CHECK(!swap.verify());

    // Wrong image count / wrong target are rejected at construction.
    CHECK_THROWS_AS(AlgebraHom(p, p, {NcPoly::generator(p, 0)}), MismatchError);
    auto other = preset_quantum_affine(2);
    CHECK_THROWS_AS(
        AlgebraHom(p, p,
                   {NcPoly::generator(other, 0), NcPoly::generator(other, 1)}),
        MismatchError);
}

TEST_CASE("transposition of the matrix algebra is an automorphism") {
    auto m = preset_quantum_matrices(2);
    // X[i,j] -> X[j,i]: generator order (0,1,2,3) -> (0,2,1,3).
    AlgebraHom tr(m, m,
                  {NcPoly::generator(m, 0), NcPoly::generator(m, 2),
                   NcPoly::generator(m, 1), NcPoly::generator(m, 3)});
    CHECK(tr.verify());
    // Involution on a straightened product.
    NcPoly prod = NcPoly::generator(m, 3) * NcPoly::generator(m, 0);
    CHECK(tr.apply(tr.apply(prod)) == prod);
}

TEST_CASE("composition applies the outer map to the inner images") {
    auto p = preset_quantum_plane();
    AlgebraHom a(p, p, {NcPoly::generator(p, 0).scaled(qp(p)),
                        NcPoly::generator(p, 1)});
    AlgebraHom b(p, p, {NcPoly::generator(p, 0),
                        NcPoly::generator(p, 1).scaled(qp(p, 3))});
    AlgebraHom ab = compose(a, b);
    NcPoly x = NcPoly::generator(p, 0), y = NcPoly::generator(p, 1);
    CHECK(ab.apply(x * y) == a.apply(b.apply(x * y)));
    CHECK(ab.apply(y * x) == a.apply(b.apply(y * x)));
}

TEST_CASE("tensor squares keep both copies and make them commute") {
    auto m = preset_quantum_matrices(2);
    auto t = tensor_square(m);
    REQUIRE(t->num_gens() == 8);
    CHECK(t->tensor_split() == 4);
    CHECK(t->gen_name(0) == "X[1,1]");
    CHECK(t->gen_name(4) == "X'[1,1]");

    auto one = Scalar::one(t->params());
    auto g = [&](int i) { return NcPoly::generator(t, i); };

    // Cross pairs commute exactly.
    for (int l = 0; l < 4; ++l)
        for (int r = 4; r < 8; ++r) {
            Monomial m2(8, 0);
            m2[l] += 1;
            m2[r] += 1;
            CHECK(g(r) * g(l) == NcPoly::monomial(t, m2, one));
        }

    // Left copy keeps the diagonal correction...
    NcPoly left = NcPoly::monomial(t, {1, 0, 0, 1, 0, 0, 0, 0}, one) -
                  NcPoly::monomial(t, {0, 1, 1, 0, 0, 0, 0, 0},
                                   qp(t) - qp(t, -1));
    CHECK(g(3) * g(0) == left);
    // ...and so does the right copy, shifted into its own block.
    NcPoly right = NcPoly::monomial(t, {0, 0, 0, 0, 1, 0, 0, 1}, one) -
                   NcPoly::monomial(t, {0, 0, 0, 0, 0, 1, 1, 0},
                                    qp(t) - qp(t, -1));
    CHECK(g(7) * g(4) == right);
}

TEST_CASE("tensor elements multiply componentwise") {
    auto m = preset_quantum_matrices(2);
    auto t = tensor_square(m);
    NcPoly a = NcPoly::generator(m, 1);
    NcPoly b = NcPoly::generator(m, 2) + NcPoly::generator(m, 3);
    NcPoly lhs = tensor_elem(t, a, NcPoly::one(m)) *
                 tensor_elem(t, NcPoly::one(m), b);
    CHECK(lhs == tensor_elem(t, a, b));

    // Iterating the construction is positionally associative.
    auto t3a = tensor_product(t, m);
    auto t3b = tensor_product(m, t);
    CHECK(t3a->num_gens() == 12);
    CHECK(t3b->num_gens() == 12);
    CHECK(t3a->gens() == t3b->gens());  // X, X', X''

    CHECK_THROWS_AS(tensor_elem(m, a, b), MismatchError);
}

TEST_CASE("quotients drop generators and relabel the survivors") {
    auto p = preset_quantum_affine(3);
    auto res = quotient_by_generators(p, {1});
    REQUIRE(res.quotient->num_gens() == 2);
    CHECK(res.surviving == std::vector<int>{0, 2});
    CHECK(res.quotient->gen_name(0) == "x1");
    CHECK(res.quotient->gen_name(1) == "x3");
    CHECK(res.projection.verify());
    CHECK(res.projection.apply(NcPoly::generator(p, 1)).is_zero());
    // The surviving relation is still x3 x1 = q^-1 x1 x3.
    auto q = res.quotient;
    CHECK(NcPoly::generator(q, 1) * NcPoly::generator(q, 0) ==
          NcPoly::monomial(q, {1, 1}, qp(q, -1)));
}

TEST_CASE("quotient closure rejects killing one diagonal matrix generator") {
    auto m = preset_quantum_matrices(2);
    // X22 X11 = X11 X22 - (q - q^-1) X12 X21: deleting X[1,1] alone leaves
    // the correction X12 X21 outside the deleted set.
    CHECK_THROWS_AS(quotient_by_generators(m, {0}), ClosureError);
    CHECK_THROWS_AS(quotient_by_generators(m, {3}), ClosureError);
    // Deleting an off-diagonal generator is consistent.
    CHECK(quotient_by_generators(m, {1}).quotient->num_gens() == 3);
    // So is deleting a full row.
    CHECK(quotient_by_generators(m, {0, 1}).quotient->num_gens() == 2);

    CHECK_THROWS_AS(quotient_by_generators(m, {7}), MismatchError);
}
