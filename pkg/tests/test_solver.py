import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from torcosets.cyclo import CycloNum, RootOfUnity
from torcosets.errors import (
    DegenerateInput,
    DescentDepthExceeded,
    UnsupportedDimension,
)
from torcosets.lattice import det_int
from torcosets.parser import parse_poly
from torcosets.poly import MPoly, evaluate_at_torsion
from torcosets.solver import (
    SolveReport,
    TorsionCoset,
    binomial_classify,
    bruteforce_oracle,
    coset_from_relation,
    coset_verify,
    descent_solve,
    descent_transforms,
    minimal_field,
    monomial_preimages,
    point_pow,
    symmetry_reduce,
    torsion_points_up_to,
)


def P(text):
    return parse_poly(text, 2)


def keyed(points):
    return {tuple((r.num, r.ord) for r in p) for p in points}


ROOT = RootOfUnity.make


class TestCosets:
    def test_relation_base_lies_on_coset(self):
        c = coset_from_relation((2, -3), ROOT(1, 8))
        assert c.dim == 1
        assert c.contains(c.base)
        assert c.values() == (ROOT(1, 8),)

    def test_negated_relation_same_coset(self):
        a = coset_from_relation((1, -1), ROOT(1, 3))
        b = coset_from_relation((-1, 1), ROOT(2, 3))
        assert a.key() == b.key()

    def test_membership(self):
        c = coset_from_relation((1, 1), ROOT(0, 1))  # x*y = 1
        assert c.contains((ROOT(1, 5), ROOT(4, 5)))
        assert not c.contains((ROOT(1, 5), ROOT(1, 5)))

    def test_json_round_trip(self):
        c = coset_from_relation((1, -2), ROOT(3, 8))
        back = TorsionCoset.from_json(c.to_json())
        assert back == c

    def test_verify_positive_and_negative(self):
        f = P("x*y - 1")
        on = coset_from_relation((1, 1), ROOT(0, 1))
        off = coset_from_relation((1, 1), ROOT(1, 2))
        assert coset_verify(f, on)
        assert not coset_verify(f, off)

    def test_verify_product_factor(self):
        f = P("(x + y - 1)*(x^2*y - z3)")
        for c in binomial_classify(P("x^2*y - z3")):
            assert coset_verify(f, c)


class TestBinomials:
    def test_plain(self):
        cosets = binomial_classify(P("x*y - 1"))
        assert len(cosets) == 1
        assert cosets[0].lattice == ((1, 1),)

    def test_imprimitive_splits(self):
        # x^2*y^2 = z3 has two connected solution cosets
        cosets = binomial_classify(P("x^2*y^2 - z3"))
        assert len(cosets) == 2
        assert all(c.lattice == ((1, 1),) for c in cosets)
        vals = {c.values()[0] for c in cosets}
        assert vals == {ROOT(1, 6), ROOT(4, 6)}

    def test_non_root_ratio_empty(self):
        assert binomial_classify(P("x*y - 2")) == []

    def test_monomial_empty(self):
        assert binomial_classify(P("3*x^2*y")) == []


class TestSymmetry:
    @pytest.mark.parametrize(
        "src", ["x^2 + x*y + 1", "x^2 + y^2 - x*y - 1", "x^2*y^2 - 2*x*y + 1"]
    )
    def test_reduction_identity(self, src):
        f = P(src)
        h, e0, r_mat, rank = symmetry_reduce(f)
        # f(x) = x^e0 * h(x^R) on a sample of torsion points
        for pt in [
            (ROOT(1, 5), ROOT(3, 8)),
            (ROOT(2, 7), ROOT(1, 2)),
            (ROOT(0, 1), ROOT(5, 12)),
        ]:
            image = point_pow(pt, r_mat)
            lhs = evaluate_at_torsion(f, pt)
            mono = pt[0] ** e0[0] * pt[1] ** e0[1]
            rhs = evaluate_at_torsion(h, image) * mono.as_cyclonum()
            assert lhs == rhs

    def test_no_symmetry_returns_none(self):
        assert symmetry_reduce(P("x + y - 1")) is None

    def test_full_support_lattice(self):
        h, _, _, rank = symmetry_reduce(P("x^2 + x*y + 1"))
        assert rank == 2
        assert symmetry_reduce(h) is None

    def test_rank_one(self):
        h, _, r_mat, rank = symmetry_reduce(P("x^2*y^2 - 2*x*y + 1"))
        assert rank == 1
        col = tuple(r_mat[i][0] for i in range(2))
        assert col in ((1, 1), (-1, -1))


class TestPreimages:
    @given(
        st.tuples(st.integers(0, 11), st.integers(1, 12)),
        st.tuples(st.integers(0, 11), st.integers(1, 12)),
    )
    @settings(max_examples=25, deadline=None)
    def test_preimages_map_back(self, a, b):
        target = (ROOT(a[0], a[1]), ROOT(b[0], b[1]))
        mat = ((1, 2), (1, 0))
        pre = monomial_preimages(target, mat)
        assert len(pre) == abs(det_int(mat))
        assert len(keyed(pre)) == len(pre)
        for q in pre:
            assert point_pow(q, mat) == target


class TestTransforms:
    @pytest.mark.parametrize(
        "src",
        ["x + y - 1", "z4*x + y - 1", "x^2*y - z5*x + y^3", "z12*x^2 + y^2 - 1 - x"],
    )
    def test_cover_all_torsion_zeros(self, src):
        # every torsion zero of f is a zero of at least one transform
        f, conductor = minimal_field(P(src))
        transforms = descent_transforms(f, conductor)
        for pt in bruteforce_oracle(f, 16):
            assert any(
                evaluate_at_torsion(g, pt).is_zero() for g in transforms
            ), pt

    def test_transform_count(self):
        f, n = minimal_field(P("x + y - 1"))
        assert len(descent_transforms(f, n)) == 7
        f, n = minimal_field(P("z4*x + y - 1"))
        assert len(descent_transforms(f, n)) == 7


class TestSolveKnown:
    def test_hexagonal_line(self):
        rep = descent_solve(P("x + y - 1"))
        assert keyed(rep.isolated) == {((1, 6), (5, 6)), ((5, 6), (1, 6))}
        assert rep.cosets == []

    def test_no_torsion_zero(self):
        rep = descent_solve(P("x + y - 3"))
        assert rep.isolated == [] and rep.cosets == []

    def test_gaussian_twist(self):
        rep = descent_solve(P("z4*x + y - 1"))
        assert keyed(rep.isolated) == {((7, 12), (1, 6)), ((11, 12), (5, 6))}

    def test_product_drops_covered_points(self):
        rep = descent_solve(P("(x + y - 1)*(x*y - 1)"))
        # the line's two torsion points lie on the hyperbola coset
        assert rep.isolated == []
        assert len(rep.cosets) == 1
        assert rep.cosets[0].lattice == ((1, 1),)

    def test_checkerboard(self):
        rep = descent_solve(P("x^2 + x*y + 1"))
        assert keyed(rep.isolated) == {
            ((1, 3), (0, 1)),
            ((2, 3), (0, 1)),
            ((1, 6), (1, 2)),
            ((5, 6), (1, 2)),
        }

    def test_squared_binomial(self):
        rep = descent_solve(P("(x*y - z8)^2"))
        assert len(rep.cosets) == 1
        assert rep.cosets[0].values() == (ROOT(1, 8),)

    def test_counts_and_json(self):
        rep = descent_solve(P("(x - z12^7)*(y - z3)"))
        assert rep.counts == {"j0": 0, "j1": 2}
        js = rep.to_json()
        assert js["counts"] == {"j0": 0, "j1": 2}
        assert len(js["cosets"]) == 2

    def test_zero_poly_rejected(self):
        with pytest.raises(DegenerateInput):
            descent_solve(MPoly.zero(2))

    def test_three_vars_rejected(self):
        with pytest.raises(UnsupportedDimension):
            descent_solve(MPoly.variable(3, 0))

    def test_depth_cap(self):
        with pytest.raises(DescentDepthExceeded):
            descent_solve(P("x + y - 1"), max_depth=0)

    def test_univariate_input(self):
        rep = descent_solve(parse_poly("x^2 - x + 1", 1))
        assert keyed(rep.isolated) == {((1, 6),), ((5, 6),)}


class TestAgainstOracle:
    @pytest.mark.parametrize("max_order", [18])
    def test_corpus_agreement(self, corpus, max_order):
        for name, f in corpus.items():
            rep = descent_solve(f)
            for p in rep.isolated:
                assert evaluate_at_torsion(f, p).is_zero(), name
            for c in rep.cosets:
                assert coset_verify(f, c), name
            got = keyed(torsion_points_up_to(rep, max_order))
            want = keyed(bruteforce_oracle(f, max_order))
            assert got == want, name

    @settings(deadline=None, max_examples=20)
    @given(st.data())
    def test_random_products(self, data):
        order = data.draw(st.sampled_from([3, 4, 5, 8, 12]))
        k = data.draw(st.integers(0, order - 1))
        shift = data.draw(st.sampled_from([-2, -1, 1, 2]))
        u = data.draw(st.integers(0, 2))
        v = data.draw(st.integers(0, 2))
        root = ROOT(k, order).as_cyclonum()
        line = MPoly.from_terms(
            2,
            [
                ((1, 0), root),
                ((0, 1), CycloNum.one()),
                ((0, 0), CycloNum.from_rational(shift)),
            ],
        )
        f = line
        if u or v:
            binom = MPoly.from_terms(
                2, [((u, v), CycloNum.one()), ((0, 0), -root)]
            )
            f = line * binom
        rep = descent_solve(f)
        for p in rep.isolated:
            assert evaluate_at_torsion(f, p).is_zero()
        for c in rep.cosets:
            assert coset_verify(f, c)
        assert keyed(torsion_points_up_to(rep, 12)) == keyed(
            bruteforce_oracle(f, 12)
        )


class TestReportHygiene:
    def test_normalization_dedupes(self):
        c = coset_from_relation((1, 1), ROOT(0, 1))
        rep = SolveReport(
            [(ROOT(1, 5), ROOT(4, 5)), (ROOT(1, 6), ROOT(1, 6))],
            [c, coset_from_relation((-1, -1), ROOT(0, 1))],
        ).normalized()
        assert len(rep.cosets) == 1
        # the first point lies on the coset; the second survives
        assert keyed(rep.isolated) == {((1, 6), (1, 6))}

    def test_points_up_to_includes_coset_points(self):
        rep = descent_solve(P("x*y - 1"))
        pts = torsion_points_up_to(rep, 6)
        assert keyed(pts) >= {((1, 6), (5, 6)), ((1, 4), (3, 4)), ((0, 1), (0, 1))}
        for p in pts:
            assert (p[0] * p[1]).is_one
