import random

import pytest

from ribboncheck.alexander import alexander_polynomial
from ribboncheck.laurent import parse_poly
from ribboncheck.linkcodec import DiagramError, parse_link_spec
from ribboncheck.oracles import (abelian_invariants,
                                 cover_torsion_from_polynomial,
                                 cyclic_cover_check, reidemeister_schreier,
                                 rewriting_sizes, smith_normal_form,
                                 torres_check)
from ribboncheck.wirtinger import wirtinger_presentation


class TestSmithNormalForm:
    def test_small(self):
        assert smith_normal_form([[2, 4], [6, 8]]) == [2, 4]
        assert smith_normal_form([[1, 0], [0, 1]]) == [1, 1]
        assert smith_normal_form([[0, 0], [0, 0]]) == []

    def test_divisibility_chain_random(self):
        rng = random.Random(606)
        for _ in range(60):
            nr, nc = rng.randint(1, 5), rng.randint(1, 5)
            mat = [[rng.randint(-9, 9) for _ in range(nc)] for _ in range(nr)]
            diag = smith_normal_form(mat)
            for a, b in zip(diag, diag[1:]):
                assert b % a == 0

    def test_determinant_preserved(self):
        rng = random.Random(607)
        for _ in range(40):
            n = rng.randint(1, 4)
            mat = [[rng.randint(-6, 6) for _ in range(n)] for _ in range(n)]
            det = _int_determinant(mat)
            diag = smith_normal_form(mat)
            if det == 0:
                assert len(diag) < n
            else:
                prod = 1
                for d in diag:
                    prod *= d
                assert prod == abs(det)

    def test_abelian_invariants(self):
        inv = abelian_invariants([[2, 0], [0, 0]], 3)
        assert inv.free_rank == 2
        assert inv.torsion_factors == (2,)
        assert inv.torsion_order() == 2


def _int_determinant(mat):
    n = len(mat)
    if n == 1:
        return mat[0][0]
    total = 0
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in mat[1:]]
        term = mat[0][j] * _int_determinant(minor)
        total += term if j % 2 == 0 else -term
    return total


class TestReidemeisterSchreier:
    def cover(self, spec, k):
        pres, phi = wirtinger_presentation(parse_link_spec(spec))
        return reidemeister_schreier(pres, phi, k)

    def test_trefoil_double_cover(self):
        inv = self.cover("braid:n=2:1 1 1", 2)
        assert inv.free_rank == 1
        assert inv.torsion_factors == (3,)

    def test_figure_eight_double_cover(self):
        inv = self.cover("braid:n=3:1 -2 1 -2", 2)
        assert inv.free_rank == 1
        assert inv.torsion_factors == (5,)

    def test_unknot_covers(self):
        for k in (2, 3, 5):
            inv = self.cover("braid:n=1:", k)
            assert inv.free_rank == 1
            assert inv.torsion_factors == ()

    def test_rejects_links(self):
        pres, phi = wirtinger_presentation(parse_link_spec("braid:n=2:1 1"))
        with pytest.raises(DiagramError):
            reidemeister_schreier(pres, phi, 2)

    def test_rejects_degree_one(self):
        pres, phi = wirtinger_presentation(parse_link_spec("braid:n=2:1 1 1"))
        with pytest.raises(ValueError):
            reidemeister_schreier(pres, phi, 1)

    def test_rewriting_bookkeeping(self, bundled_knots):
        # raw Schreier rewriting multiplies the deficiency by the index
        for name, diagram in bundled_knots[:8]:
            pres, _ = wirtinger_presentation(diagram)
            for k in (2, 3):
                gens, rels = rewriting_sizes(pres, k)
                assert gens - rels == k * (pres.num_generators -
                                           len(pres.relators)), name


class TestCoverOrderFormula:
    def test_trefoil_values(self):
        p = parse_poly("t^2 - t + 1", 1)
        assert cover_torsion_from_polynomial(p, 2) == 3
        assert cover_torsion_from_polynomial(p, 3) == 4
        assert cover_torsion_from_polynomial(p, 5) == 1

    def test_figure_eight_values(self):
        p = parse_poly("t^2 - 3*t + 1", 1)
        assert cover_torsion_from_polynomial(p, 2) == 5
        assert cover_torsion_from_polynomial(p, 3) == 16
        assert cover_torsion_from_polynomial(p, 5) == 121

    def test_trivial(self):
        one = parse_poly("1", 1)
        for k in (2, 3, 5):
            assert cover_torsion_from_polynomial(one, k) == 1

    def test_unit_shift_invariance(self):
        p = parse_poly("t^2 - t + 1", 1)
        shifted = p.shifted((-1,)) * -1
        for k in (2, 3, 5):
            assert cover_torsion_from_polynomial(shifted, k) == \
                cover_torsion_from_polynomial(p, k)

    def test_determinant_special_case(self, bundled_knots):
        # the 2-fold formula is |Delta(-1)|
        for name, diagram in bundled_knots:
            value = alexander_polynomial(diagram).value
            assert cover_torsion_from_polynomial(value, 2) == \
                abs(value.evaluate([-1])), name


class TestCyclicCoverAgreement:
    def test_trefoil_all_listed_degrees(self):
        d = parse_link_spec("braid:n=2:1 1 1")
        pres, phi = wirtinger_presentation(d)
        delta = alexander_polynomial(d)
        for k in (2, 3, 5):
            inv = reidemeister_schreier(pres, phi, k)
            assert cyclic_cover_check(delta, k, inv)

    def test_random_braid_knots(self):
        # the two computation routes share no code, so agreement across
        # random closures pins down every sign and orientation convention
        rng = random.Random(0xC0FE)
        from conftest import random_braid_knot
        from ribboncheck.linkcodec import braid_closure
        for _ in range(15):
            word = random_braid_knot(rng, max_strands=4, max_letters=9)
            d = braid_closure(word)
            pres, phi = wirtinger_presentation(d)
            delta = alexander_polynomial(d)
            for k in (2, 3):
                inv = reidemeister_schreier(pres, phi, k)
                assert cyclic_cover_check(delta, k, inv), word


class TestTorres:
    def test_hopf(self):
        report = torres_check(parse_link_spec("braid:n=2:1 1"))
        assert report.status == "pass"
        assert report.linking == 1

    def test_torus_2_4(self):
        report = torres_check(parse_link_spec("braid:n=2:1 1 1 1"))
        assert report.status == "pass"
        assert report.linking == 2

    def test_unlink_degenerate(self):
        report = torres_check(parse_link_spec("braid:n=2:"))
        assert report.status == "degenerate"
        assert report.linking == 0

    def test_negative_linking(self):
        report = torres_check(parse_link_spec("braid:n=2:-1 -1 -1 -1"))
        assert report.status == "pass"
        assert report.linking == -2

    def test_trefoil_with_meridian(self):
        # trefoil on strands 1-2, meridian-ish circle woven through once
        report = torres_check(parse_link_spec("braid:n=3:1 1 1 2 2"))
        assert report.status == "pass"

    def test_bundled_links(self, bundled_links):
        for name, diagram in bundled_links:
            report = torres_check(diagram)
            lk = report.linking
            assert report.status == ("degenerate" if lk == 0 else "pass"), name

    def test_rejects_knots(self):
        with pytest.raises(DiagramError):
            torres_check(parse_link_spec("braid:n=2:1 1 1"))

    def test_random_two_component_closures(self):
        from ribboncheck.linkcodec import BraidWord, braid_closure, \
            linking_number
        rng = random.Random(0x70FF)
        checked = 0
        while checked < 12:
            n = rng.randint(2, 4)
            length = rng.randint(2, 9)
            letters = tuple(rng.choice([1, -1]) * rng.randint(1, n - 1)
                            for _ in range(length))
            word = BraidWord(n, letters)
            d = braid_closure(word)
            if d.num_components != 2 or linking_number(d, 0, 1) == 0:
                continue
            checked += 1
            assert torres_check(d).status == "pass", word
