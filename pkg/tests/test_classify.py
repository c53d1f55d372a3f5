"""Classification, extraction, homeomorphism, and normal-form naming."""

import pytest

from surfclass.classify import (classify, extract_component, homeomorphic,
                                normal_form_name)
from surfclass.engine import make_engine
from surfclass.errors import (ComponentOutOfRange, InvalidSurface,
                              InvalidTriple)
from surfclass.generate import disjoint_union, relabel, subdivide, surface
from surfclass.invariants import euler_characteristic, invariant_triple
from surfclass.triangulation import Triangulation, parse
from surfclass.validate import check_surface


def test_classify_klein(klein):
    assert classify(klein) == [(1, -1, 1)]


def test_classify_empty():
    assert classify(parse("")) == []


def test_classify_union_ordering():
    union = disjoint_union([surface(True, 1, 0), surface(True, 0, 1),
                            surface(False, 1, 1)])
    assert classify(union) == [(0, 0, 0), (0, 1, 1), (1, 0, 1)]


def test_classify_rejects_invalid():
    bad = Triangulation([((2, 12), None, None), (None, None, None)])
    with pytest.raises(InvalidSurface) as exc:
        classify(bad)
    assert exc.value.violations


def test_extract_identity_on_connected(klein):
    assert extract_component(klein, 1) == klein


def test_extract_union_components():
    torus = surface(True, 1, 0)
    sphere = surface(True, 0, 0)
    union = disjoint_union([torus, sphere])
    first = extract_component(union, 1)
    second = extract_component(union, 2)
    assert first == torus
    assert second.n == sphere.n
    assert invariant_triple(second) == (0, 2, 0)
    assert check_surface(second) == []
    with pytest.raises(ComponentOutOfRange):
        extract_component(union, 3)
    with pytest.raises(ComponentOutOfRange):
        extract_component(union, 0)


def test_extract_after_relabel_partitions():
    parts = [surface(True, 1, 0), surface(False, 2, 1), surface(True, 0, 2)]
    union = relabel(disjoint_union(parts), seed=21)
    sizes = []
    triples = []
    for i in (1, 2, 3):
        comp = extract_component(union, i)
        assert check_surface(comp) == []
        sizes.append(comp.n)
        triples.append(invariant_triple(comp))
    assert sum(sizes) == union.n
    # relabelling scrambles extraction order but not the triple multiset
    assert sorted(triples) == [(0, 0, 0), (0, 0, 2), (1, -1, 1)]


def test_metered_extract_matches_baseline():
    union = relabel(disjoint_union([surface(True, 1, 0), surface(True, 0, 0)]),
                    seed=2)
    for i in (1, 2):
        baseline = extract_component(union, i)
        metered = extract_component(union, i, make_engine("metered", tri=union))
        assert baseline == metered


def test_metered_classify_matches_baseline_on_unions():
    union = relabel(disjoint_union(
        [surface(True, 2, 1), surface(False, 1, 0), surface(True, 0, 0),
         surface(False, 2, 2)]), seed=8)
    baseline = classify(union)
    engine = make_engine("metered", tri=union)
    assert classify(union, engine) == baseline
    assert engine.workspace.current_bits == 0
    assert engine.workspace.peak_bits <= engine.workspace.budget_bits


def test_homeomorphic_examples(klein):
    assert homeomorphic(klein, relabel(klein, seed=40))
    assert homeomorphic(surface(True, 0, 0),
                        subdivide(surface(True, 0, 0), 5, seed=2))
    # torus (0,0,0) vs closed Klein bottle (1,0,0)
    assert not homeomorphic(surface(True, 1, 0), surface(False, 2, 0))
    assert homeomorphic(parse(""), parse(""))
    assert not homeomorphic(parse(""), surface(True, 0, 0))


def test_homeomorphic_reports_which_input(klein):
    bad = Triangulation([((2, 12), None, None), (None, None, None)])
    with pytest.raises(InvalidSurface) as exc:
        homeomorphic(bad, klein)
    assert exc.value.which == "first"
    with pytest.raises(InvalidSurface) as exc:
        homeomorphic(klein, bad)
    assert exc.value.which == "second"


def test_component_chi_lower_bound(corpus):
    """Each component's chi is at least chi(S) - 2(c-1)."""
    for spec, tri in corpus:
        if spec.family != "union" or tri.n == 0:
            continue
        triples = classify(tri)
        total = euler_characteristic(tri)
        bound = total - 2 * (len(triples) - 1)
        assert all(t.chi >= bound for t in triples)


def test_duplicate_components_kept():
    union = disjoint_union([surface(True, 0, 0), surface(True, 0, 0)])
    assert classify(union) == [(0, 2, 0), (0, 2, 0)]


def test_normal_form_names():
    klein_punctured = normal_form_name((1, -1, 1))
    assert klein_punctured.text == "Klein bottle with 1 boundary component"
    assert klein_punctured.description == \
        "non-orientable genus 2 with 1 boundary component"
    assert klein_punctured.genus == 2 and klein_punctured.boundary == 1
    assert normal_form_name((0, 2, 0)).text == "sphere"
    assert normal_form_name((0, 1, 1)).text == "disk"
    assert normal_form_name((0, 0, 0)).text == "torus"
    assert normal_form_name((1, 0, 1)).text == "Möbius band"
    assert normal_form_name((1, 1, 0)).text == "projective plane"
    assert normal_form_name((1, 0, 0)).text == "Klein bottle"
    assert normal_form_name((0, -2, 0)).text == "orientable surface of genus 2"
    assert normal_form_name((0, 0, 2)).text == "sphere with 2 boundary components"


def test_normal_form_rejects_unrealizable():
    with pytest.raises(InvalidTriple):
        normal_form_name((0, 1, 0))     # genus would be 1/2
    with pytest.raises(InvalidTriple):
        normal_form_name((1, 2, 0))     # non-orientable genus 0
    with pytest.raises(InvalidTriple):
        normal_form_name((0, 3, 0))     # chi > 2
    with pytest.raises(InvalidTriple):
        normal_form_name((2, 0, 0))     # o out of range


def test_homeomorphic_symmetric_on_corpus(corpus):
    members = [tri for _, tri in corpus[:10]]
    for i, a in enumerate(members):
        assert homeomorphic(a, a)
        for b in members[i + 1:i + 3]:
            assert homeomorphic(a, b) == homeomorphic(b, a)
