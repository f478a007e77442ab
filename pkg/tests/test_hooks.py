import pytest

from jacklr.alpha import AlphaPoly, AlphaRat
from jacklr.errors import (
    GenericShapeError,
    NotAHorizontalStripError,
    NotContainedError,
    SearchBoundExceededError,
)
from jacklr.hooks import (
    HookAssignment,
    StanleyProduct,
    balanced_assignment_search,
    pieri_assignment,
    rect_union_assignment,
    rectangular_assignment,
    union_factored_form,
)
from jacklr.lr import jack_lr, stanley_coeff
from jacklr.partitions import Box, Partition, complement, partitions_in_box, rectangle

P = Partition
A = AlphaPoly


def grid_assignment(shape, rows):
    """Build an assignment from rows written top to bottom."""
    shape = P(shape)
    choice = {}
    for i, row in enumerate(rows):
        y = len(shape) - 1 - i
        for x, k in enumerate(row.split()):
            choice[Box(x, y)] = k
    return HookAssignment(shape, choice)


def test_single_box_product():
    sp = StanleyProduct(
        HookAssignment.uniform([1], "L"), HookAssignment.uniform([1], "L"), HookAssignment.uniform([2], "U")
    )
    assert sp.value == A((0, 0, 2))
    assert sp.is_balanced()


def test_empty_product_is_one():
    e = HookAssignment.uniform([], "U")
    assert StanleyProduct(e, e, e).value == 1
    assert e.grid() == []


def test_shifted_example_assignment_value():
    sp = StanleyProduct(
        grid_assignment([3, 2, 1], ["U", "U U", "U U L"]),
        grid_assignment([3, 1], ["U", "U U U"]),
        grid_assignment([3, 2, 2, 1, 1], ["L", "L", "L L", "L L", "L L L"]),
    )
    expected = A((8,)) * A((0, 1)) ** 5 * A((3, 1)) ** 2 * A((4, 1)) * A((1, 2)) ** 2
    expected = expected * A((5, 2)) * A((1, 3)) * A((2, 3))
    assert sp.value == expected


def test_assignment_validation_and_json():
    with pytest.raises(ValueError):
        HookAssignment(P([2]), {Box(0, 0): "U"})
    with pytest.raises(ValueError):
        HookAssignment(P([1]), {Box(0, 0): "X"})
    a = grid_assignment([2, 1], ["L", "U L"])
    assert a.to_json() == {"shape": [2, 1], "choices": [[0, 0, "U"], [0, 1, "L"], [1, 0, "L"]]}
    assert HookAssignment.from_json(a.to_json()) == a
    assert a.flipped().flipped() == a


def test_rectangular_333_grid():
    sp = rectangular_assignment([2, 1, 1], 3, 3)
    assert sp.mu.grid() == ["L", "L", "L L"]
    assert sp.nu.grid() == ["U", "U U", "U U"]
    assert sp.lam.grid() == ["U U L", "U L L", "U L L"]
    assert sp.value == stanley_coeff([2, 1, 1], [2, 2, 1], [3, 3, 3])


def test_rectangular_small_and_lr_form():
    assert rectangular_assignment([1], 2, 1).value == A((0, 0, 2))
    for mu in partitions_in_box(3, 3):
        a = rectangular_assignment(mu, 3, 3, variant="A")
        b = rectangular_assignment(mu, 3, 3, variant="B")
        assert a.value == b.value
        lr = rectangular_assignment(mu, 3, 3, form="lr")
        assert lr.value == jack_lr(mu, complement(mu, 3, 3))[rectangle(3, 3)]
        assert lr.to_stanley() == a
    with pytest.raises(NotContainedError):
        rectangular_assignment([4], 3, 3)


def test_rect_union_43331_grids():
    sp = rect_union_assignment([4, 2, 2, 1, 1], 3, 4)
    assert sp.mu.grid() == ["L", "L", "L L", "L L", "U U U U"]
    assert sp.nu.grid() == ["U", "U", "U U"]
    assert sp.lam.grid() == ["U", "U U L", "U U L", "U L L", "L L L L"]
    assert sp.is_balanced()
    assert sp.value == stanley_coeff([4, 2, 2, 1, 1], [2, 1, 1], [4, 3, 3, 3, 1])


def test_rect_union_reduces_to_rectangle():
    for mu in partitions_in_box(2, 3):
        for variant in ("A", "B"):
            assert rect_union_assignment(mu, 2, 3, variant) == rectangular_assignment(mu, 2, 3, variant=variant)
    with pytest.raises(GenericShapeError):
        rect_union_assignment([4, 4], 3, 1)


def test_union_factored_form():
    f = union_factored_form([4, 2, 2, 1, 1], 3, 4)
    assert f.value == jack_lr([4, 2, 2, 1, 1], [2, 1, 1])[[4, 3, 3, 3, 1]]
    g = union_factored_form([2, 1], 1, 1)
    assert g.value == jack_lr([2, 1], [])[[2, 1]] == 1
    inside = union_factored_form([2, 1], 3, 3)
    assert inside.F == 1
    assert inside.to_json()["inner"]["k"] == 3


def test_pieri():
    sp = pieri_assignment([1], [2], 1)
    assert sp.mu.grid() == ["L"]
    assert sp.value == A((0, 0, 2))
    assert pieri_assignment([], [3], 3).value == stanley_coeff([], [3], [3])
    assert pieri_assignment([2, 1], [3, 2], 2).value == stanley_coeff([2, 1], [2], [3, 2])
    with pytest.raises(NotAHorizontalStripError):
        pieri_assignment([1], [1, 1, 1], 2)


def test_search_finds_known_assignments():
    found = balanced_assignment_search([1], [1], [2], A((0, 0, 2)))
    assert len(found) == 3
    assert any(f.mu.grid() == ["L"] and f.nu.grid() == ["L"] and f.lam.grid() == ["U U"] for f in found)
    target = stanley_coeff([2, 1, 1], [2, 2, 1], [3, 3, 3]).as_poly()
    known = rectangular_assignment([2, 1, 1], 3, 3)
    found = balanced_assignment_search([2, 1, 1], [2, 2, 1], [3, 3, 3], target)
    assert known in found
    assert all(f.is_balanced() and f.value == target for f in found)
    assert balanced_assignment_search([1], [1], [2], A()) == []
    with pytest.raises(SearchBoundExceededError):
        balanced_assignment_search([2, 1, 1], [2, 2, 1], [3, 3, 3], target, bound=10)


def test_render_and_json():
    sp = rectangular_assignment([1], 2, 1)
    assert sp.render() == "[1]\nL\n\n[1]\nU\n\n[2]\nU L"
    js = sp.to_json()
    assert js["balanced"] is True
    assert AlphaRat.from_json(js["value"]) == A((0, 0, 2))
