import pytest

from vps.poly import parse
from vps.spinor import (SPINOR_QUADRICS, eliminated_quadrics, minimal_generators_agree, pfaffian_identities,
                        renaming_forms, spinor_check, spinor_quadrics, spinor_ring)


def test_spinor_identification():
    report = spinor_check()
    assert report.ok
    assert len(eliminated_quadrics()) == 10


def test_relation_between_the_quadrics():
    q = spinor_quadrics()
    total = sum((q[i] * q[i + 5] for i in range(5)), spinor_ring().zero())
    assert total.is_zero()


def test_flipped_sign_breaks_the_relation():
    ring = spinor_ring()
    q = spinor_quadrics()
    q[2] = parse(SPINOR_QUADRICS[2].replace("- x14*x25", "+ x14*x25"), ring)
    total = sum((q[i] * q[i + 5] for i in range(5)), ring.zero())
    assert not total.is_zero()


def test_renamed_forms_are_independent():
    from vps.linalg import rank
    forms = renaming_forms()
    ring = forms[0].ring
    units = [tuple(int(j == i) for j in range(ring.nvars)) for i in range(ring.nvars)]
    assert rank([[f.coeff(e) for e in units] for f in forms]) == 16


def test_pfaffians():
    assert pfaffian_identities(spinor_quadrics())


@pytest.mark.slow
def test_minimal_generators_of_the_six_point_chart():
    assert minimal_generators_agree()
