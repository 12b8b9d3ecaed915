import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from skewgqc import FieldSpec, SkewRing

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

F2 = FieldSpec(2, 1)
F3 = FieldSpec(3, 1)
F4 = FieldSpec(2, 2)
F9 = FieldSpec(3, 2)

RINGS = {
    "F4": SkewRing.over(F4, "Fq", 1),
    "F9": SkewRing.over(F9, "Fq", 1),
    "S4": SkewRing.over(F4, "S", 1),
}


@pytest.fixture
def f4():
    return RINGS["F4"]


@pytest.fixture
def f9():
    return RINGS["F9"]


@pytest.fixture
def s4():
    return RINGS["S4"]


def ring_size(ring):
    return ring.field.q ** 2 if ring.is_s else ring.field.q


@st.composite
def polys(draw, ring, max_deg=6, monic=False, unit_lead=False, nonzero=False):
    size = ring_size(ring)
    deg = draw(st.integers(0 if (monic or unit_lead or nonzero) else -1, max_deg))
    if deg < 0:
        return ring.zero
    coeffs = draw(st.lists(st.integers(0, size - 1), min_size=deg + 1, max_size=deg + 1))
    if monic:
        coeffs[-1] = 1
    elif unit_lead or nonzero:
        units = [c for c in range(1, size) if ring.coef.is_unit(c)]
        coeffs[-1] = draw(st.sampled_from(units))
    return ring.poly(coeffs)


ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE):
        ok, detail, elapsed = ACCEPTANCE[key]
        terminalreporter.write_line(f"criterion {key}: {'PASS' if ok else 'FAIL'} ({elapsed:.2f}s) {detail}")
