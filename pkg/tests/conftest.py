from __future__ import annotations

import pytest

from chevalley_b import ring_from_descriptor

# the five ring kinds of the relation suite, plus a quadratic extension
RING_DESCRIPTORS = {
    "GF(7)": "gfp(7)",
    "Z/9": "zmod(3,2)",
    "Z/27": "zmod(3,3)",
    "GF(7)[eps]": "dual(gfp(7))",
    "Z_(5)": "zloc(5)",
}
EXTRA_RINGS = {"GF(7)[sqrt3]": "sqrt-ext(gfp(7),3)", "Z/9[sqrt2]": "sqrt-ext(zmod(3,2),2)"}


def ring(name: str):
    return ring_from_descriptor({**RING_DESCRIPTORS, **EXTRA_RINGS}[name])


@pytest.fixture(params=list(RING_DESCRIPTORS))
def any_ring(request):
    return ring(request.param)
