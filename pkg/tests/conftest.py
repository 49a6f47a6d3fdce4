import xml.etree.ElementTree as ET

import numpy as np
import pytest
from hypothesis import settings

from vregion.region import CanonicalParams

settings.register_profile("ci", max_examples=100, deadline=None)
settings.load_profile("ci")

# one pair per boundary shape; these are the pairs drawn in the reference figures
FIGURE_PARAMS = {
    "full_circle": CanonicalParams(3 / 4, 1 / 4),
    "convex_jordan": CanonicalParams(1 / 4, 4 / 17),
    "mixed": CanonicalParams(2 / 3, 1 / 3),
}


@pytest.fixture(params=list(FIGURE_PARAMS), ids=list(FIGURE_PARAMS))
def figure_params(request):
    return FIGURE_PARAMS[request.param]


def richardson_derivatives(f, z, h=1e-4):
    """Central differences along the real axis, Richardson-extrapolated in h.

    Independent of the jet machinery: only point evaluations of ``f`` are used.
    """

    def d1(hh):
        return (f(z + hh) - f(z - hh)) / (2 * hh)

    def d2(hh):
        return (f(z + hh) - 2 * f(z) + f(z - hh)) / hh**2

    return (4 * d1(h / 2) - d1(h)) / 3, (4 * d2(h / 2) - d2(h)) / 3


def random_params(rng, n):
    out = []
    while len(out) < n:
        r = rng.uniform(0.05, 0.95)
        s = rng.uniform(0.0, r)
        if r - s > 1e-3:
            out.append(CanonicalParams(r, s))
    return out


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


SVG_NS = "{http://www.w3.org/2000/svg}"


def svg_paths(text):
    """Parse SVG text; return the root and its boundary ``path`` elements."""
    root = ET.fromstring(text.encode())
    return root, [e for e in root.iter(SVG_NS + "path")]


def path_vertices(d):
    """Vertices of an ``M x,y L x,y ... [Z]`` path as complex numbers."""
    nums = d.replace("M", " ").replace("L", " ").replace("Z", " ").split()
    return np.array([complex(*map(float, n.split(","))) for n in nums])


# one summary line per acceptance criterion, printed at the end of the run
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for k in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[k])
