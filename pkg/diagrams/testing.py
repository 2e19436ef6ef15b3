"""
Hypothesis strategies and sample codes shared by the test modules.
"""
from hypothesis import strategies as st

from .diagram_core import Pass, Sign, Strand, validate

TREFOIL = 'O1 U2 O3 U1 O2 U3'
ONE_BRIDGE_3 = 'O1 O2 O3 U1 U2 U3'
FIGURE_EIGHT_BRAID = '1 -2 1 -2'


@st.composite
def gauss_codes(draw, min_crossings=1, max_crossings=8, signed=False):
    """
    Random valid Gauss code: a shuffled double-occurrence word plus Over/Under
    choices, and with signed=True a sign on every crossing.
    """
    c = draw(st.integers(min_value=min_crossings, max_value=max_crossings))
    word = draw(st.permutations([x for x in range(1, c + 1) for _ in range(2)]))
    first_over = draw(st.lists(st.booleans(), min_size=c, max_size=c))
    signs = draw(st.lists(st.sampled_from(Sign), min_size=c, max_size=c)) if signed else [None] * c
    seen = set()
    passes = []
    for x in word:
        over = first_over[x - 1] if x not in seen else not first_over[x - 1]
        seen.add(x)
        passes.append(Pass(x, Strand.OVER if over else Strand.UNDER, signs[x - 1]))
    return validate(passes)


@st.composite
def coded_edges(draw, **kwargs):
    """A code together with one of its edges."""
    diagram = draw(gauss_codes(**kwargs))
    return diagram, draw(st.integers(min_value=0, max_value=diagram.edge_count - 1))
