"""
Text formats: Gauss codes, braid words and polynomials.

Gauss code:   tokens separated by ASCII whitespace, token := (O|U|o|u) INT (+|-)?
Polynomial:   term := INT | INT? "t" ("^" INT)? ; poly := term ("+" term)*
              or the list form "k:c0,c1,...,cl" (coefficients from degree k)
Braid word:   ASCII-whitespace separated nonzero integers, e.g. "1 -2 1 -2"
INT is ASCII digits only; other Unicode digits and spaces are syntax errors.
"""
import logging
import re
from dataclasses import dataclass

from .diagram_core import GaussDiagram, Pass, Sign, Strand, canonical_ids, validate
from .exceptions import (
    InvalidBraid,
    NegativeCoefficient,
    NegativeDegree,
    NotAKnot,
    NotationSyntaxError,
)
from .laurent import WarpPoly

logger = logging.getLogger(__name__)

TOKEN_RE = re.compile(r'^([OoUu])(\d+)([+-]?)$', re.ASCII)
TERM_RE = re.compile(r'^(?P<coef>-?\d+)?(?:(?P<var>t)(?:\^(?P<exp>-?\d+))?)?$', re.ASCII)
INT_RE = re.compile(r'^[+-]?\d+$', re.ASCII)
# tylko białe znaki ASCII rozdzielają tokeny
ASCII_SPACE = ' \t\n\r\f\v'
SEPARATOR_RE = re.compile(r'[ \t\n\r\f\v]+')
SIGNS = {'+': Sign.POSITIVE, '-': Sign.NEGATIVE}


def split_tokens(text):
    stripped = text.strip(ASCII_SPACE)
    return SEPARATOR_RE.split(stripped) if stripped else []


def parse_gauss(text):
    passes = []
    for position, token in enumerate(split_tokens(text), start=1):
        match = TOKEN_RE.match(token)
        if not match or int(match.group(2)) < 1:
            raise NotationSyntaxError(f"bad token {token!r} at position {position}", position=position)
        letter, number, sign = match.groups()
        passes.append(Pass(int(number), Strand(letter.upper()), SIGNS.get(sign)))
    return validate(passes)


def _pass_key(p):
    sign = {None: 0, Sign.POSITIVE: 1, Sign.NEGATIVE: 2}[p.sign]
    return (0 if p.is_over else 1, p.crossing, sign)


def canonical_form(diagram):
    """
    First-appearance ids over every rotation, keeping the lexicographically
    least one (O < U, then id, then sign).
    """
    passes = diagram.passes
    if not passes:
        return diagram
    rotations = (
        canonical_ids(GaussDiagram(passes[r:] + passes[:r])) for r in range(len(passes))
    )
    return min(rotations, key=lambda d: [_pass_key(p) for p in d.passes])


def format_gauss(diagram, canonical=False):
    if canonical:
        diagram = canonical_form(diagram)
    return str(diagram)


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...]

    def __post_init__(self):
        if self.strands < 2:
            raise InvalidBraid(f"a braid needs at least 2 strands, got {self.strands}")
        if not self.letters:
            raise InvalidBraid("empty braid word")
        for w in self.letters:
            if w == 0 or abs(w) > self.strands - 1:
                raise InvalidBraid(f"generator {w} is outside 1..{self.strands - 1}")

    def mirror(self):
        return BraidWord(self.strands, tuple(-w for w in self.letters))

    def __str__(self):
        return ' '.join(str(w) for w in self.letters)


def parse_braid(text, strands=None):
    letters = []
    for position, token in enumerate(split_tokens(text), start=1):
        if not INT_RE.fullmatch(token):
            raise NotationSyntaxError(f"bad braid letter {token!r} at position {position}", position=position)
        letters.append(int(token))
    if strands is None:
        strands = max((abs(w) for w in letters), default=0) + 1
    return BraidWord(strands, tuple(letters))


def braid_closure(word):
    """
    Gauss code of the closure of a braid word.

    Crossing s is the s-th letter. The strand at the upper position |w| passes
    Over for positive letters and Under for negative ones; the two strands then
    swap positions. The code follows the strand starting at position 1.
    """
    n = word.strands
    at_position = list(range(n))  # strand sitting at each position
    recorded = [[] for _ in range(n)]
    for s, w in enumerate(word.letters, start=1):
        upper, lower = abs(w) - 1, abs(w)
        sign = Sign.POSITIVE if w > 0 else Sign.NEGATIVE
        upper_strand = Strand.OVER if w > 0 else Strand.UNDER
        recorded[at_position[upper]].append(Pass(s, upper_strand, sign))
        recorded[at_position[lower]].append(Pass(s, upper_strand.opposite, sign))
        at_position[upper], at_position[lower] = at_position[lower], at_position[upper]

    # domknięcie: pasmo kończące na pozycji p przechodzi w pasmo startujące z p
    final_position = {strand: pos for pos, strand in enumerate(at_position)}
    passes, strand, visited = [], 0, 0
    while True:
        passes.extend(recorded[strand])
        visited += 1
        strand = final_position[strand]
        if strand == 0:
            break
    if visited != n:
        raise NotAKnot(f"closure of {word} has more than one component")
    logger.debug(f"Closed braid {word} on {n} strands into {len(passes) // 2} crossings")
    return validate(passes)


def parse_poly(text):
    compact = ''.join(split_tokens(text))
    if ':' in compact:
        return _parse_list_form(compact)
    if not compact:
        raise NotationSyntaxError("empty polynomial", position=1)

    coeffs = {}
    for position, term in enumerate(compact.split('+'), start=1):
        match = TERM_RE.match(term)
        if not term or not match or (match['coef'] is None and match['var'] is None):
            raise NotationSyntaxError(f"bad term {term!r} at position {position}", position=position)
        coefficient = int(match['coef']) if match['coef'] is not None else 1
        if match['var'] is None:
            degree = 0
        else:
            degree = int(match['exp']) if match['exp'] is not None else 1
        if degree < 0:
            raise NegativeDegree(f"term {term!r} has a negative degree")
        if coefficient < 0:
            raise NegativeCoefficient(f"term {term!r} has a negative coefficient")
        coeffs[degree] = coeffs.get(degree, 0) + coefficient
    return WarpPoly.from_dict(coeffs)


def _parse_list_form(text):
    start, _, body = text.partition(':')
    fields = [start, *body.split(',')]
    for position, value in enumerate(fields, start=1):
        if not INT_RE.fullmatch(value):
            raise NotationSyntaxError(f"bad list-form entry {value!r} at position {position}", position=position)
    k, *values = (int(v) for v in fields)
    if k < 0:
        raise NegativeDegree(f"list form starts at negative degree {k}")
    return WarpPoly.from_dict({k + i: c for i, c in enumerate(values)})


def format_poly(p, compact=False):
    if not compact:
        return str(p)
    if p.is_zero:
        return '0:0'
    return f"{p.ldeg}:{','.join(str(c) for c in p.coefficient_list())}"
