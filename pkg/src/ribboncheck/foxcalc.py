"""
Fox free differential calculus.

The Fox derivative d/dx_j is the unique additive map on the free group
ring with dx_i/dx_j = [i == j] and the product rule
d(uv)/dx_j = du/dx_j + u * dv/dx_j; applying it to x x^-1 = 1 forces
d(x^-1)/dx = -x^-1.  Derivatives of the relators of a presentation,
pushed through the abelianization into the Laurent ring, assemble into
the Jacobian matrix that presents the rel-basepoint Alexander module.

Derivatives are computed in a single left-to-right pass carrying the
accumulated prefix, so long relators stay linear-time.  The group ring
is only materialised by fox_derivative itself; the Jacobian applies the
abelianization eagerly, term by term, since Laurent arithmetic is far
cheaper than free-group ring arithmetic.
"""

from dataclasses import dataclass
from typing import Tuple

from .laurent import LaurentPoly
from .wirtinger import free_reduce, word_multiply


class GroupRingElement(dict):
    """Finite map from freely reduced words to nonzero integer coefficients."""

    def __init__(self, data=None):
        super().__init__()
        if data:
            for w, c in data.items():
                self.add(w, c)

    def add(self, word, coeff):
        word = free_reduce(word)
        s = self.get(word, 0) + coeff
        if s:
            self[word] = s
        else:
            self.pop(word, None)

    def __add__(self, other):
        out = GroupRingElement(self)
        for w, c in other.items():
            out.add(w, c)
        return out

    def __neg__(self):
        return GroupRingElement({w: -c for w, c in self.items()})

    def left_multiply(self, word):
        out = GroupRingElement()
        for w, c in self.items():
            out.add(word_multiply(word, w), c)
        return out


def fox_derivative(word, gen):
    """
    The Fox derivative of a free word with respect to generator `gen`,
    as a GroupRingElement.

    >>> x = ((0, 1),)
    >>> dict(fox_derivative(x, 0))
    {(): 1}
    >>> dict(fox_derivative(((0, -1),), 0))
    {((0, -1),): -1}
    """
    result = GroupRingElement()
    prefix = ()
    for g, e in word:
        if e == 1:
            if g == gen:
                result.add(prefix, 1)
            prefix = word_multiply(prefix, ((g, 1),))
        else:
            prefix = word_multiply(prefix, ((g, -1),))
            if g == gen:
                result.add(prefix, -1)
    return result


@dataclass(frozen=True)
class AlexanderPresentation:
    """Fox Jacobian over Z[t1^±1..tm^±1]; rows are relators, columns generators."""
    matrix: Tuple[Tuple[LaurentPoly, ...], ...]
    nvars: int
    generator_component: Tuple[int, ...]

    @property
    def num_relators(self):
        return len(self.matrix)

    @property
    def num_generators(self):
        return len(self.generator_component)


def _fox_row(word, num_generators, phi):
    """phi-image of all Fox derivatives of one word, in a single pass."""
    m = phi.num_components
    cells = [dict() for _ in range(num_generators)]

    def bump(g, exps, delta):
        s = cells[g].get(exps, 0) + delta
        if s:
            cells[g][exps] = s
        else:
            del cells[g][exps]

    prefix = [0] * m
    for g, e in word:
        comp = phi.component_of[g]
        if e == 1:
            bump(g, tuple(prefix), 1)
            prefix[comp] += 1
        else:
            prefix[comp] -= 1
            bump(g, tuple(prefix), -1)
    return tuple(LaurentPoly(m, c) for c in cells)


def jacobian(pres, phi):
    """
    Assemble the Alexander presentation matrix with entries
    phi(d r_i / d x_j).

    >>> from .wirtinger import GroupPresentation, AbelianizationMap
    >>> p = GroupPresentation(2, ((((0,1),(1,1),(0,-1),(1,-1)),)))
    >>> A = jacobian(p, AbelianizationMap((0, 1), 2))
    >>> [str(e) for e in A.matrix[0]]
    ['-t2 + 1', 't1 - 1']
    """
    if len(phi.component_of) != pres.num_generators:
        raise ValueError("abelianization map does not match presentation")
    rows = tuple(_fox_row(r, pres.num_generators, phi) for r in pres.relators)
    return AlexanderPresentation(rows, phi.num_components, phi.component_of)
