"""
Wirtinger presentations of link groups.

A LinkDiagram yields a presentation of the fundamental group of the link
exterior with one generator per arc (a positively oriented meridian of
that arc) and one relator per crossing: at a crossing with over arc o,
incoming under arc u, outgoing under arc v and sign e, the under strand's
meridian is conjugated by the over strand's,

    v = o^e u o^-e,

stored as the relator  v (o^e u o^-e)^-1.  All relators are kept; the
classical redundancy of any single one is checked downstream, not used.

Alongside the presentation we return the map onto Z^m sending each
generator to the basis vector of its arc's component.  Free words are
tuples of (generator index, ±1) pairs, stored freely reduced.
"""

from dataclasses import dataclass
from typing import Tuple

from .linkcodec import DiagramError


def free_reduce(letters):
    """Freely reduce a sequence of (generator, ±1) letters."""
    out = []
    for g, e in letters:
        if out and out[-1][0] == g and out[-1][1] == -e:
            out.pop()
        else:
            out.append((g, e))
    return tuple(out)


def word_inverse(word):
    return tuple((g, -e) for g, e in reversed(word))


def word_multiply(*words):
    letters = []
    for w in words:
        letters.extend(w)
    return free_reduce(letters)


@dataclass(frozen=True)
class GroupPresentation:
    num_generators: int
    relators: Tuple[Tuple[Tuple[int, int], ...], ...]

    def __post_init__(self):
        for r in self.relators:
            for g, e in r:
                if not 0 <= g < self.num_generators:
                    raise DiagramError("relator letter %d out of range" % g)
                if e not in (1, -1):
                    raise DiagramError("letter exponents must be ±1")


@dataclass(frozen=True)
class AbelianizationMap:
    """Generator -> component map inducing pi_1 ->> Z^m on meridians."""
    component_of: Tuple[int, ...]
    num_components: int

    def __post_init__(self):
        for c in self.component_of:
            if not 0 <= c < self.num_components:
                raise DiagramError("component index %d out of range" % c)


def wirtinger_presentation(diagram):
    """
    Presentation of the link group plus the meridian abelianization map.

    >>> from .linkcodec import parse_link_spec
    >>> p, phi = wirtinger_presentation(parse_link_spec("braid:n=2:1 1 1"))
    >>> p.num_generators, len(p.relators)
    (3, 3)
    >>> phi.component_of
    (0, 0, 0)
    """
    if diagram.num_arcs == 0:
        raise DiagramError("diagram has no arcs")
    relators = []
    for c in diagram.crossings:
        conj = free_reduce(
            ((c.over, c.sign), (c.under_in, 1), (c.over, -c.sign)))
        relators.append(word_multiply(((c.under_out, 1),), word_inverse(conj)))
    phi = AbelianizationMap(diagram.component_of_arc, diagram.num_components)
    return GroupPresentation(diagram.num_arcs, tuple(relators)), phi


def apply_phi(word, phi):
    """
    Exponent-sum image of a free word in Z^m, as an exponent tuple.

    >>> phi = AbelianizationMap((0, 1), 2)
    >>> apply_phi(((0, 1), (1, 1), (0, -1)), phi)
    (0, 1)
    """
    exps = [0] * phi.num_components
    for g, e in word:
        exps[phi.component_of[g]] += e
    return tuple(exps)


def word_to_str(word):
    """Debug rendering, e.g. "x3 x1 x2^-1 x1^-1"; identity renders as "1"."""
    if not word:
        return "1"
    parts = []
    for g, e in word:
        parts.append("x%d" % (g + 1) if e == 1 else "x%d^-1" % (g + 1))
    return " ".join(parts)


def presentation_to_str(pres):
    gens = " ".join("x%d" % (i + 1) for i in range(pres.num_generators))
    rels = "; ".join(word_to_str(r) for r in pres.relators)
    return "<%s | %s>" % (gens, rels)
