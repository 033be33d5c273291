import pytest

from ribboncheck.laurent import LaurentPoly
from ribboncheck.linkcodec import BraidWord, parse_link_spec
from ribboncheck.tables import knot_table, link_table


@pytest.fixture(scope="session")
def bundled_knots():
    return [(name, parse_link_spec(spec)) for name, spec in knot_table()]


@pytest.fixture(scope="session")
def bundled_links():
    return [(name, parse_link_spec(spec)) for name, spec in link_table()]


def random_poly(rng, nvars, max_terms=5, max_exp=3, max_coeff=6, laurent=True):
    terms = {}
    low = -max_exp if laurent else 0
    for _ in range(rng.randint(0, max_terms)):
        exps = tuple(rng.randint(low, max_exp) for _ in range(nvars))
        coeff = rng.randint(-max_coeff, max_coeff)
        if coeff:
            terms[exps] = terms.get(exps, 0) + coeff
    return LaurentPoly(nvars, {e: c for e, c in terms.items() if c})


def random_braid_knot(rng, max_strands=3, max_letters=8):
    """A random braid word whose closure is a knot."""
    while True:
        n = rng.randint(2, max_strands)
        length = rng.randint(1, max_letters)
        letters = tuple(rng.choice([1, -1]) * rng.randint(1, n - 1)
                        for _ in range(length))
        word = BraidWord(n, letters)
        if len(word.cycles()) == 1:
            return word


def random_free_word(rng, num_generators, max_length=40):
    letters = []
    for _ in range(rng.randint(0, max_length)):
        letters.append((rng.randrange(num_generators), rng.choice([1, -1])))
    return tuple(letters)
