"""
Bundled reference diagrams.

knots.csv: prime knots with verified encodings, complete for the
rational (2-bridge) knots through 8 crossings and including torus,
twist, and pretzel representatives through 9 crossings.  Rational
entries are generated 4-plat PD codes; torus knots are braid words.
links.csv: small 2-component links for the multivariable checks.

Both files use the batch CSV format (header "name,spec"), so they feed
the command-line batch mode directly.
"""

import csv
from importlib import resources


def _load(filename):
    data = resources.files("ribboncheck").joinpath("data", filename)
    with data.open(newline="") as fh:
        reader = csv.reader(fh)
        next(reader)  # header
        return [(row[0], row[1]) for row in reader if row]


def knot_table():
    """List of (name, spec) pairs for the bundled knots."""
    return _load("knots.csv")


def link_table():
    """List of (name, spec) pairs for the bundled 2-component links."""
    return _load("links.csv")


def table_path(filename):
    """Filesystem path of a bundled CSV (for the CLI batch command)."""
    return str(resources.files("ribboncheck").joinpath("data", filename))
