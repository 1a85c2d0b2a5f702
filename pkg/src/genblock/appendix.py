"""Bundled certificates: sporadic blocking sets of lines w.r.t. planes in PG(4, q).

Every file is a certificate in the standard text format.  ``CORPUS`` lists
the parameters each one is claimed to satisfy; the tests check them.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

from .systems import parse_certificate


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    q: int
    s: int
    n: int
    max_mult: int


CORPUS = [
    CorpusEntry("b2_n75_m3", 2, 3, 75, 3),
    CorpusEntry("b2_n75_m2", 2, 3, 75, 2),
    CorpusEntry("b2_n102_m1", 2, 4, 102, 1),
    CorpusEntry("b2_n98_m2", 2, 4, 98, 2),
    CorpusEntry("b2_n123_m1", 2, 5, 123, 1),
    CorpusEntry("b2_n121_m3", 2, 5, 121, 3),
    CorpusEntry("b2_n120_m4", 2, 5, 120, 4),
    CorpusEntry("b2_n146_m1", 2, 6, 146, 1),
    CorpusEntry("b2_n144_m2", 2, 6, 144, 2),
    CorpusEntry("b2_n142_m3", 2, 6, 142, 3),
    CorpusEntry("b2_n141_m5", 2, 6, 141, 5),
    CorpusEntry("b3_n206_m1", 3, 2, 206, 1),
    CorpusEntry("b3_n502_m3", 3, 5, 502, 3),
    CorpusEntry("b3_n550_m1", 3, 5, 550, 1),
    CorpusEntry("b3_n600_m6", 3, 6, 600, 6),
    CorpusEntry("b3_n648_m1", 3, 6, 648, 1),
    CorpusEntry("b3_n690_m4", 3, 7, 690, 4),
    CorpusEntry("b3_n745_m1", 3, 7, 745, 1),
    CorpusEntry("b3_n784_m4", 3, 8, 784, 4),
    CorpusEntry("b3_n844_m1", 3, 8, 844, 1),
    CorpusEntry("b3_n935_m1", 3, 9, 935, 1),
    CorpusEntry("b3_n1020_m1", 3, 10, 1020, 1),
    CorpusEntry("b3_n1050_m9", 3, 11, 1050, 9),
    CorpusEntry("b3_n1105_m1", 3, 11, 1105, 1),
]

_BY_NAME = {e.name: e for e in CORPUS}


def entry(name):
    return _BY_NAME[name]


def text(name):
    return resources.files("genblock.data.appendix").joinpath(name + ".txt").read_text("utf-8")


def load(name):
    """Parse the bundled certificate ``name`` into a :class:`SpaceMultiset`."""
    return parse_certificate(text(name))


def best_known(q, s, max_mult=None):
    """Smallest bundled certificate for ``(q, s)`` respecting ``max_mult``."""
    cands = [
        e for e in CORPUS
        if e.q == q and e.s == s and (max_mult is None or e.max_mult <= max_mult)
    ]
    return min(cands, key=lambda e: e.n, default=None)
