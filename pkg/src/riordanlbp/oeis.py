"""Hermetic OEIS comparison against vendored fixture files.

Fixtures are plain text, one `<index> <integer>` pair per line with
consecutive indices; nothing is ever fetched from the network.  Each
supported id has a generator that recomputes the sequence from library
routines, so a check compares two independent sources: frozen data on one
side, live arithmetic on the other.

Triangles are compared in row-major flattened form, the convention the
fixture files use.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .combinat import binomial, catalan, schroeder
from .report import Check
from .series import TruncatedSeries, catalan_series

DEFAULT_FIXTURES_DIR = Path(__file__).parent / "fixtures"


@dataclass(frozen=True)
class OeisFixture:
    sequence_id: str
    offset: int
    terms: tuple

    def __len__(self) -> int:
        return len(self.terms)


def load_fixture(sequence_id: str, fixtures_dir: Path | str | None = None) -> OeisFixture:
    directory = Path(fixtures_dir) if fixtures_dir is not None else DEFAULT_FIXTURES_DIR
    path = directory / f"{sequence_id}.txt"
    if not path.is_file():
        raise FileNotFoundError(f"no fixture file for {sequence_id} in {directory}")
    indices, terms = [], []
    for line_no, line in enumerate(path.read_text(encoding="utf-8").splitlines(), 1):
        line = line.strip()
        if not line:
            continue
        parts = line.split(" ")
        if len(parts) != 2:
            raise ValueError(f"{path}:{line_no}: expected '<index> <integer>'")
        indices.append(int(parts[0]))
        terms.append(int(parts[1]))
    if not terms:
        raise ValueError(f"{path}: empty fixture")
    for prev, nxt in zip(indices, indices[1:]):
        if nxt != prev + 1:
            raise ValueError(f"{path}: indices are not consecutive at {nxt}")
    return OeisFixture(sequence_id, indices[0], tuple(terms))


def _catalan_terms(count: int) -> list:
    series = catalan_series(count - 1)
    return [int(v) for v in series.coeffs]


def _schroeder_terms(count: int) -> list:
    from .cfrac import tfraction_closed_form

    series = tfraction_closed_form(1, 1, count - 1)
    return [int(v) for v in series.coeffs]


def _peak_triangle_terms(count: int) -> list:
    """Flattened rows of [c^k] mu~_n at b=1; row n lists k = 0..n."""
    from .cfrac import shifted_moment_sum
    from .scalars import PARAM_C

    out = []
    n = 0
    while len(out) < count:
        row = shifted_moment_sum(1, PARAM_C, n)
        coeffs = row.num.c_coefficients()
        out.extend(int(v) for v in coeffs + [0] * (n + 1 - len(coeffs)))
        n += 1
    return out[:count]


def _reversion_terms(count: int) -> list:
    series = TruncatedSeries.ratio([0, 1, -2], [1, 1], count - 1).reversion()
    return [int(v) for v in series.coeffs]


def _schroeder_binomial_sum_terms(count: int) -> list:
    return [
        sum(binomial(n + k, 2 * k) * schroeder(k) for k in range(n + 1))
        for n in range(count)
    ]


GENERATORS = {
    "A000108": ("catalan number series", _catalan_terms),
    "A006318": ("shifted moments at b=c=1", _schroeder_terms),
    "A060693": ("peak-count triangle, flattened rows", _peak_triangle_terms),
    "A103210": ("reversion of t(1-2t)/(1+t)", _reversion_terms),
    "A155867": ("sum of binom(n+k,2k) weighted Schroeder numbers", _schroeder_binomial_sum_terms),
}


def known_ids() -> tuple:
    return tuple(sorted(GENERATORS))


def check_sequence(sequence_id: str, fixtures_dir: Path | str | None = None) -> Check:
    """Regenerate the sequence and compare it with the fixture's terms."""
    if sequence_id not in GENERATORS:
        raise KeyError(f"no generator registered for {sequence_id}")
    fixture = load_fixture(sequence_id, fixtures_dir)
    label, generator = GENERATORS[sequence_id]
    generated = generator(len(fixture))
    overlap = min(len(generated), len(fixture))
    for i in range(overlap):
        if generated[i] != fixture.terms[i]:
            return Check(
                f"{sequence_id} ({label})", False,
                f"index {fixture.offset + i}: generated {generated[i]} != fixture {fixture.terms[i]}",
            )
    return Check(f"{sequence_id} ({label})", True, f"{overlap} terms")
