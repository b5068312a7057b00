"""File-backed factorization cache.

One record per line: ``n p1^a1 p2^a2 ...`` in decimal, primes ascending,
and the bare line ``1`` for the empty factorization. The file is read
once at construction and appended to when a lookup misses.
"""

from __future__ import annotations

from pathlib import Path

from .errors import ParseError


def _parse_power(token: str) -> tuple[int, int]:
    base, sep, exp = token.partition("^")
    try:
        p = int(base)
        e = int(exp) if sep else 1
    except ValueError:
        raise ParseError(f"bad prime power {token!r}") from None
    if p < 2 or e < 1:
        raise ParseError(f"bad prime power {token!r}")
    return p, e


def _format_entries(entries: tuple[tuple[int, int], ...]) -> str:
    return " ".join(f"{p}^{e}" for p, e in entries)


class FactorCache:
    """In-memory table mirrored to an append-only text file."""

    def __init__(self, path: str | Path):
        self.path = Path(path)
        self._table: dict[int, tuple[tuple[int, int], ...]] = {}
        if self.path.exists():
            for lineno, line in enumerate(self.path.read_text().splitlines(), 1):
                line = line.strip()
                if not line:
                    continue
                self._add_line(line, lineno)

    def _add_line(self, line: str, lineno: int) -> None:
        tokens = line.split()
        try:
            n = int(tokens[0])
        except ValueError:
            raise ParseError(f"{self.path}:{lineno}: bad integer {tokens[0]!r}") from None
        entries = tuple(_parse_power(t) for t in tokens[1:])
        value = 1
        prev = 1
        for p, e in entries:
            if p <= prev:
                raise ParseError(f"{self.path}:{lineno}: primes not ascending")
            prev = p
            value *= p**e
        if value != n:
            raise ParseError(f"{self.path}:{lineno}: product {value} != {n}")
        self._table[n] = entries

    def get(self, n: int) -> tuple[tuple[int, int], ...] | None:
        return self._table.get(n)

    def record(self, n: int, entries: tuple[tuple[int, int], ...]) -> None:
        """Remember a fresh factorization and append it to the file."""
        if n in self._table:
            return
        self._table[n] = entries
        line = f"{n} {_format_entries(entries)}".rstrip()
        with open(self.path, "a") as fh:
            fh.write(line + "\n")

    def __len__(self) -> int:
        return len(self._table)

    def __contains__(self, n: int) -> bool:
        return n in self._table
