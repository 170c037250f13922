"""Formal words over group generators and word-problem oracles.

A word is a tuple of nonzero ints: ``+i`` is generator ``i`` and ``-i`` its
formal inverse.  Generators are numbered from 1.  The empty tuple is the
identity.
"""

from __future__ import annotations

import re
import threading
from dataclasses import dataclass
from typing import Iterable, Sequence

Word = tuple[int, ...]

IDENTITY: Word = ()


class UnknownGeneratorError(ValueError):
    """A word mentions a generator the oracle does not know."""


def word(*symbols: int) -> Word:
    if any(s == 0 for s in symbols):
        raise ValueError("generator symbols must be nonzero")
    return tuple(symbols)


def concat(*words: Word) -> Word:
    out: list[int] = []
    for w in words:
        out.extend(w)
    return tuple(out)


def invert(w: Word) -> Word:
    return tuple(-s for s in reversed(w))


def free_reduce(w: Word) -> Word:
    stack: list[int] = []
    for s in w:
        if stack and stack[-1] == -s:
            stack.pop()
        else:
            stack.append(s)
    return tuple(stack)


@dataclass
class OracleStats:
    query_count: int = 0
    max_query_length: int = 0
    total_query_length: int = 0

    def record(self, length: int) -> None:
        self.query_count += 1
        self.total_query_length += length
        if length > self.max_query_length:
            self.max_query_length = length

    def as_dict(self) -> dict[str, int]:
        return {
            "query_count": self.query_count,
            "max_query_length": self.max_query_length,
            "total_query_length": self.total_query_length,
        }


class GroupOracle:
    """Answers the word problem for one group and counts every query.

    Subclasses implement :meth:`_is_identity` on a word already checked
    against the generator range.
    """

    kind = "abstract"

    def __init__(self, generator_count: int, generator_names: Sequence[str] | None = None):
        if generator_count < 0:
            raise ValueError("generator count must be non-negative")
        self.generator_count = generator_count
        if generator_names is None:
            generator_names = [str(i) for i in range(1, generator_count + 1)]
        if len(generator_names) != generator_count:
            raise ValueError("one name per generator required")
        self.generator_names = tuple(generator_names)
        self.stats = OracleStats()
        self._lock = threading.Lock()

    def check_word(self, w: Word) -> None:
        for s in w:
            if s == 0 or abs(s) > self.generator_count:
                raise UnknownGeneratorError(
                    f"generator {abs(s)} not in 1..{self.generator_count}"
                )

    def is_identity(self, w: Word) -> bool:
        self.check_word(w)
        with self._lock:
            self.stats.record(len(w))
        return self._is_identity(w)

    def _is_identity(self, w: Word) -> bool:
        raise NotImplementedError

    def equals(self, w1: Word, w2: Word) -> bool:
        return self.is_identity(concat(w1, invert(w2)))

    def has_order_at_most_2(self, w: Word) -> bool:
        return self.is_identity(concat(w, w))

    def commutes(self, w1: Word, w2: Word) -> bool:
        return self.is_identity(concat(w1, w2, invert(w1), invert(w2)))

    def reset_stats(self) -> None:
        with self._lock:
            self.stats = OracleStats()

    def header(self) -> str:
        """The graph-file header line describing this backend."""
        raise NotImplementedError

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.header()!r}>"


# module-level aliases mirroring the oracle methods


def is_identity(o: GroupOracle, w: Word) -> bool:
    return o.is_identity(w)


def equals(o: GroupOracle, w1: Word, w2: Word) -> bool:
    return o.equals(w1, w2)


def has_order_at_most_2(o: GroupOracle, w: Word) -> bool:
    return o.has_order_at_most_2(w)


def commutes(o: GroupOracle, w1: Word, w2: Word) -> bool:
    return o.commutes(w1, w2)


def _exponent_sums(w: Word, k: int) -> list[int]:
    sums = [0] * k
    for s in w:
        sums[abs(s) - 1] += 1 if s > 0 else -1
    return sums


class ElementaryAbelianOracle(GroupOracle):
    """Z_2^k with generator i the i-th basis vector."""

    kind = "z2"

    def __init__(self, k: int):
        super().__init__(k)
        self.k = k

    def _is_identity(self, w: Word) -> bool:
        return all(c % 2 == 0 for c in _exponent_sums(w, self.k))

    def header(self) -> str:
        return f"group z2 {self.k}"


class FreeAbelianOracle(GroupOracle):
    """Z^k."""

    kind = "z"

    def __init__(self, k: int):
        super().__init__(k)
        self.k = k

    def _is_identity(self, w: Word) -> bool:
        return all(c == 0 for c in _exponent_sums(w, self.k))

    def header(self) -> str:
        return f"group z {self.k}"


class CyclicOracle(GroupOracle):
    """Z_n with a single generator."""

    kind = "cyclic"

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("cyclic group order must be >= 1")
        super().__init__(1)
        self.n = n

    def _is_identity(self, w: Word) -> bool:
        return sum(1 if s > 0 else -1 for s in w) % self.n == 0

    def header(self) -> str:
        return f"group cyclic {self.n}"


class FreeGroupOracle(GroupOracle):
    kind = "free"

    def __init__(self, rank: int):
        super().__init__(rank)
        self.rank = rank

    def _is_identity(self, w: Word) -> bool:
        return not free_reduce(w)

    def header(self) -> str:
        return f"group free {self.rank}"


Perm = tuple[int, ...]

_CYCLE_RE = re.compile(r"\(([^()]*)\)")
_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*$")


def parse_cycles(text: str, n: int) -> Perm:
    """Parse cycle notation on points 1..n into a 0-based image tuple.

    Cycles may separate points by commas or spaces; ``(123)`` is read digit by
    digit when n <= 9.  ``()`` is the identity.
    """
    text = text.strip()
    if not text:
        raise ValueError("empty permutation")
    rest = _CYCLE_RE.sub("", text).strip()
    if rest:
        raise ValueError(f"malformed cycle notation {text!r}")
    image = list(range(n))
    seen: set[int] = set()
    for body in _CYCLE_RE.findall(text):
        body = body.strip()
        if not body:
            continue
        if re.search(r"[,\s]", body):
            tokens = [t for t in re.split(r"[,\s]+", body) if t]
        elif n <= 9:
            tokens = list(body)
        else:
            tokens = [body]
        try:
            points = [int(t) for t in tokens]
        except ValueError:
            raise ValueError(f"non-integer point in {text!r}") from None
        for p in points:
            if not 1 <= p <= n:
                raise ValueError(f"point {p} outside 1..{n}")
            if p in seen:
                raise ValueError(f"point {p} repeated in {text!r}")
            seen.add(p)
        for i, p in enumerate(points):
            image[p - 1] = points[(i + 1) % len(points)] - 1
    return tuple(image)


def format_cycles(perm: Perm) -> str:
    seen: set[int] = set()
    parts = []
    for start in range(len(perm)):
        if start in seen or perm[start] == start:
            continue
        cycle = []
        p = start
        while p not in seen:
            seen.add(p)
            cycle.append(p + 1)
            p = perm[p]
        parts.append("(" + ",".join(map(str, cycle)) + ")")
    return "".join(parts) or "()"


class SymmetricGroupOracle(GroupOracle):
    """Permutations of 1..n generated by named permutations.

    A word is read left to right: the point is moved by the first symbol's
    permutation first.
    """

    kind = "sym"

    def __init__(self, n: int, generators: Sequence[tuple[str, Perm]]):
        names = [name for name, _ in generators]
        if len(set(names)) != len(names):
            raise ValueError("duplicate generator name")
        for name in names:
            if not _NAME_RE.match(name):
                raise ValueError(f"bad generator name {name!r}")
        super().__init__(len(generators), names)
        self.n = n
        self.perms = [tuple(p) for _, p in generators]
        for p in self.perms:
            if sorted(p) != list(range(n)):
                raise ValueError("generator is not a permutation of 1..n")
        self._inverses = []
        for p in self.perms:
            inv = [0] * n
            for i, j in enumerate(p):
                inv[j] = i
            self._inverses.append(tuple(inv))

    @classmethod
    def from_cycles(cls, n: int, generators: Iterable[tuple[str, str]]) -> "SymmetricGroupOracle":
        return cls(n, [(name, parse_cycles(text, n)) for name, text in generators])

    def evaluate(self, w: Word) -> Perm:
        self.check_word(w)
        state = list(range(self.n))
        for s in w:
            p = self.perms[s - 1] if s > 0 else self._inverses[-s - 1]
            state = [p[x] for x in state]
        return tuple(state)

    def _is_identity(self, w: Word) -> bool:
        return self.evaluate(w) == tuple(range(self.n))

    def header(self) -> str:
        gens = ";".join(
            f"{name}={format_cycles(p)}" for name, p in zip(self.generator_names, self.perms)
        )
        return f"group sym {self.n} gens {gens}"


class TableGroupOracle(GroupOracle):
    """A finite group given by its full multiplication table.

    ``table[i][j]`` is the index of the product of elements i and j.
    """

    kind = "table"

    def __init__(
        self,
        table: Sequence[Sequence[int]],
        identity: int,
        generators: Sequence[int],
        source: str | None = None,
    ):
        order = len(table)
        if order == 0:
            raise ValueError("empty multiplication table")
        for row in table:
            if sorted(row) != list(range(order)):
                raise ValueError("multiplication table row is not a permutation")
        if not 0 <= identity < order:
            raise ValueError("identity index out of range")
        for x in range(order):
            if table[identity][x] != x or table[x][identity] != x:
                raise ValueError("identity index does not act as identity")
        for g in generators:
            if not 0 <= g < order:
                raise ValueError(f"generator index {g} out of range")
        super().__init__(len(generators))
        self.table = [list(row) for row in table]
        self.identity = identity
        self.generators = list(generators)
        self.source = source
        self._inverse = {}
        for g in set(generators):
            self._inverse[g] = self.table[g].index(identity)

    @property
    def order(self) -> int:
        return len(self.table)

    def _is_identity(self, w: Word) -> bool:
        x = self.identity
        for s in w:
            g = self.generators[abs(s) - 1]
            x = self.table[x][g if s > 0 else self._inverse[g]]
        return x == self.identity

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "identity": self.identity,
            "generators": self.generators,
            "table": self.table,
        }

    def header(self) -> str:
        return f"group table {self.source or '<inline>'}"


def symmetric3() -> SymmetricGroupOracle:
    """S3 with r = (123) and s = (12), the generators used by the fixtures."""
    return SymmetricGroupOracle.from_cycles(3, [("r", "(1,2,3)"), ("s", "(1,2)")])
