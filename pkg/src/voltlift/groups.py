"""Finite groups as explicit multiplication tables.

Elements are referred to by index everywhere inside the library; names are
only used for I/O. The multiplication convention is ``mul[g][x] = g * x``
(left factor picks the row), and voltages act on the right throughout.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

MAX_ORDER = 4096

# Above this order the associativity check switches from exhaustive O(n^3)
# to random sampling of >= 10*n^2 triples.
EXHAUSTIVE_ASSOCIATIVITY_LIMIT = 256


class GroupError(ValueError):
    """Raised for malformed group tables or group-spec strings."""


@dataclass(frozen=True)
class GroupTable:
    """A finite group given by its full multiplication table.

    ``classes`` is the conjugacy-class partition, each class sorted, classes
    ordered by minimum element index with the identity's class first.
    ``family`` records the builtin spec string (e.g. ``"dihedral:3"``) when
    the table came from :func:`build_builtin_group`, else ``None``.
    """

    order: int
    element_names: tuple
    mul: np.ndarray
    identity: int
    inverse: tuple
    classes: tuple
    family: Optional[str] = None

    def __post_init__(self):
        self.mul.setflags(write=False)

    def mul_idx(self, a: int, b: int) -> int:
        return int(self.mul[a, b])

    def inv_idx(self, a: int) -> int:
        return self.inverse[a]

    def index_of(self, name: str) -> int:
        try:
            return self.element_names.index(name)
        except ValueError:
            raise GroupError(f"unknown element name {name!r}") from None

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.mul, self.mul.T))

    def num_classes(self) -> int:
        return len(self.classes)

    def __repr__(self):
        tag = self.family or "custom"
        return f"GroupTable(order={self.order}, {tag})"


def _check_latin_square(mul: np.ndarray) -> None:
    n = mul.shape[0]
    target = np.arange(n)
    if not np.array_equal(np.sort(mul, axis=1), np.tile(target, (n, 1))):
        raise GroupError("multiplication table is not a Latin square (bad row)")
    if not np.array_equal(np.sort(mul, axis=0), np.tile(target[:, None], (1, n))):
        raise GroupError("multiplication table is not a Latin square (bad column)")


def _check_associativity(mul: np.ndarray, rng: Optional[np.random.Generator] = None) -> None:
    n = mul.shape[0]
    if n <= EXHAUSTIVE_ASSOCIATIVITY_LIMIT:
        for a in range(n):
            # (a*b)*c versus a*(b*c), vectorized over (b, c)
            left = mul[mul[a], :]
            right = mul[a][mul]
            if not np.array_equal(left, right):
                b, c = np.argwhere(left != right)[0]
                raise GroupError(
                    f"associativity fails at ({a}, {b}, {c}): "
                    f"({a}*{b})*{c} = {left[b, c]} != {a}*({b}*{c}) = {right[b, c]}"
                )
    else:
        rng = rng or np.random.default_rng(0)
        m = 10 * n * n
        a = rng.integers(0, n, size=m)
        b = rng.integers(0, n, size=m)
        c = rng.integers(0, n, size=m)
        left = mul[mul[a, b], c]
        right = mul[a, mul[b, c]]
        bad = np.nonzero(left != right)[0]
        if bad.size:
            i = bad[0]
            raise GroupError(
                f"associativity fails at sampled triple ({a[i]}, {b[i]}, {c[i]})"
            )


def _find_identity(mul: np.ndarray) -> int:
    n = mul.shape[0]
    target = np.arange(n)
    for e in range(n):
        if np.array_equal(mul[e], target) and np.array_equal(mul[:, e], target):
            return e
    raise GroupError("table has no identity element")


def _find_inverses(mul: np.ndarray, identity: int) -> tuple:
    n = mul.shape[0]
    inv = []
    for g in range(n):
        h = int(np.nonzero(mul[g] == identity)[0][0])
        if mul[h, g] != identity:
            raise GroupError(f"element {g} has no two-sided inverse")
        inv.append(h)
    return tuple(inv)


def _conjugacy_partition(mul: np.ndarray, inverse: tuple, identity: int) -> tuple:
    n = mul.shape[0]
    inv = np.asarray(inverse)
    seen = np.zeros(n, dtype=bool)
    hs = np.arange(n)
    classes = []
    for g in range(n):
        if seen[g]:
            continue
        # orbit of g under h -> h g h^{-1}; one conjugation step suffices
        # because conjugation by the whole group is already transitive on
        # the class
        orbit = {g}
        frontier = [g]
        while frontier:
            x = frontier.pop()
            conj = mul[mul[hs, x], inv]
            for y in np.unique(conj):
                y = int(y)
                if y not in orbit:
                    orbit.add(y)
                    frontier.append(y)
        for y in orbit:
            seen[y] = True
        classes.append(tuple(sorted(orbit)))
    classes.sort(key=lambda c: c[0])
    classes.sort(key=lambda c: identity not in c)
    return tuple(classes)


def make_group_table(
    element_names: Sequence[str],
    mul: Sequence[Sequence[int]],
    family: Optional[str] = None,
) -> GroupTable:
    """Build and fully validate a GroupTable from names and a raw table."""
    names = tuple(element_names)
    n = len(names)
    if n == 0:
        raise GroupError("empty element list")
    if n > MAX_ORDER:
        raise GroupError(f"group order {n} exceeds supported maximum {MAX_ORDER}")
    if len(set(names)) != n:
        raise GroupError("duplicate element names")
    table = np.asarray(mul, dtype=np.int64)
    if table.shape != (n, n):
        raise GroupError(f"multiplication table must be {n}x{n}, got {table.shape}")
    if table.min() < 0 or table.max() >= n:
        raise GroupError("table entry out of range")
    _check_latin_square(table)
    identity = _find_identity(table)
    inverse = _find_inverses(table, identity)
    _check_associativity(table)
    classes = _conjugacy_partition(table, inverse, identity)
    return GroupTable(
        order=n,
        element_names=names,
        mul=table,
        identity=identity,
        inverse=inverse,
        classes=classes,
        family=family,
    )


def conjugacy_classes(g: GroupTable) -> tuple:
    """Conjugacy classes, identity's class first, then by minimum index."""
    return g.classes


# ---------------------------------------------------------------------------
# Builtin families


def _cyclic(n: int) -> GroupTable:
    if n < 1:
        raise GroupError("cyclic group order must be >= 1")
    names = [f"g^{j}" for j in range(n)]
    mul = (np.arange(n)[:, None] + np.arange(n)[None, :]) % n
    return make_group_table(names, mul, family=f"cyclic:{n}")


def _dihedral(n: int) -> GroupTable:
    # order 2n; indices 0..n-1 are r^j, indices n..2n-1 are r^j*s,
    # with relations r^n = s^2 = (r s)^2 = identity
    if n < 2:
        raise GroupError("dihedral parameter must be >= 2")
    names = [f"r^{j}" for j in range(n)] + [f"r^{j}*s" for j in range(n)]
    mul = np.zeros((2 * n, 2 * n), dtype=np.int64)
    for a in range(n):
        for b in range(n):
            mul[a, b] = (a + b) % n                  # r^a r^b
            mul[a, n + b] = n + (a + b) % n          # r^a (r^b s)
            mul[n + a, b] = n + (a - b) % n          # (r^a s) r^b = r^(a-b) s
            mul[n + a, n + b] = (a - b) % n          # (r^a s)(r^b s)
    return make_group_table(names, mul, family=f"dihedral:{n}")


def _direct_product(factors: list) -> GroupTable:
    sizes = [f.order for f in factors]
    n = int(np.prod(sizes))
    if n > MAX_ORDER:
        raise GroupError(f"product order {n} exceeds supported maximum {MAX_ORDER}")
    # lexicographic by factor indices, first factor most significant
    tuples = [()]
    for size in sizes:
        tuples = [t + (i,) for t in tuples for i in range(size)]
    index = {t: i for i, t in enumerate(tuples)}
    names = ["(" + ",".join(f.element_names[i] for f, i in zip(factors, t)) + ")" for t in tuples]
    mul = np.zeros((n, n), dtype=np.int64)
    for i, ti in enumerate(tuples):
        for j, tj in enumerate(tuples):
            mul[i, j] = index[tuple(int(f.mul[a, b]) for f, a, b in zip(factors, ti, tj))]
    spec = "product:" + ",".join(f.family for f in factors)
    return make_group_table(names, mul, family=spec)


def build_builtin_group(spec: str) -> GroupTable:
    """Instantiate a builtin group from a spec string.

    Supported: ``cyclic:n`` (n >= 1), ``dihedral:n`` (n >= 2, order 2n),
    ``product:<spec>,<spec>,...`` with cyclic/dihedral factors.
    """
    spec = spec.strip()
    if spec.startswith("product:"):
        parts = spec[len("product:"):].split(",")
        if len(parts) < 2:
            raise GroupError(f"product spec needs at least two factors: {spec!r}")
        factors = []
        for part in parts:
            if part.startswith("product:"):
                raise GroupError("nested product specs are not supported")
            factors.append(build_builtin_group(part))
        return _direct_product(factors)
    try:
        kind, _, arg = spec.partition(":")
        n = int(arg)
    except ValueError:
        raise GroupError(f"malformed group spec {spec!r}") from None
    if kind == "cyclic":
        if n * 1 > MAX_ORDER:
            raise GroupError(f"order {n} exceeds supported maximum {MAX_ORDER}")
        return _cyclic(n)
    if kind == "dihedral":
        if 2 * n > MAX_ORDER:
            raise GroupError(f"order {2 * n} exceeds supported maximum {MAX_ORDER}")
        return _dihedral(n)
    raise GroupError(f"unknown group family {kind!r} in spec {spec!r}")


def parse_group_table(doc) -> GroupTable:
    """Parse a group-table document (JSON text or parsed dict).

    Format: ``{"elements": ["e", "a", ...], "mul": [[...], ...]}`` where
    ``mul[i][j]`` is the index of element_i * element_j. Identity, inverses,
    and conjugacy classes are inferred; all structural invariants are
    verified.
    """
    if isinstance(doc, (str, bytes)):
        doc = json.loads(doc)
    if not isinstance(doc, dict) or "elements" not in doc or "mul" not in doc:
        raise GroupError('group-table document must have "elements" and "mul" keys')
    return make_group_table(doc["elements"], doc["mul"])


def find_isomorphism(g1: GroupTable, g2: GroupTable):
    """Brute-force search for a mul-preserving bijection g1 -> g2.

    Returns the bijection as a tuple (image of each g1 index) or None.
    Exponential; intended only as a test helper for tiny groups.
    """
    import itertools

    if g1.order != g2.order:
        return None
    n = g1.order
    for perm in itertools.permutations(range(n)):
        if perm[g1.identity] != g2.identity:
            continue
        p = np.asarray(perm)
        if np.array_equal(p[g1.mul], g2.mul[p[:, None], p[None, :]]):
            return tuple(perm)
    return None
