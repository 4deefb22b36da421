"""Factorizations of zero-sum sequences and their sets of lengths.

The length-set computation is a memoized recursion over zero-sum divisors:
L(B) is the union of 1 + L(B/A) over all atoms A dividing B, with L(empty)
= {0}.  Every factorization contributes its length through each of its
parts, so the unordered recursion is complete; sets are carried as integer
bitmasks and the memo is shared through the AtomSet instance, which lets
large enumerations reuse each other's subproblems.
"""

from __future__ import annotations

from collections import Counter

from .budget import Budget, CapExceededError, as_budget
from .atoms import AtomSet, atom_set_for
from .sequences import Sequence


class LengthSet:
    """A finite set of non-negative factorization lengths."""

    __slots__ = ("values",)

    def __init__(self, values):
        vs = sorted(set(values))
        if any(v < 0 for v in vs):
            raise ValueError("lengths must be non-negative")
        object.__setattr__(self, "values", tuple(vs))

    def __setattr__(self, name, value):
        raise AttributeError("LengthSet is immutable")

    @classmethod
    def from_mask(cls, mask: int) -> "LengthSet":
        vals = []
        i = 0
        while mask:
            if mask & 1:
                vals.append(i)
            mask >>= 1
            i += 1
        return cls(vals)

    @property
    def mask(self) -> int:
        m = 0
        for v in self.values:
            m |= 1 << v
        return m

    def __contains__(self, v) -> bool:
        return v in set(self.values)

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return len(self.values)

    def __bool__(self):
        return bool(self.values)

    @property
    def min(self) -> int:
        if not self.values:
            raise ValueError("empty length set has no minimum")
        return self.values[0]

    @property
    def max(self) -> int:
        if not self.values:
            raise ValueError("empty length set has no maximum")
        return self.values[-1]

    def delta(self) -> tuple[int, ...]:
        """Successive gaps between the sorted values."""
        return tuple(
            b - a for a, b in zip(self.values, self.values[1:])
        )

    def shift(self, y: int) -> "LengthSet":
        return LengthSet(v + y for v in self.values)

    def __add__(self, other):
        if not isinstance(other, LengthSet):
            return NotImplemented
        if not self.values or not other.values:
            raise ValueError("sumset of an empty length set")
        return LengthSet(a + b for a in self.values for b in other.values)

    def __eq__(self, other):
        return isinstance(other, LengthSet) and self.values == other.values

    def __hash__(self):
        return hash(("LengthSet", self.values))

    def __lt__(self, other):
        if not isinstance(other, LengthSet):
            return NotImplemented
        return self.values < other.values

    def __repr__(self):
        return "{" + ",".join(str(v) for v in self.values) + "}"


def parse_length_set(text: str) -> LengthSet:
    """Parse a comma-separated integer list, braces optional."""
    body = text.strip()
    if body.startswith("{") and body.endswith("}"):
        body = body[1:-1]
    if not body.strip():
        raise ValueError("empty length set literal")
    try:
        return LengthSet(int(p.strip()) for p in body.split(","))
    except ValueError as e:
        raise ValueError(f"malformed length set literal {text!r}") from e


def delta_of_set(values) -> tuple[int, ...]:
    """Set of distances of a set of integers: its successive gaps."""
    vs = sorted(set(values))
    return tuple(b - a for a, b in zip(vs, vs[1:]))


class Factorization:
    """A multiset of atoms with a given product, in canonical form."""

    __slots__ = ("parts", "product")

    def __init__(self, parts, product: Sequence | None = None):
        ordered = tuple(sorted(parts, key=Sequence.sort_key, reverse=True))
        object.__setattr__(self, "parts", ordered)
        if product is None:
            if not ordered:
                raise ValueError("an empty factorization needs an explicit product")
            product = ordered[0]
            for p in ordered[1:]:
                product = product * p
        object.__setattr__(self, "product", product)

    def __setattr__(self, name, value):
        raise AttributeError("Factorization is immutable")

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __eq__(self, other):
        return isinstance(other, Factorization) and self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return " * ".join(f"[{p}]" for p in self.parts) if self.parts else "[empty]"


def _resolve_atoms(b: Sequence, atoms: AtomSet | None) -> AtomSet:
    if atoms is None:
        return atom_set_for(b.group, b.support())
    if atoms.group != b.group:
        raise ValueError("atom set belongs to a different group")
    if not atoms.covers(b):
        raise ValueError("atom set does not cover the support of the sequence")
    return atoms


def _require_zero_sum(b: Sequence):
    if not b.is_zero_sum():
        raise ValueError(f"sequence is not zero-sum: {b}")


def length_mask(aset: AtomSet, counts: tuple[int, ...], budget: Budget) -> int:
    """Bitmask of L(B) for the sequence with the given multiplicity vector.

    Iterative post-order over the divisor lattice; results are memoized on
    the AtomSet so independent callers share subproblems.  At each node
    only atoms through a pivot support element are tried: every
    factorization must cover the pivot, so the union over those atoms is
    already all of L(B).
    """
    memo = aset._length_memo
    got = memo.get(counts)
    if got is not None:
        return got
    sparse = aset.atoms_sparse
    by_elem = aset.atoms_by_element
    stack = [counts]
    while stack:
        cur = stack[-1]
        if cur in memo:
            stack.pop()
            continue
        pivot = -1
        pivot_load = -1
        for i, c in enumerate(cur):
            if c:
                load = len(by_elem.get(i, ()))
                if pivot < 0 or load < pivot_load:
                    pivot, pivot_load = i, load
        if pivot < 0:
            memo[cur] = 1  # L(empty) = {0}
            stack.pop()
            continue
        mask = 0
        missing = []
        for k in by_elem.get(pivot, ()):
            sp = sparse[k]
            ok = True
            for i, m in sp:
                if cur[i] < m:
                    ok = False
                    break
            if not ok:
                continue
            child = list(cur)
            for i, m in sp:
                child[i] -= m
            child = tuple(child)
            cm = memo.get(child)
            if cm is None:
                missing.append(child)
            else:
                mask |= cm << 1
        if missing:
            stack.extend(missing)
        else:
            memo[cur] = mask
            budget.spend()
            stack.pop()
    return memo[counts]


def length_set(b: Sequence, atoms: AtomSet | None = None, budget=None) -> LengthSet:
    """The set of factorization lengths L(B), without materializing Z(B)."""
    _require_zero_sum(b)
    aset = _resolve_atoms(b, atoms)
    mask = length_mask(aset, b.counts(), as_budget(budget))
    return LengthSet.from_mask(mask)


def factorization_index_lists(
    aset: AtomSet,
    counts,
    cap: int | None = None,
    budget: Budget | None = None,
) -> list[tuple[int, ...]]:
    """All factorizations of the multiplicity vector ``counts`` as sorted
    non-increasing tuples of atom indices, each multiset exactly once."""
    bud = budget if budget is not None else Budget(None)
    sparse = aset.atoms_sparse
    results: list[tuple[int, ...]] = []
    work = list(counts)

    def rec(max_idx: int, chosen: tuple[int, ...]):
        bud.spend()
        if not any(work):
            results.append(chosen)
            if cap is not None and len(results) > cap:
                raise CapExceededError(
                    f"more than {cap} factorizations; raise the cap to materialize"
                )
            return
        for idx in range(max_idx, -1, -1):
            sp = sparse[idx]
            ok = True
            for i, m in sp:
                if work[i] < m:
                    ok = False
                    break
            if not ok:
                continue
            for i, m in sp:
                work[i] -= m
            rec(idx, chosen + (idx,))
            for i, m in sp:
                work[i] += m

    rec(len(sparse) - 1, ())
    results.sort()
    return results


def factorizations(
    b: Sequence,
    atoms: AtomSet | None = None,
    cap: int | None = None,
    budget=None,
) -> list[Factorization]:
    """All factorizations of B into atoms, each exactly once.

    Canonical enumeration: parts are chosen with non-increasing atom index,
    so every multiset of parts appears once.  ``cap`` bounds the number of
    factorizations materialized (CapExceededError beyond it).
    """
    _require_zero_sum(b)
    aset = _resolve_atoms(b, atoms)
    results = factorization_index_lists(aset, b.counts(), cap, as_budget(budget))
    return [
        Factorization(tuple(aset.atoms[i] for i in chosen), b)
        for chosen in results
    ]


def distance(z: Factorization, zp: Factorization) -> int:
    """Distance between two factorizations of the same sequence: cancel the
    common part multiset, then take the larger remaining part count."""
    if z.product != zp.product:
        raise ValueError("factorizations of different sequences")
    c1 = Counter(z.parts)
    c2 = Counter(zp.parts)
    common = c1 & c2
    rest1 = sum((c1 - common).values())
    rest2 = sum((c2 - common).values())
    return max(rest1, rest2)


def catenary_degree(
    b: Sequence,
    atoms: AtomSet | None = None,
    cap: int | None = None,
    budget=None,
) -> int:
    """Smallest N such that any two factorizations of B are linked by a
    chain with successive distances at most N.

    Materializes Z(B) (subject to ``cap``), then finds the minimax edge
    threshold on the complete distance graph by binary searching the sorted
    distinct weights with a union-find connectivity test.
    """
    zs = factorizations(b, atoms, cap=cap, budget=budget)
    n = len(zs)
    if n <= 1:
        return 0
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            edges.append((distance(zs[i], zs[j]), i, j))
    weights = sorted({w for w, _, _ in edges})

    def connects(threshold: int) -> bool:
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        comps = n
        for w, i, j in edges:
            if w <= threshold:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[ri] = rj
                    comps -= 1
        return comps == 1

    lo, hi = 0, len(weights) - 1
    while lo < hi:
        mid = (lo + hi) // 2
        if connects(weights[mid]):
            hi = mid
        else:
            lo = mid + 1
    return weights[lo]
