"""Partition combinatorics and the weight-2 block structure behind every form.

A partition mu of n determines a {0,1,2}-weighted diagram, and the weight-2
root spaces assemble into rectangular blocks strictly above the diagonal.
The blocks split into two linked chains: the I-chain, driven by the odd
parts of mu through the sequence l_i = #{odd parts >= 2i-1}, and the
J-chain, driven by the even parts through k_i = #{even parts >= 2i}.  The
J-chain carries the central square block C exactly when mu has an even
part.  Consecutive blocks of a chain share an index range: the columns of
one are the rows of the next, which is what lets elimination travel along
the chain.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import TypeSizeMismatch


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing positive parts; indexes one nilpotent orbit."""

    parts: tuple

    def __post_init__(self):
        p = tuple(self.parts)
        if not p or any(x <= 0 for x in p) or any(p[i] < p[i + 1] for i in range(len(p) - 1)):
            raise ValueError(f"not a partition: {p}")
        object.__setattr__(self, "parts", p)

    @property
    def n(self):
        return sum(self.parts)

    @staticmethod
    def parse(text):
        return Partition(tuple(int(t) for t in text.split(",")))

    def conjugate(self):
        m = self.parts[0]
        return Partition(tuple(sum(1 for p in self.parts if p >= i) for i in range(1, m + 1)))

    def __str__(self):
        return ",".join(str(p) for p in self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)


@dataclass(frozen=True)
class LieType:
    """One of A/B/C/D; for B/C/D the rank pins n = 2l+1 or 2l."""

    letter: str
    rank: int = 0

    def __post_init__(self):
        if self.letter not in ("A", "B", "C", "D"):
            raise ValueError(f"unknown type {self.letter!r}")
        if self.letter != "A" and self.rank < 1:
            raise ValueError("types B/C/D need a positive rank")

    @property
    def ambient_dim(self):
        if self.letter == "A":
            return None
        return 2 * self.rank + 1 if self.letter == "B" else 2 * self.rank

    def check_n(self, n):
        if self.letter == "A":
            return
        if self.ambient_dim != n:
            raise TypeSizeMismatch(
                f"type {self.letter}{self.rank} lives in dimension {self.ambient_dim}, got {n}"
            )

    @staticmethod
    def for_n(letter, n):
        """The type of the given letter acting in dimension n."""
        if letter == "A":
            return LieType("A")
        if letter == "B":
            if n % 2 == 0 or n < 3:
                raise TypeSizeMismatch(f"type B needs odd n >= 3, got {n}")
            return LieType("B", (n - 1) // 2)
        if n % 2 == 1 or n < 2:
            raise TypeSizeMismatch(f"type {letter} needs even n >= 2, got {n}")
        return LieType(letter, n // 2)

    def __str__(self):
        return self.letter if self.letter == "A" else f"{self.letter}{self.rank}"


@dataclass(frozen=True)
class WeightedDiagram:
    """Node labels h(alpha_1..alpha_{n-1}) in {0,1,2} and the sorted weight list nu."""

    weights: tuple
    nu: tuple


@dataclass(frozen=True)
class Block:
    """One rectangular block; coordinates are inclusive and 1-based.

    chain is "I" or "J"; side is "A", "B" or "C"; position counts outward
    from the centre of the chain, with the central square block C at 0.
    """

    row_range: tuple
    col_range: tuple
    chain: str
    side: str
    position: int

    @property
    def height(self):
        return self.row_range[1] - self.row_range[0] + 1

    @property
    def width(self):
        return self.col_range[1] - self.col_range[0] + 1

    @property
    def shape(self):
        return (self.height, self.width)

    def positions(self):
        for i in range(self.row_range[0], self.row_range[1] + 1):
            for j in range(self.col_range[0], self.col_range[1] + 1):
                yield (i, j)


@dataclass(frozen=True)
class BlockLayout:
    """All blocks of the weight-2 space for one partition."""

    n: int
    blocks: tuple
    l_seq: tuple
    k_seq: tuple
    diagram: WeightedDiagram

    def chain(self, name):
        """Blocks of one chain, sorted top row first (A side, centre, B side)."""
        return tuple(sorted((b for b in self.blocks if b.chain == name),
                            key=lambda b: b.row_range[0]))

    def position_set(self):
        return {p for b in self.blocks for p in b.positions()}

    def dim_weight2(self):
        return sum(b.height * b.width for b in self.blocks)


def enumerate_partitions(n):
    """All partitions of n, reverse-lexicographic, (n) first."""
    if n < 1:
        raise ValueError("n must be positive")
    out = []

    def rec(remaining, maxpart, prefix):
        if remaining == 0:
            out.append(Partition(tuple(prefix)))
            return
        for p in range(min(maxpart, remaining), 0, -1):
            rec(remaining - p, p, prefix + [p])

    rec(n, n, [])
    return out


def weighted_dynkin(mu):
    """Diagram labels from the stacked ladders {p-1, p-3, ..., 1-p} of mu."""
    values = []
    for p in mu.parts:
        values.extend(range(p - 1, -p, -2))
    values.sort(reverse=True)
    weights = tuple(values[i] - values[i + 1] for i in range(len(values) - 1))
    assert all(w in (0, 1, 2) for w in weights)
    assert weights == weights[::-1], "diagram labels must be palindromic"
    return WeightedDiagram(weights=weights, nu=tuple(values))


def lk_sequences(mu):
    """(l_seq, k_seq): l_i counts odd parts >= 2i-1, k_i even parts >= 2i."""
    l_seq, k_seq = [], []
    i = 1
    while True:
        c = sum(1 for p in mu.parts if p % 2 == 1 and p >= 2 * i - 1)
        if c == 0:
            break
        l_seq.append(c)
        i += 1
    i = 1
    while True:
        c = sum(1 for p in mu.parts if p % 2 == 0 and p >= 2 * i)
        if c == 0:
            break
        k_seq.append(c)
        i += 1
    return tuple(l_seq), tuple(k_seq)


def block_layout(mu):
    """Compute the block structure for mu, with chains and positions assigned."""
    n = mu.n
    diagram = weighted_dynkin(mu)
    w = diagram.weights
    l_seq, k_seq = lk_sequences(mu)

    def a_of(i):  # smallest index > i with nonzero weight, else n
        for k in range(i + 1, n):
            if w[k - 1] != 0:
                return k
        return n

    def b_of(i):  # largest index < i with nonzero weight, else 0
        for k in range(i - 1, 0, -1):
            if w[k - 1] != 0:
                return k
        return 0

    pi1 = [i for i in range(1, n) if w[i - 1] == 1]
    pi2 = [i for i in range(1, n) if w[i - 1] == 2]

    regions = []  # (row_range, col_range, family) with family "A"/"B" alternating
    # weight-2 blocks all belong to one family, together with the odd-indexed
    # blocks of adjacent weight-1 pairs
    for i in pi2:
        regions.append(((b_of(i) + 1, i), (i + 1, a_of(i)), "A"))
    pair_blocks = []
    for idx in range(len(pi1) - 1):
        i, j = pi1[idx], pi1[idx + 1]
        if all(w[k - 1] == 0 for k in range(i + 1, j)):
            pair_blocks.append(((b_of(i) + 1, i), (j + 1, a_of(j))))
    for t, (rr, cc) in enumerate(pair_blocks):
        regions.append((rr, cc, "A" if t % 2 == 0 else "B"))

    # the family containing the f-fixed central block is the J-chain
    def is_central(rr, cc):
        return rr[0] == n + 1 - cc[1] and rr[1] == n + 1 - cc[0]

    central_family = None
    for rr, cc, fam in regions:
        if is_central(rr, cc):
            central_family = fam
    has_even = any(p % 2 == 0 for p in mu.parts)
    assert (central_family is not None) == has_even, "central block iff an even part"

    blocks = []
    for fam_name in ("A", "B"):
        members = sorted([r for r in regions if r[2] == fam_name], key=lambda r: r[0][0])
        if not members:
            continue
        chain = "J" if fam_name == central_family else "I"
        count = len(members)
        if chain == "J":
            assert count % 2 == 1, "J-chain has an odd number of blocks"
            half = count // 2
            for t, (rr, cc, _) in enumerate(members):
                if t < half:
                    blocks.append(Block(rr, cc, "J", "A", half - t))
                elif t == half:
                    blocks.append(Block(rr, cc, "J", "C", 0))
                else:
                    blocks.append(Block(rr, cc, "J", "B", t - half))
        else:
            assert count % 2 == 0, "I-chain has an even number of blocks"
            half = count // 2
            for t, (rr, cc, _) in enumerate(members):
                if t < half:
                    blocks.append(Block(rr, cc, "I", "A", half - t))
                else:
                    blocks.append(Block(rr, cc, "I", "B", t - half + 1))

    layout = BlockLayout(n=n, blocks=tuple(blocks), l_seq=l_seq, k_seq=k_seq,
                         diagram=diagram)
    _validate_layout(layout, mu)
    return layout


def _validate_layout(layout, mu):
    n = layout.n
    # region set fixed by f
    pos = layout.position_set()
    assert all((n + 1 - j, n + 1 - i) in pos for (i, j) in pos), "region not f-symmetric"
    # each row/column meets at most one block, strictly upper triangular
    rows_seen, cols_seen = set(), set()
    for b in layout.blocks:
        assert b.row_range[1] < b.col_range[0], "block not strictly above the diagonal"
        rr = set(range(b.row_range[0], b.row_range[1] + 1))
        cc = set(range(b.col_range[0], b.col_range[1] + 1))
        assert not (rr & rows_seen) and not (cc & cols_seen), "row/column reuse"
        rows_seen |= rr
        cols_seen |= cc
    # chain linkage and declared shapes
    l, k = layout.l_seq, layout.k_seq

    def dim(seq, i):
        return seq[i - 1] if 1 <= i <= len(seq) else 0

    for name, seq in (("I", l), ("J", k)):
        chain = layout.chain(name)
        for left, right in zip(chain, chain[1:]):
            assert left.col_range == right.row_range, "chain blocks not linked"
        for b in chain:
            if b.side == "C":
                assert b.shape == (dim(seq, 1), dim(seq, 1))
            elif b.side == "A":
                assert b.shape == (dim(seq, b.position + 1), dim(seq, b.position))
            else:
                assert b.shape == (dim(seq, b.position), dim(seq, b.position + 1))
    # total block area equals the number of weight-2 positions
    nu = layout.diagram.nu
    dim2 = sum(1 for i in range(n) for j in range(i + 1, n) if nu[i] - nu[j] == 2)
    assert layout.dim_weight2() == dim2, "block area disagrees with weight-2 count"


def is_very_even(mu):
    """Every part even, every multiplicity even."""
    from collections import Counter

    c = Counter(mu.parts)
    return all(p % 2 == 0 and m % 2 == 0 for p, m in c.items())


def is_bad(mu, lie_type):
    """(flag, witness): whether mu indexes no orbit for the type.

    Type C rejects an odd part of odd multiplicity; types B and D reject an
    even part of odd multiplicity; type A rejects nothing.
    """
    lie_type.check_n(mu.n)
    if lie_type.letter == "A":
        return False, None
    from collections import Counter

    c = Counter(mu.parts)
    want_parity = 1 if lie_type.letter == "C" else 0
    for p in sorted(c, reverse=True):
        if p % 2 == want_parity and c[p] % 2 == 1:
            return True, p
    return False, None


def bad_block_criterion(mu, lie_type):
    """The same test read off the block structure: type C is bad exactly when
    some I-chain block has an odd number of rows, types B/D when some J-chain
    block does."""
    lie_type.check_n(mu.n)
    if lie_type.letter == "A":
        return False
    layout = block_layout(mu)
    chain = "I" if lie_type.letter == "C" else "J"
    return any(b.height % 2 == 1 for b in layout.blocks if b.chain == chain)


def classify_orbits(n, lie_type):
    """All (partition, orbit count) pairs for the type in dimension n.

    The count is 2 exactly for very even partitions in type D.
    """
    lie_type.check_n(n)
    out = []
    for mu in enumerate_partitions(n):
        bad, _ = is_bad(mu, lie_type)
        if bad:
            continue
        count = 2 if (lie_type.letter == "D" and is_very_even(mu)) else 1
        out.append((mu, count))
    return out
