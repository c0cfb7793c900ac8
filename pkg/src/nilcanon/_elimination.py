"""Elimination engine: conjugate a generic layout-supported matrix into the
symmetric canonical form using elementary operations only.

Every step is a conjugation by an elementary matrix whose off-diagonal
entries sit at weight-0 positions, so the matrix never leaves the orbit or
the layout.  A single conjugation performs a row operation together with
the inverse operation on the matching columns; since consecutive blocks of
a chain share an index range, an operation aimed at one block disturbs its
neighbour.  Canonical neighbours are repaired by a transported operation
on their far side, which disturbs the next block, and so on: operations
cascade along the chain and emerge on the partner block of the pair being
processed.  That emergent operation is exactly the dual operation the
schedule wants.

Schedule per chain, centre outward:

  I-chain pair (A, B), inner dimension h, outer w:
    1. free row operations bring A to reduced echelon form (pivot fail =>
       NotGeneric), coupled column operations clear and permute it to
       [0 | J_h];
    2. free column operations on B make its bottom h x h square J_h;
    3. coupled row operations clear the top rows of B (their duals add
       zero columns of A, so A survives);
    4. coupled column swaps split the J-run between the corners.
  A second pass, outermost pair first, repairs the odd-h pairs: the four
  coupled operations place the doubled middle entry, dividing by 2 (hence
  the characteristic restriction), and diagonal ripples keep everything
  outside the pair canonical.

  J-chain: the central block is reduced to J first; each pair then runs
  steps 1-3 with the cascade passing through the central block.
"""

from __future__ import annotations

from .errors import EngineError, NotGeneric
from .matrixcore import ElementaryOp, elementary_conjugate


class Eliminator:
    def __init__(self, x, layout, check=True):
        self.x = x
        self.field = x.field
        self.layout = layout
        self.script = []
        self.canonical = set()  # block ids (index into layout.blocks)
        self.blocks = list(layout.blocks)
        self.check = check

    # -- low-level access ---------------------------------------------------

    def _sub(self, block):
        """Current block content, 0-based local [row][col]."""
        r0, r1 = block.row_range
        c0, c1 = block.col_range
        return [
            [self.x.entries[i - 1][j - 1] for j in range(c0, c1 + 1)]
            for i in range(r0, r1 + 1)
        ]

    def _conj(self, op):
        self.x = elementary_conjugate(self.x, op)
        self.script.append(op)

    def _block_id(self, block):
        return self.blocks.index(block)

    # -- cascading ------------------------------------------------------------

    def _op_indices(self, op):
        return (op.i,) if op.kind == "scale" else (op.i, op.j)

    def _neighbours(self, op):
        """Canonical blocks adjacent to the op's index class, with the side
        the operation arrives on ("rows" or "cols")."""
        idx = self._op_indices(op)
        out = []
        for bid, b in enumerate(self.blocks):
            if bid not in self.canonical:
                continue
            in_rows = all(b.row_range[0] <= k <= b.row_range[1] for k in idx)
            in_cols = all(b.col_range[0] <= k <= b.col_range[1] for k in idx)
            if in_rows:
                out.append((bid, "rows"))
            elif in_cols:
                out.append((bid, "cols"))
        return out

    def cascaded(self, op, exempt):
        """Apply op; repair every canonical non-exempt neighbour through a
        transported operation on its far side, recursively."""
        plans = []
        for bid, side in self._neighbours(op):
            if bid in exempt:
                continue
            rops = self._transport(self.blocks[bid], side, op)
            plans.append((bid, rops))
        self._conj(op)
        for bid, rops in plans:
            for rop in rops:
                self.cascaded(rop, exempt | {bid})

    def _guarded(self, op, exempt):
        """Top-level schedule step: cascade plus an invariance check on all
        canonical blocks outside the exempt set."""
        if self.check:
            before = {
                bid: self._sub(self.blocks[bid])
                for bid in self.canonical
                if bid not in exempt
            }
        self.cascaded(op, exempt)
        if self.check:
            for bid, content in before.items():
                if self._sub(self.blocks[bid]) != content:
                    raise EngineError(
                        f"cascade damaged canonical block {self.blocks[bid]} on {op}"
                    )

    # -- transported repairs ------------------------------------------------

    def _transport(self, block, side, op):
        """Operations on the block's far side undoing the arriving op.

        Requires the block content to be partial-permutation-like on the
        touched lines; the schedule only sends compliant operations."""
        m = self._sub(block)
        h, w = len(m), len(m[0])
        if side == "rows":
            base = block.row_range[0]
            far = block.col_range[0]
            line = lambda a: [(c, m[a][c]) for c in range(w) if m[a][c]]
            cross = lambda c: [(r, m[r][c]) for r in range(h) if m[r][c]]
        else:
            base = block.col_range[0]
            far = block.row_range[0]
            line = lambda a: [(r, m[r][a]) for r in range(h) if m[r][a]]
            cross = lambda r: [(c, m[r][c]) for c in range(w) if m[r][c]]

        def ambient(k):
            return far + k

        if op.kind == "swap":
            a, b = op.i - base, op.j - base
            sa, sb = line(a), line(b)
            if not sa and not sb:
                return []
            if len(sa) == 1 and len(sb) == 1:
                (ca, va), (cb, vb) = sa[0], sb[0]
                ops = [ElementaryOp("swap", ambient(ca), ambient(cb))]
                if va != vb:
                    if side == "rows":
                        ops.append(ElementaryOp("scale", ambient(ca), lam=vb / va))
                        ops.append(ElementaryOp("scale", ambient(cb), lam=va / vb))
                    else:
                        ops.append(ElementaryOp("scale", ambient(ca), lam=va / vb))
                        ops.append(ElementaryOp("scale", ambient(cb), lam=vb / va))
                return ops
            raise EngineError(f"untransportable swap through {block}")

        if op.kind == "scale":
            a = op.i - base
            sa = line(a)
            # row side: row a was multiplied by lam; undo on each touched
            # column.  col side: column a was multiplied by lam^{-1}; undo
            # on the touched row.
            ops = []
            for c, _ in sa:
                if len(cross(c)) != 1:
                    raise EngineError(f"untransportable scale through {block}")
                ops.append(ElementaryOp("scale", ambient(c), lam=op.lam))
            return ops

        # op.kind == "add": row u += lam row v / col v -= lam col u
        if side == "rows":
            u, v = op.i - base, op.j - base
            damage = line(v)  # row u gained lam * these entries
            if not damage:
                return []
            anchors = line(u)
            if not anchors:
                raise EngineError(f"add into an empty line of {block}")
            ca, va = anchors[0]
            if len(cross(ca)) != 1:
                raise EngineError(f"anchor column not free in {block}")
            return [
                ElementaryOp("add", ambient(ca), ambient(c), lam=op.lam * vb / va)
                for c, vb in damage
            ]
        u, v = op.i - base, op.j - base
        damage = line(u)  # column v lost lam * these entries
        if not damage:
            return []
        anchors = line(v)
        if not anchors:
            raise EngineError(f"add into an empty line of {block}")
        ra, va = anchors[0]
        if len(cross(ra)) != 1:
            raise EngineError(f"anchor row not free in {block}")
        return [
            ElementaryOp("add", ambient(r), ambient(ra), lam=op.lam * vu / va)
            for r, vu in damage
        ]

    # -- schedule -------------------------------------------------------------

    def run(self):
        self._run_chain("I")
        self._run_chain("J")
        return self.x, tuple(self.script)

    def _run_chain(self, name):
        chain = self.layout.chain(name)
        if not chain:
            return
        if name == "J":
            s = len(chain) // 2
            centre = chain[s]
            self._reduce_central(centre)
            for r in range(1, s + 1):
                self._phase1_pair(chain[s - r], chain[s + r], top_square=True)
        else:
            s = len(chain) // 2
            for r in range(1, s + 1):
                a, b = chain[s - r], chain[s - 1 + r]
                self._phase1_pair(a, b, top_square=False)
                self._swap_phase(a, b)
            for r in range(s, 0, -1):
                a, b = chain[s - r], chain[s - 1 + r]
                h, w = a.shape
                if h % 2 == 1 and h < w:
                    self._phase2_fix(a, b)
        self._assert_chain(name)

    def _reduce_central(self, c):
        """Row-reduce the central square block to J (NotGeneric if singular)."""
        k = c.height
        base = c.row_range[0]
        exempt = {self._block_id(c)}
        r = 0
        for col in range(k):
            m = self._sub(c)
            piv = next((i for i in range(r, k) if m[i][col]), None)
            if piv is None:
                raise NotGeneric(f"central block singular at column {col + 1}")
            if piv != r:
                self._guarded(ElementaryOp("swap", base + r, base + piv), exempt)
            m = self._sub(c)
            if m[r][col] != self.field.one():
                self._guarded(
                    ElementaryOp("scale", base + r, lam=self.field.one() / m[r][col]),
                    exempt,
                )
            for i in range(k):
                m = self._sub(c)
                if i != r and m[i][col]:
                    self._guarded(
                        ElementaryOp("add", base + i, base + r, lam=-m[i][col]),
                        exempt,
                    )
            r += 1
        # identity -> J by reversing the rows
        for i in range(k // 2):
            self._guarded(ElementaryOp("swap", base + i, base + k - 1 - i), exempt)
        self.canonical.add(self._block_id(c))
        if self.check:
            self._expect(c, {(i, k - 1 - i): self.field.one() for i in range(k)})

    def _phase1_pair(self, a, b, top_square):
        """Steps 1-3: A -> [0|J], B -> J in its anchored square, rest cleared."""
        h, w = a.shape
        exempt = {self._block_id(a), self._block_id(b)}
        arow = a.row_range[0]
        acol = a.col_range[0]
        one = self.field.one()

        # 1. reduced row echelon form of A via free row operations
        r = 0
        pivots = []
        for col in range(w):
            if r == h:
                break
            m = self._sub(a)
            piv = next((i for i in range(r, h) if m[i][col]), None)
            if piv is None:
                continue
            if piv != r:
                self._guarded(ElementaryOp("swap", arow + r, arow + piv), exempt)
            m = self._sub(a)
            if m[r][col] != one:
                self._guarded(
                    ElementaryOp("scale", arow + r, lam=one / m[r][col]), exempt
                )
            for i in range(h):
                m = self._sub(a)
                if i != r and m[i][col]:
                    self._guarded(
                        ElementaryOp("add", arow + i, arow + r, lam=-m[i][col]), exempt
                    )
            pivots.append(col)
            r += 1
        if r < h:
            raise NotGeneric(f"block {a} does not have full row rank")

        # 2. coupled column clean-up: clear non-pivot columns, then permute
        #    the pivots onto the reversed tail so A = [0 | J_h]
        for col in range(w):
            if col in pivots:
                continue
            for i in range(h):
                m = self._sub(a)
                if m[i][col]:
                    self._guarded(
                        ElementaryOp("add", acol + pivots[i], acol + col, lam=m[i][col]),
                        exempt,
                    )
        src = self._placement(w, {w - 1 - i: pivots[i] for i in range(h)})
        self._apply_placement(acol, src, exempt)

        # 3. free column operations: J in the anchored square of B
        bh, bw = b.shape  # ambient (w x h)
        assert (bh, bw) == (w, h)
        bcol = b.col_range[0]
        brow = b.row_range[0]
        for j in range(h):
            rho = (h - 1 - j) if top_square else (w - 1 - j)
            m = self._sub(b)
            piv = next((c for c in range(j, h) if m[rho][c]), None)
            if piv is None:
                raise NotGeneric(f"anchored square of {b} lost rank")
            if piv != j:
                self._guarded(ElementaryOp("swap", bcol + j, bcol + piv), exempt)
            m = self._sub(b)
            if m[rho][j] != one:
                # conj scale(u, lam) multiplies column u by lam^{-1}
                self._guarded(
                    ElementaryOp("scale", bcol + j, lam=m[rho][j]), exempt
                )
            for c in range(h):
                m = self._sub(b)
                if c != j and m[rho][c]:
                    self._guarded(
                        ElementaryOp("add", bcol + j, bcol + c, lam=m[rho][c]), exempt
                    )

        # 4. coupled row operations clear the remaining rows of B
        rest = range(h, w) if top_square else range(w - h)
        for t in rest:
            for c in range(h):
                m = self._sub(b)
                if m[t][c]:
                    anchor = (h - 1 - c) if top_square else (w - 1 - c)
                    self._guarded(
                        ElementaryOp("add", brow + t, brow + anchor, lam=-m[t][c]),
                        exempt,
                    )

        self.canonical.add(self._block_id(a))
        self.canonical.add(self._block_id(b))
        if self.check:
            self._expect(a, {(i, w - 1 - i): one for i in range(h)})
            if top_square:
                self._expect(b, {(h - 1 - j, j): one for j in range(h)})
            else:
                self._expect(b, {(w - 1 - j, j): one for j in range(h)})

    def _swap_phase(self, a, b):
        """Move half of the J-run to the far left of A (dual swaps follow)."""
        h, w = a.shape
        nm = h // 2
        if nm == 0 or h == w:
            self._note_pattern(a, b)
            return
        exempt = {self._block_id(a), self._block_id(b)}
        src = {}
        for p in range(nm):
            src[p] = w - h + p
        for p in range(nm, w - h + nm):
            src[p] = p - nm
        src = self._placement(w, src)
        self._apply_placement(a.col_range[0], src, exempt)
        self._note_pattern(a, b)

    def _note_pattern(self, a, b):
        if not self.check:
            return
        from .canon import _i_pattern_asymmetric, _i_pattern_asymmetric_mirror

        h, w = a.shape
        one = self.field.one()
        self._expect(a, {k: one for k in _i_pattern_asymmetric(h, w)})
        mirror = _i_pattern_asymmetric_mirror(h, w)
        bexp = {}
        for (i, j), _ in mirror.items():
            bexp[(w - 1 - j, h - 1 - i)] = one
        self._expect(b, bexp)

    def _phase2_fix(self, a, b):
        """The four coupled operations turning the asymmetric odd pair into
        the doubled symmetric pattern; divides by 2."""
        h, w = a.shape
        m0 = (h - 1) // 2
        cst = w - 1 - m0
        exempt = {self._block_id(a), self._block_id(b)}
        one = self.field.one()
        half = one / self.field.from_int(2)
        acol = a.col_range[0]
        brow = b.row_range[0]
        bcol = b.col_range[0]
        # 1. A: column m gains column c*
        self._guarded(ElementaryOp("add", acol + cst, acol + m0, lam=-one), exempt)
        # 2. B (transposed view): column m gains half of column c*
        self._guarded(ElementaryOp("add", brow + m0, brow + cst, lam=half), exempt)
        # 3. B: double the anchored middle line
        self._guarded(ElementaryOp("scale", bcol + m0, lam=half), exempt)
        # 4. A: double column c*
        self._guarded(ElementaryOp("scale", acol + cst, lam=half), exempt)
        if self.check:
            from .canon import _i_pattern

            pat = {k: one for k in _i_pattern(h, w)}
            self._expect(a, pat)
            bexp = {(w - 1 - j, h - 1 - i): one for (i, j) in _i_pattern(h, w)}
            self._expect(b, bexp)

    # -- helpers ----------------------------------------------------------------

    def _placement(self, w, partial):
        """Full source map: position -> old column, identity-filled."""
        used = set(partial.values())
        free = [c for c in range(w) if c not in used]
        src = []
        it = iter(free)
        for p in range(w):
            src.append(partial[p] if p in partial else next(it))
        return src

    def _apply_placement(self, base, src, exempt):
        """Realise a content permutation with coupled swaps."""
        cur = list(range(len(src)))
        for p in range(len(src)):
            if cur[p] == src[p]:
                continue
            q = cur.index(src[p], p)
            self._guarded(ElementaryOp("swap", base + p, base + q), exempt)
            cur[p], cur[q] = cur[q], cur[p]

    def _expect(self, block, pattern):
        m = self._sub(block)
        z = self.field.zero()
        for i in range(len(m)):
            for j in range(len(m[0])):
                want = pattern.get((i, j), z)
                if m[i][j] != want:
                    raise EngineError(
                        f"block {block} missed its pattern at ({i + 1},{j + 1}): "
                        f"got {m[i][j]}, want {want}"
                    )

    def _assert_chain(self, name):
        if not self.check:
            return
        # every block of the chain must be canonical by now
        for b in self.layout.chain(name):
            if self._block_id(b) not in self.canonical:
                raise EngineError(f"block {b} never reached canonical form")
