"""Independent oracles used only by the test suite.

The Jordan-type oracle here shares no code with the library: matrices are
plain lists, powers are naive triple loops, and kernel dimensions come from
a local row reduction.  The composite-rank criterion re-reads the orbit
condition off the chain structure instead of the rank-of-powers sequence.
"""

def mat_to_lists(m):
    return [list(row) for row in m.entries]


def _mul(a, b, zero):
    n, k, w = len(a), len(b), len(b[0])
    out = [[zero for _ in range(w)] for _ in range(n)]
    for i in range(n):
        for t in range(k):
            ait = a[i][t]
            if not ait:
                continue
            for j in range(w):
                out[i][j] = out[i][j] + ait * b[t][j]
    return out


def _kernel_dim(rows, one):
    """Dimension of the right kernel via local row reduction."""
    m = [list(r) for r in rows]
    nrows, ncols = len(m), len(m[0])
    rank = 0
    for c in range(ncols):
        piv = None
        for i in range(rank, nrows):
            if m[i][c]:
                piv = i
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = one / m[rank][c]
        m[rank] = [v * inv for v in m[rank]]
        for i in range(nrows):
            if i != rank and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
    return ncols - rank


def jordan_oracle(m):
    """Jordan type of a nilpotent matrix from kernel growth of its powers."""
    field = m.field
    zero, one = field.zero(), field.one()
    n = m.rows
    a = mat_to_lists(m)
    power = a
    dims = [0]
    for _ in range(n):
        dims.append(_kernel_dim(power, one))
        if dims[-1] == n:
            break
        power = _mul(power, a, zero)
    assert dims[-1] == n, "oracle input not nilpotent"
    # blocks of size >= k: kernel growth at step k
    growth = [dims[i + 1] - dims[i] for i in range(len(dims) - 1)]
    parts = []
    for size in range(len(growth), 0, -1):
        nxt = growth[size] if size < len(growth) else 0
        parts.extend([size] * (growth[size - 1] - nxt))
    return tuple(sorted(parts, reverse=True))


def chain_composites_maximal(x, layout):
    """True when every window of consecutive chain blocks multiplies to a
    matrix of the largest rank the window dimensions allow."""
    for name in ("I", "J"):
        chain = layout.chain(name)
        for i in range(len(chain)):
            prod = None
            dims = [chain[i].height]
            for j in range(i, len(chain)):
                b = chain[j]
                sub = _submat(x, b)
                prod = sub if prod is None else prod * sub
                dims.append(b.width)
                if prod.rank() != min(dims):
                    return False
    return True


def _submat(x, block):
    from nilcanon.matrixcore import Mat

    r0, r1 = block.row_range
    c0, c1 = block.col_range
    rows = [
        [x.entries[i - 1][j - 1] for j in range(c0, c1 + 1)] for i in range(r0, r1 + 1)
    ]
    return Mat(x.field, rows)


def all_upper_01(n, field):
    """Every strictly upper-triangular 0/1 matrix of size n."""
    from nilcanon.matrixcore import Mat

    positions = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for bits in range(1 << len(positions)):
        rows = [[0] * n for _ in range(n)]
        for t, (i, j) in enumerate(positions):
            if bits >> t & 1:
                rows[i][j] = 1
        yield Mat.from_int_rows(field, rows)
