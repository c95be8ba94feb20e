# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of simplex_py.phase1.

Same fraction-free phase-1 simplex, same Bland pivoting, bit-identical
results; entries stay Python ints so there is no overflow ceiling.  The
speedup comes from typed loop indices and list fast-paths.
"""

KERNEL_NAME = "compiled"

PIVOT_CAP = 10_000_000


def phase1(Py_ssize_t nrows, Py_ssize_t ncols, data, rhs, costs=None):
    """See simplex_py.phase1; identical contract and pivot sequence."""
    cdef Py_ssize_t width = ncols + nrows + 1
    cdef Py_ssize_t rc = ncols + nrows
    cdef Py_ssize_t i, j, q, p
    cdef list M = [], row, rowi, rowp, obj, basis, xnum
    cdef long pivots = 0

    if costs is None:
        costs = [1] * nrows
    for i in range(nrows):
        if rhs[i] < 0:
            raise ValueError("rhs entries must be nonnegative")
        row = [0] * width
        row[0:ncols] = data[i]
        row[ncols + i] = 1
        row[rc] = rhs[i]
        M.append(row)
    obj = [0] * width
    for j in range(ncols):
        s = 0
        for i in range(nrows):
            s += costs[i] * M[i][j]
        obj[j] = -s
    s = 0
    for i in range(nrows):
        s += costs[i] * rhs[i]
    obj[rc] = -s
    M.append(obj)

    basis = [ncols + i for i in range(nrows)]
    D = 1
    while True:
        q = -1
        for j in range(rc):
            if obj[j] < 0:
                q = j
                break
        if q < 0:
            break
        p = -1
        bn = bd = 0
        for i in range(nrows):
            rowi = M[i]
            c = rowi[q]
            if c > 0:
                n = rowi[rc]
                if p < 0:
                    p, bn, bd = i, n, c
                else:
                    t = n * bd - bn * c
                    if t < 0 or (t == 0 and basis[i] < basis[p]):
                        p, bn, bd = i, n, c
        if p < 0:
            raise ArithmeticError("phase-1 objective unbounded; input invalid")
        rowp = M[p]
        piv = rowp[q]
        for i in range(nrows + 1):
            if i == p:
                continue
            rowi = M[i]
            f = rowi[q]
            if f == 0:
                if piv != D:
                    for j in range(width):
                        v = rowi[j]
                        if v:
                            rowi[j] = (piv * v) // D
            else:
                for j in range(width):
                    rowi[j] = (piv * rowi[j] - f * rowp[j]) // D
        D = piv
        basis[p] = q
        pivots += 1
        if pivots > PIVOT_CAP:
            raise ArithmeticError("pivot cap exceeded")

    wnum = -obj[rc]
    if wnum == 0:
        xnum = [0] * ncols
        for i in range(nrows):
            if basis[i] < ncols:
                xnum[basis[i]] = M[i][rc]
        return (True, xnum, D, 0, 1, pivots)
    return (False, None, 0, wnum, D, pivots)
