"""Pure-Python exact phase-1 simplex on integer data.

Decides feasibility of {x >= 0 : A x = b} by minimising a weighted sum
of artificial variables.  The tableau is kept fraction-free: an integer
matrix M together with a positive integer divisor D represents the
rational tableau M/D, and every pivot divides exactly (Edmonds-style
integer pivoting), so all sign tests and ratio comparisons are plain
integer comparisons.  Bland's rule on both the entering and the leaving
choice guarantees termination.

The compiled twin in _speed.pyx implements the identical algorithm and
must produce bit-identical results; tests enforce this.
"""

KERNEL_NAME = "pure"

PIVOT_CAP = 10_000_000


def phase1(nrows, ncols, data, rhs, costs=None):
    """Run phase-1 simplex on A x = b, x >= 0 with integer A, b (b >= 0).

    data is the matrix as a list of nrows lists of ncols ints, rhs a list
    of nonnegative ints.  costs optionally weights the artificial of each
    row in the phase-1 objective (default all 1); weights let callers
    measure constraint violation in original rather than row-scaled units.

    Returns (feasible, xnum, xden, gapnum, gapden, pivots):
      feasible  -- True iff the system has a solution
      xnum/xden -- on success, x[j] = xnum[j]/xden exactly (xden > 0)
      gap       -- on failure, gapnum/gapden is the positive optimum of
                   the weighted artificial sum (the violation gap)
    """
    if costs is None:
        costs = [1] * nrows
    width = ncols + nrows + 1
    rc = ncols + nrows  # rhs column
    M = []
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
    pivots = 0
    while True:
        q = -1
        for j in range(rc):
            if obj[j] < 0:
                q = j
                break
        if q < 0:
            break
        # leaving row: minimum ratio rhs/column, ties to smallest basis index
        p = -1
        bn = bd = 0
        for i in range(nrows):
            c = M[i][q]
            if c > 0:
                n = M[i][rc]
                if p < 0:
                    p, bn, bd = i, n, c
                else:
                    t = n * bd - bn * c
                    if t < 0 or (t == 0 and basis[i] < basis[p]):
                        p, bn, bd = i, n, c
        if p < 0:
            raise ArithmeticError("phase-1 objective unbounded; input invalid")
        piv = M[p][q]
        rowp = M[p]
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

    wnum = -obj[rc]  # optimum = wnum / D >= 0
    if wnum == 0:
        xnum = [0] * ncols
        for i in range(nrows):
            if basis[i] < ncols:
                xnum[basis[i]] = M[i][rc]
        return (True, xnum, D, 0, 1, pivots)
    return (False, None, 0, wnum, D, pivots)
