"""Pure-Python fraction-free Gauss-Jordan elimination over the Gaussian integers.

Rows are given as two parallel lists of ints (real and imaginary parts).
The result rows are in reduced echelon shape up to a per-row scalar: every
pivot column is zero outside its pivot row.  Dividing each row by its pivot
entry is left to the caller, which owns the rational scalar type.
"""

from math import gcd


def _reduce_content(re_row, im_row):
    g = gcd(*re_row, *im_row)
    if g > 1:
        for j in range(len(re_row)):
            re_row[j] //= g
            im_row[j] //= g


def rref_zi(re_rows, im_rows, ncols):
    """Return ``(re_rows, im_rows, pivots)`` of the reduced nonzero rows."""
    R = [list(r) for r in re_rows]
    I = [list(r) for r in im_rows]
    keep = [k for k in range(len(R)) if any(R[k]) or any(I[k])]
    R = [R[k] for k in keep]
    I = [I[k] for k in keep]
    nrows = len(R)
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = r
        while p < nrows and not (R[p][c] or I[p][c]):
            p += 1
        if p == nrows:
            continue
        if p != r:
            R[p], R[r] = R[r], R[p]
            I[p], I[r] = I[r], I[p]
        pR, pI = R[r], I[r]
        _reduce_content(pR, pI)
        pr, pi = pR[c], pI[c]
        nz = [j for j in range(ncols) if pR[j] or pI[j]]
        for q in range(nrows):
            if q == r:
                continue
            QR, QI = R[q], I[q]
            qr, qi = QR[c], QI[c]
            if not (qr or qi):
                continue
            # row_q <- pivot * row_q - row_q[c] * row_p
            for j in range(ncols):
                xr = QR[j]
                xi = QI[j]
                if xr or xi:
                    QR[j] = pr * xr - pi * xi
                    QI[j] = pr * xi + pi * xr
            for j in nz:
                yr = pR[j]
                yi = pI[j]
                QR[j] -= qr * yr - qi * yi
                QI[j] -= qr * yi + qi * yr
            _reduce_content(QR, QI)
        pivots.append(c)
        r += 1
    return R[:r], I[:r], pivots
