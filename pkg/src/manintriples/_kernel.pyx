# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of ``_kernel_py.rref_zi``; same contract, typed loop indices."""

from math import gcd


cdef void _reduce_content(list re_row, list im_row, Py_ssize_t n):
    cdef Py_ssize_t j
    g = gcd(*re_row, *im_row)
    if g > 1:
        for j in range(n):
            re_row[j] = re_row[j] // g
            im_row[j] = im_row[j] // g


def rref_zi(re_rows, im_rows, Py_ssize_t ncols):
    cdef list R = []
    cdef list I = []
    cdef Py_ssize_t k, nrows, r, c, p, q, j
    cdef list pR, pI, QR, QI, nz, pivots
    for k in range(len(re_rows)):
        a = list(re_rows[k])
        b = list(im_rows[k])
        if any(a) or any(b):
            R.append(a)
            I.append(b)
    nrows = len(R)
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = r
        while p < nrows and not ((<list>R[p])[c] or (<list>I[p])[c]):
            p += 1
        if p == nrows:
            continue
        if p != r:
            R[p], R[r] = R[r], R[p]
            I[p], I[r] = I[r], I[p]
        pR = <list>R[r]
        pI = <list>I[r]
        _reduce_content(pR, pI, ncols)
        pr = pR[c]
        pi = pI[c]
        nz = [j for j in range(ncols) if pR[j] or pI[j]]
        for q in range(nrows):
            if q == r:
                continue
            QR = <list>R[q]
            QI = <list>I[q]
            qr = QR[c]
            qi = QI[c]
            if not (qr or qi):
                continue
            for j in range(ncols):
                xr = QR[j]
                xi = QI[j]
                if xr or xi:
                    QR[j] = pr * xr - pi * xi
                    QI[j] = pr * xi + pi * xr
            for j in nz:
                yr = pR[j]
                yi = pI[j]
                QR[j] = QR[j] - (qr * yr - qi * yi)
                QI[j] = QI[j] - (qr * yi + qi * yr)
            _reduce_content(QR, QI, ncols)
        pivots.append(c)
        r += 1
    return R[:r], I[:r], pivots
