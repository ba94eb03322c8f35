"""Pure-Python float kernels (fallback for the compiled ``_kernels``)."""

# Replaces an exactly-zero pivot; equivalent to nudging the shift.
_TINY = 1e-300


def sturm_count(diag, offsq, x):
    """Number of eigenvalues strictly below ``x``.

    ``offsq[i]`` is the product ``sub[i] * sup[i]`` of the symmetric
    tridiagonal's squared off-diagonal entry.
    """
    count = 0
    d = 1.0
    n = len(diag)
    for i in range(n):
        if i:
            d = (diag[i] - x) - offsq[i - 1] / d
        else:
            d = diag[0] - x
        if d == 0.0:
            d = _TINY
        if d < 0.0:
            count += 1
    return count


def bisect_eigenvalues(diag, offsq, lo, hi, width):
    """All eigenvalues, descending, each bracketed to ``width``."""
    n = len(diag)
    out = []
    for j in range(n - 1, -1, -1):
        a, b = lo, hi
        while b - a > width:
            mid = 0.5 * (a + b)
            if mid <= a or mid >= b:
                break
            if sturm_count(diag, offsq, mid) > j:
                b = mid
            else:
                a = mid
        out.append(0.5 * (a + b))
    return out


def pcs_float(b_ext, a, c_ext, theta):
    """Forward three-term recurrence in floating point."""
    D = len(a) - 1
    sigma = [0.0] * (D + 1)
    sigma[0] = 1.0
    sigma[1] = theta / b_ext[0]
    for i in range(1, D):
        sigma[i + 1] = ((theta - a[i]) * sigma[i] - c_ext[i] * sigma[i - 1]) / b_ext[i]
    return sigma
