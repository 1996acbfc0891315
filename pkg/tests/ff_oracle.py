"""Independent oracle: section counts of ideal powers by linear algebra over F_p.

The dimension of the degree-m piece of (a, b)^k for coprime forms a, b is
computed by writing out the multiplication matrix monomial by monomial and
row-reducing it over a finite field.  Random coefficients at a decent prime
make a degenerate pair (common factor or zero form) vanishingly unlikely.
"""

from __future__ import annotations


def monomials(deg: int) -> list[tuple[int, int, int]]:
    """Exponent triples of the degree-deg monomials in three variables."""
    if deg < 0:
        return []
    return [(i, j, deg - i - j) for i in range(deg, -1, -1) for j in range(deg - i, -1, -1)]


def random_form(deg: int, p: int, rng) -> dict[tuple[int, int, int], int]:
    return {mono: rng.randrange(p) for mono in monomials(deg)}


def poly_mul(f: dict, g: dict, p: int) -> dict:
    out: dict[tuple[int, int, int], int] = {}
    for ea, ca in f.items():
        if ca == 0:
            continue
        for eb, cb in g.items():
            if cb == 0:
                continue
            key = (ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2])
            out[key] = (out.get(key, 0) + ca * cb) % p
    return out


def poly_pow(f: dict, n: int, p: int) -> dict:
    out = {(0, 0, 0): 1}
    for _ in range(n):
        out = poly_mul(out, f, p)
    return out


def rank_mod_p(rows: list[list[int]], p: int) -> int:
    """Row rank by Gaussian elimination over F_p; mutates rows."""
    if not rows:
        return 0
    rank = 0
    ncols = len(rows[0])
    for col in range(ncols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][col] % p), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][col], -1, p)
        rows[rank] = [(x * inv) % p for x in rows[rank]]
        lead = rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                f = rows[r][col]
                rows[r] = [(x - f * y) % p for x, y in zip(rows[r], lead)]
        rank += 1
        if rank == len(rows):
            break
    return rank


def ideal_power_h0_oracle(b: int, c: int, k: int, m: int, p: int, rng) -> int:
    """dim of the degree-m graded piece of (alpha, beta)^k for random forms."""
    alpha = random_form(b, p, rng)
    beta = random_form(c, p, rng)
    basis = {mono: idx for idx, mono in enumerate(monomials(m))}
    rows = []
    for i in range(k + 1):
        gen = poly_mul(poly_pow(alpha, k - i, p), poly_pow(beta, i, p), p)
        cofactor_deg = m - (k - i) * b - i * c
        for mono in monomials(cofactor_deg):
            row = [0] * len(basis)
            for exp, coeff in gen.items():
                key = (exp[0] + mono[0], exp[1] + mono[1], exp[2] + mono[2])
                row[basis[key]] = coeff
            rows.append(row)
    return rank_mod_p(rows, p)
