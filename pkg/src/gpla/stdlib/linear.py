from __future__ import annotations

from collections.abc import Sequence

from gpla.normalform import Hyperplane
from gpla.polyhedron.schema import Rat
from gpla.term import ADD, CODEL, COZERO, DEL, DUP, ID, ONE, ZERO, Term, par, scl, seq, wiring

from .exceptions import LayerMismatch, ZeroHyperplane
from .schema import Matrix

# Wire-vector helpers. A block of `n` wires is treated as one vector.


def copy(k: int) -> Term:
    """`1 → k`, every output equal to the input."""
    match k:
        case 0:
            return DEL
        case 1:
            return ID
        case _:
            return seq(DUP, par(ID, copy(k - 1)))


def total(k: int) -> Term:
    """`k → 1`, the sum of the inputs."""
    match k:
        case 0:
            return ZERO
        case 1:
            return ID
        case _:
            return seq(par(ID, total(k - 1)), ADD)


def block_wiring(n: int, order: Sequence[int]) -> Term:
    """Permute blocks of `n` wires, sending block `b` to position `order[b]`."""
    return wiring([order[b] * n + i for b in range(len(order)) for i in range(n)])


def copies(n: int, k: int) -> Term:
    """`n → k·n`, `k` consecutive copies of the input vector."""
    return seq(
        par(*[copy(k)] * n),
        wiring([c * n + i for i in range(n) for c in range(k)]),
    )


def vadd(n: int) -> Term:
    """`2n → n`, coordinatewise sum of two vectors."""
    interleave = [2 * i for i in range(n)] + [2 * i + 1 for i in range(n)]
    return seq(wiring(interleave), par(*[ADD] * n))


def vscale(n: int, r: Rat) -> Term:
    return par(*[scl(r)] * n)


def vcodel(n: int) -> Term:
    return par(*[CODEL] * n)


def vcozero(n: int) -> Term:
    return par(*[COZERO] * n)


def vdel(n: int) -> Term:
    return par(*[DEL] * n)


def vzero(n: int) -> Term:
    return par(*[ZERO] * n)


def matrix_term(a: Matrix) -> Term:
    """
    `cols → rows` term with semantics `{(x, y) | y = A x}`.

    Each input is copied once per row, scaled by its entry, and the copies
    are regrouped by row and summed.
    """
    m, n = a.rows, a.cols
    if m == 0 or n == 0:
        return par(par(*[DEL] * n), par(*[ZERO] * m))

    scalars = [ID if a[i, j] == 1 else scl(a[i, j]) for j in range(n) for i in range(m)]
    return seq(
        par(*[copy(m)] * n),
        par(*scalars),
        wiring([i * n + j for j in range(n) for i in range(m)]),
        par(*[total(n)] * m),
    )


def affine_term(a: Matrix, b: Sequence[Rat]) -> Term:
    """`cols → rows` term with semantics `{(x, A x + b)}`."""
    if len(b) != a.rows:
        raise LayerMismatch(f"bias of length {len(b)} for {a.rows} outputs")
    shifts = [
        ID if b_i == 0 else seq(par(ID, seq(ONE, scl(b_i))), ADD) for b_i in b
    ]
    return seq(matrix_term(a), par(*shifts))


def hyperplane_term(h: Hyperplane) -> Term:
    """The `n → 1` affine map `x ↦ H(x)`."""
    if not any(h.expr.coeffs) and h.expr.const == 0:
        raise ZeroHyperplane("the zero map is not a hyperplane")
    return affine_term(Matrix(1, h.dim, h.expr.coeffs), [h.expr.const])
