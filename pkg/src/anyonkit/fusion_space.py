"""Standard fusion-tree bases and the F/braid matrices acting on them.

The canonical basis of ``hom(a_1 x ... x a_n, t)`` is the left-associated
fusion tree: intermediate charges ``(e_1, ..., e_{n-1})`` with ``e_1`` a
channel of ``a_1 x a_2``, each ``e_k`` a channel of ``e_{k-1} x a_{k+1}``
and ``e_{n-1} = t``.  Trees are enumerated in lexicographic order of their
intermediate labels, so every matrix built here is reproducible bit for bit.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InputError
from .mtc import AnyonModel, f_block

__all__ = ['FusionBasis', 'enumerate_basis', 'f_matrix', 'braid_generator']


@dataclass(frozen=True)
class FusionBasis:
    """Enumerated fusion trees of fixed charges and total charge."""

    charges: tuple[int, ...]
    total: int
    trees: tuple[tuple[int, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.trees)

    @property
    def strand_count(self) -> int:
        return len(self.charges)


def enumerate_basis(model: AnyonModel, charges, total) -> FusionBasis:
    """Enumerate all left-associated fusion trees of ``charges`` with total ``total``.

    Dimension 0 (no admissible tree) is a valid outcome; a single charge has
    exactly one empty tree when it equals the total.
    """
    ring = model.ring
    charges = tuple(ring.check_label(c) for c in charges)
    total = ring.check_label(total)
    if len(charges) == 0:
        raise InputError('a fusion basis needs at least one charge')
    if len(charges) == 1:
        trees = ((),) if charges[0] == total else ()
        return FusionBasis(charges, total, trees)
    partial = [((), charges[0])]
    for incoming in charges[1:]:
        partial = [(seq + (c,), c)
                   for seq, current in partial
                   for c in range(ring.rank)
                   if ring.n[current, incoming, c]]
    trees = tuple(seq for seq, current in partial if current == total)
    return FusionBasis(charges, total, trees)


def f_matrix(model: AnyonModel, a: int, b: int, c: int, d: int) -> np.ndarray:
    """The F-matrix of ``(a, b, c) -> d`` over sorted admissible channels.

    Rows are the ``(ab)`` channels ``e``, columns the ``(bc)`` channels ``f``;
    an inadmissible combination yields an empty matrix.
    """
    for label in (a, b, c, d):
        model.ring.check_label(label)
    return f_block(model, a, b, c, d)[0]


def braid_generator(model: AnyonModel, basis: FusionBasis, i: int) -> np.ndarray:
    """Matrix of the elementary braid of strands ``i`` and ``i+1`` on the basis.

    For ``i = 1`` the generator is diagonal with entries ``R[a_1,a_2|e_1]``.
    For ``i >= 2`` it acts on ``e_{i-1}`` only, through the F-conjugated
    exchange ``F^{-1} diag(R) F`` within the local ``x (x) a_i (x) a_{i+1} -> z``
    subtree.  When the two braided charges differ, the columns index ``basis``
    and the rows index the basis with those charges swapped.
    """
    return _braid_generator(model, basis, i, inverse=False)


def _braid_generator(model: AnyonModel, basis: FusionBasis, i: int,
                     inverse: bool = False) -> np.ndarray:
    n = basis.strand_count
    if not 1 <= i <= n - 1:
        raise InputError(f'strand index {i} out of range for {n} strands')
    if basis.dim == 0:
        raise InputError('cannot braid on an empty basis')
    b, c = basis.charges[i - 1], basis.charges[i]
    if b == c:
        target = basis
    else:
        swapped = list(basis.charges)
        swapped[i - 1], swapped[i] = swapped[i], swapped[i - 1]
        target = enumerate_basis(model, swapped, basis.total)
    index = {tree: row for row, tree in enumerate(target.trees)}
    matrix = np.zeros((target.dim, basis.dim), dtype=complex)

    if i == 1:
        for col, tree in enumerate(basis.trees):
            phase = model.r_symbol(b, c, tree[0])
            matrix[index[tree], col] = 1.0 / phase if inverse else phase
        return matrix

    blocks = {}
    for col, tree in enumerate(basis.trees):
        x = tree[i - 3] if i >= 3 else basis.charges[0]
        z = tree[i - 1]
        key = (x, z)
        if key not in blocks:
            fwd, rows_fwd, channels = f_block(model, x, b, c, z)
            back, rows_back, _ = f_block(model, x, c, b, z)
            blocks[key] = (fwd, rows_fwd, channels, np.linalg.inv(back), rows_back)
        fwd, rows_fwd, channels, back_inv, rows_back = blocks[key]
        y_row = rows_fwd.index(tree[i - 2])
        for g_col, g in enumerate(channels):
            phase = model.r_symbol(b, c, g)
            weight = fwd[y_row, g_col] * (1.0 / phase if inverse else phase)
            for y_new_col, y_new in enumerate(rows_back):
                new_tree = tree[:i - 2] + (y_new,) + tree[i - 1:]
                matrix[index[new_tree], col] += back_inv[g_col, y_new_col] * weight
    return matrix
