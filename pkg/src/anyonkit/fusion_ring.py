"""Integer-level fusion algebra.

A fusion ring is described by an ordered list of label names, a conjugation
(dual) map and a rank-3 table of non-negative integer structure constants
``n[a, b, c] = N_ab^c``.  Label ``0`` is always the unit.  Construction only
checks shapes and index ranges; the ring axioms (commutativity,
associativity, positivity, conjugation) are verified by :func:`validate_ring`
so that deliberately broken rings can be built and diagnosed.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import InputError, NumericError

__all__ = ['Label', 'FusionRing', 'AxiomCheck', 'RingReport', 'fuse', 'validate_ring',
           'structure_problems', 'power_decompose', 'fp_dimensions']

Label = int
"""Dense label index; ``0`` is the unit."""


@dataclass(frozen=True)
class FusionRing:
    """Labels, dual map and structure constants of a fusion ring.

    Parameters
    ----------
    labels : tuple of str
        Display names; position in the tuple is the label index.
    dual : tuple of int
        Conjugation map ``a -> a*`` as label indices.
    n : ndarray
        Integer table of shape ``(rank, rank, rank)`` with ``n[a, b, c] = N_ab^c``.
    """

    labels: tuple[str, ...]
    dual: tuple[int, ...]
    n: np.ndarray = field(repr=False)

    def __post_init__(self):
        labels = tuple(str(s) for s in self.labels)
        r = len(labels)
        if r == 0:
            raise InputError('a fusion ring needs at least the unit label')
        if len(set(labels)) != r:
            raise InputError('label names must be unique')
        dual = tuple(int(d) for d in self.dual)
        if len(dual) != r or any(not 0 <= d < r for d in dual):
            raise InputError('dual map must assign an in-range label to every label')
        n = np.asarray(self.n)
        if n.shape != (r, r, r):
            raise InputError(f'structure constants must have shape {(r, r, r)}, got {n.shape}')
        if not np.issubdtype(n.dtype, np.integer):
            raise InputError('structure constants must be integers')
        n = n.astype(np.int64).copy()
        n.setflags(write=False)
        object.__setattr__(self, 'labels', labels)
        object.__setattr__(self, 'dual', dual)
        object.__setattr__(self, 'n', n)

    @property
    def rank(self) -> int:
        return len(self.labels)

    def check_label(self, a: Label) -> Label:
        a = int(a)
        if not 0 <= a < self.rank:
            raise InputError(f'label index {a} out of range for rank {self.rank}')
        return a

    def label_index(self, name: str) -> Label:
        """Resolve a display name to its index; the unit may always be written '1'."""
        if name in self.labels:
            return self.labels.index(name)
        if name == '1':
            return 0
        raise InputError(f'unknown label {name!r}; known labels: {", ".join(self.labels)}')

    def is_admissible(self, a: Label, b: Label, c: Label) -> bool:
        return self.n[a, b, c] >= 1

    def fusion_matrix(self, a: Label) -> np.ndarray:
        """The matrix ``(N_a)_bc = N_ab^c`` acting on the label lattice."""
        return self.n[self.check_label(a)]

    def __eq__(self, other):
        if not isinstance(other, FusionRing):
            return NotImplemented
        return (self.labels == other.labels and self.dual == other.dual
                and np.array_equal(self.n, other.n))


@dataclass(frozen=True)
class AxiomCheck:
    """Outcome of a single ring-axiom check; `witness` is the first failing index tuple."""

    name: str
    passed: bool
    witness: tuple[int, ...] | None = None


@dataclass(frozen=True)
class RingReport:
    checks: tuple[AxiomCheck, ...]

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def __getitem__(self, name: str) -> AxiomCheck:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)


def fuse(ring: FusionRing, a: Label, b: Label) -> dict[Label, int]:
    """Fusion channels of ``a x b`` as a map ``{c: N_ab^c}`` over nonzero entries."""
    a = ring.check_label(a)
    b = ring.check_label(b)
    row = ring.n[a, b]
    return {int(c): int(row[c]) for c in np.nonzero(row)[0]}


def structure_problems(ring: FusionRing) -> list[str]:
    """Structural defects beyond the four ring axioms, as human-readable messages.

    Checks the unit laws ``N_0a^c = N_a0^c = delta_ac``, the uniqueness of the
    unit channel ``N_ab^0 = delta_{b,a*}`` against the declared dual, and that
    the declared dual is an involution.
    """
    problems = []
    r = ring.rank
    n = ring.n
    for a in range(r):
        for c in range(r):
            want = 1 if c == a else 0
            if n[0, a, c] != want or n[a, 0, c] != want:
                problems.append(f'unit law violated at (a={a}, c={c})')
    for a in range(r):
        for b in range(r):
            want = 1 if b == ring.dual[a] else 0
            if n[a, b, 0] != want:
                problems.append(
                    f'unit channel N[{a},{b},0] = {int(n[a, b, 0])} contradicts dual({a}) = {ring.dual[a]}')
    for a in range(r):
        if ring.dual[ring.dual[a]] != a:
            problems.append(f'dual map is not an involution at label {a}')
    return problems


def validate_ring(ring: FusionRing) -> RingReport:
    """Check the four fusion-ring axioms; failures carry the first bad index tuple.

    Conjugation builds ``C`` with ``c_jk = N_jk^0``, requires ``C^2 = 1`` (which
    forces ``C`` to be a permutation, the star map) and then checks that the
    star map is an automorphism, ``N_{j*k*}^{l*} = N_jk^l``.  The unit channel
    index is fixed to label 0 rather than searched.
    """
    r = ring.rank
    n = ring.n
    checks = []

    witness = None
    for j in range(r):
        for k in range(j + 1, r):
            bad = np.nonzero(n[j, k] != n[k, j])[0]
            if bad.size:
                witness = (j, k, int(bad[0]))
                break
        if witness:
            break
    checks.append(AxiomCheck('commutativity', witness is None, witness))

    witness = None
    for j in range(r):
        for k in range(r):
            for l in range(r):
                lhs = n[j, k] @ n[:, l, :]    # sum_m N_jk^m N_ml^n
                rhs = n[k, l] @ n[j, :, :]    # sum_m N_kl^m N_jm^n
                bad = np.nonzero(lhs != rhs)[0]
                if bad.size:
                    witness = (j, k, l, int(bad[0]))
                    break
            if witness:
                break
        if witness:
            break
    checks.append(AxiomCheck('associativity', witness is None, witness))

    neg = np.argwhere(n < 0)
    witness = tuple(int(i) for i in neg[0]) if neg.size else None
    checks.append(AxiomCheck('positivity', witness is None, witness))

    witness = None
    conj = n[:, :, 0]
    csq = conj @ conj
    bad = np.argwhere(csq != np.eye(r, dtype=np.int64))
    if bad.size:
        witness = tuple(int(i) for i in bad[0])
    else:
        star = [int(np.nonzero(conj[j])[0][0]) for j in range(r)]
        for j in range(r):
            for k in range(r):
                for l in range(r):
                    if n[star[j], star[k], star[l]] != n[j, k, l]:
                        witness = (j, k, l)
                        break
                if witness:
                    break
            if witness:
                break
    checks.append(AxiomCheck('conjugation', witness is None, witness))

    return RingReport(tuple(checks))


def power_decompose(ring: FusionRing, a: Label, k: int) -> tuple[int, ...]:
    """Coefficients of ``a^(tensor k)`` in the label basis, in exact integers."""
    a = ring.check_label(a)
    if k < 1:
        raise InputError('tensor power requires k >= 1; the empty product is label 0')
    r = ring.rank
    n = [[[int(ring.n[x, y, z]) for z in range(r)] for y in range(r)] for x in range(r)]
    coeffs = [0] * r
    coeffs[a] = 1
    for _ in range(k - 1):
        nxt = [0] * r
        for b in range(r):
            cb = coeffs[b]
            if cb:
                row = n[b][a]
                for c in range(r):
                    nxt[c] += cb * row[c]
        coeffs = nxt
    return tuple(coeffs)


def fp_dimensions(ring: FusionRing, tol: float = 1e-12, max_iter: int = 10000) -> np.ndarray:
    """Frobenius-Perron dimension of every label via power iteration.

    Iterates the fusion matrix ``N_a`` on the uniform start vector until the
    normalized iterates reach a fixed point; short limit cycles (non-primitive
    matrices) are resolved by averaging one full cycle before taking the
    Rayleigh quotient.  The unit's dimension is exactly 1.
    """
    r = ring.rank
    dims = np.ones(r)
    for a in range(1, r):
        m = ring.fusion_matrix(a).astype(float)
        v = np.full(r, 1.0 / np.sqrt(r))
        history = [v]
        for _ in range(max_iter):
            w = m @ v
            norm = np.linalg.norm(w)
            if norm == 0.0:
                dims[a] = 0.0
                break
            v = w / norm
            if np.linalg.norm(v - history[-1]) < tol:
                dims[a] = float(v @ (m @ v))
                break
            cycle = None
            for p in range(2, min(len(history), 8) + 1):
                if np.linalg.norm(v - history[-p]) < tol:
                    cycle = p
                    break
            if cycle is not None:
                u = v + sum(history[-k] for k in range(1, cycle))
                u = u / np.linalg.norm(u)
                dims[a] = float(u @ (m @ u))
                break
            history.append(v)
            if len(history) > 8:
                history.pop(0)
        else:
            raise NumericError(
                f'power iteration for label {a} did not converge in {max_iter} iterations')
    return dims
