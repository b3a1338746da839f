"""Anyon-model data (F/R symbols, twists) and its coherence checks.

An :class:`AnyonModel` bundles a multiplicity-free fusion ring with an
F-symbol table, an R-symbol table and per-label twist phases, plus the
quantum dimensions derived from the ring.  All checks are pure functions
returning :class:`CheckReport` values; nothing here mutates the model.

The skeletal conventions are:

* ``F[a,b,c,d,e,f]`` is the coefficient of the recoupling ``(ab)c -> a(bc)``
  with total charge ``d``, ``e`` the ``ab`` channel and ``f`` the ``bc``
  channel.  Unit isomorphisms are identities, so every slot involving the
  unit equals 1.
* ``R[a,b,c]`` is the exchange phase of ``a`` past ``b`` in channel ``c``.
* Cups and caps never appear as data; they enter only through the quantum
  trace weights ``d_t``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Mapping

import numpy as np

from .errors import DataError, InputError, SchemaError
from .fusion_ring import FusionRing, fp_dimensions, structure_problems, validate_ring

__all__ = ['FSymbolTable', 'RSymbolTable', 'AnyonModel', 'SMatrix', 'CheckReport',
           'f_channels', 'f_block', 'check_pentagon', 'check_triangle', 'check_hexagon',
           'check_ribbon', 's_matrix', 'check_modularity', 'quantum_trace',
           'check_unitarity', 'all_checks', 'CHECK_ORDER']

DEFAULT_TOL = 1e-9


@dataclass(frozen=True)
class FSymbolTable:
    """Map ``(a, b, c, d, e, f) -> complex`` over admissible recoupling slots."""

    entries: dict[tuple[int, int, int, int, int, int], complex]


@dataclass(frozen=True)
class RSymbolTable:
    """Map ``(a, b, c) -> complex`` over admissible exchange channels."""

    entries: dict[tuple[int, int, int], complex]


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one coherence check.

    ``residual`` is the maximal absolute deviation found, ``worst`` the index
    tuple where it occurred and ``details`` optional named sub-results.
    """

    name: str
    residual: float
    passed: bool
    worst: tuple | None = None
    details: dict = field(default_factory=dict)


@dataclass(frozen=True)
class SMatrix:
    """Normalized S-matrix ``s = s_tilde / D`` with the normalization kept alongside."""

    matrix: np.ndarray
    normalization: float


@dataclass(frozen=True, eq=False)
class AnyonModel:
    """A verified-shape anyon model over a multiplicity-free fusion ring.

    Use :meth:`from_data` to construct; it fills unit-label defaults, enforces
    table completeness and derives the quantum dimensions.  Instances are
    immutable and safe to share between threads.
    """

    ring: FusionRing
    f: FSymbolTable
    r: RSymbolTable
    theta: tuple[complex, ...]
    qdim: np.ndarray = field(repr=False)
    global_dim_sq: float

    @classmethod
    def from_data(cls, ring: FusionRing,
                  f_entries: Mapping[tuple[int, int, int, int, int, int], complex],
                  r_entries: Mapping[tuple[int, int, int], complex],
                  theta: tuple[complex, ...] | list[complex]) -> 'AnyonModel':
        problems = structure_problems(ring)
        if problems:
            raise SchemaError('; '.join(problems))
        report = validate_ring(ring)
        if not report.all_passed:
            failed = ', '.join(c.name for c in report.checks if not c.passed)
            raise SchemaError(f'fusion ring fails axiom(s): {failed}')
        if int(ring.n.max()) > 1:
            worst = tuple(int(i) for i in np.argwhere(ring.n > 1)[0])
            raise SchemaError(f'fusion multiplicity N{worst} > 1 is not supported')

        rank = ring.rank
        theta = tuple(complex(t) for t in theta)
        if len(theta) != rank:
            raise SchemaError(f'theta must list {rank} phases, got {len(theta)}')
        if abs(theta[0] - 1.0) > DEFAULT_TOL:
            raise SchemaError('the unit twist must be 1')
        for a, t in enumerate(theta):
            if abs(abs(t) - 1.0) > DEFAULT_TOL:
                raise SchemaError(f'twist of label {a} must have unit modulus, got |{t}|')

        f_table = {}
        for key, value in f_entries.items():
            key = tuple(int(i) for i in key)
            if len(key) != 6 or any(not 0 <= i < rank for i in key):
                raise SchemaError(f'F entry {key} out of range')
            if not _f_admissible(ring, *key):
                if value != 0:
                    raise SchemaError(f'F entry {key} is inadmissible but nonzero')
                continue
            if key in f_table:
                raise SchemaError(f'duplicate F entry {key}')
            f_table[key] = complex(value)
        r_table = {}
        for key, value in r_entries.items():
            key = tuple(int(i) for i in key)
            if len(key) != 3 or any(not 0 <= i < rank for i in key):
                raise SchemaError(f'R entry {key} out of range')
            if not ring.is_admissible(*key):
                if value != 0:
                    raise SchemaError(f'R entry {key} is inadmissible but nonzero')
                continue
            if key in r_table:
                raise SchemaError(f'duplicate R entry {key}')
            r_table[key] = complex(value)

        for key in _admissible_f_slots(ring):
            if key not in f_table:
                a, b, c, _, _, _ = key
                if a == 0 or b == 0 or c == 0:
                    f_table[key] = 1.0 + 0.0j
                else:
                    raise SchemaError(f'missing admissible F entry {key}')
        for a, b in itertools.product(range(rank), repeat=2):
            for c in range(rank):
                if not ring.is_admissible(a, b, c):
                    continue
                if (a, b, c) not in r_table:
                    if a == 0 or b == 0:
                        r_table[(a, b, c)] = 1.0 + 0.0j
                    else:
                        raise SchemaError(f'missing admissible R entry {(a, b, c)}')

        qdim = fp_dimensions(ring)
        return cls(ring=ring, f=FSymbolTable(f_table), r=RSymbolTable(r_table),
                   theta=theta, qdim=qdim, global_dim_sq=float(np.sum(qdim ** 2)))

    @property
    def rank(self) -> int:
        return self.ring.rank

    def f_symbol(self, a: int, b: int, c: int, d: int, e: int, f: int) -> complex:
        """F coefficient; 0 on inadmissible slots, error on missing admissible ones."""
        if not _f_admissible(self.ring, a, b, c, d, e, f):
            return 0.0 + 0.0j
        try:
            return self.f.entries[(a, b, c, d, e, f)]
        except KeyError:
            raise DataError(f'missing admissible F entry {(a, b, c, d, e, f)}') from None

    def r_symbol(self, a: int, b: int, c: int) -> complex:
        """R phase; 0 on inadmissible channels, error on missing admissible ones."""
        if not self.ring.is_admissible(a, b, c):
            return 0.0 + 0.0j
        try:
            return self.r.entries[(a, b, c)]
        except KeyError:
            raise DataError(f'missing admissible R entry {(a, b, c)}') from None


def _f_admissible(ring: FusionRing, a, b, c, d, e, f) -> bool:
    n = ring.n
    return bool(n[a, b, e] and n[e, c, d] and n[b, c, f] and n[a, f, d])


def _admissible_f_slots(ring: FusionRing):
    rank = ring.rank
    for key in itertools.product(range(rank), repeat=6):
        if _f_admissible(ring, *key):
            yield key


def f_channels(ring: FusionRing, a: int, b: int, c: int, d: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Sorted admissible row channels ``e`` and column channels ``f`` of F[a,b,c -> d]."""
    n = ring.n
    rank = ring.rank
    es = tuple(e for e in range(rank) if n[a, b, e] and n[e, c, d])
    fs = tuple(f for f in range(rank) if n[b, c, f] and n[a, f, d])
    return es, fs


def f_block(model: AnyonModel, a: int, b: int, c: int, d: int) -> tuple[np.ndarray, tuple[int, ...], tuple[int, ...]]:
    """Assemble the F-matrix of ``(a, b, c) -> d`` over its admissible channels."""
    es, fs = f_channels(model.ring, a, b, c, d)
    block = np.zeros((len(es), len(fs)), dtype=complex)
    for i, e in enumerate(es):
        for j, f in enumerate(fs):
            block[i, j] = model.f_symbol(a, b, c, d, e, f)
    return block, es, fs


def check_pentagon(model: AnyonModel, tol: float = DEFAULT_TOL) -> CheckReport:
    """Verify the multiplicity-free pentagon identity over all index tuples.

    For every total ``e`` and objects ``a, b, c, d``::

        F[f,c,d|e][g,l] * F[a,b,l|e][f,k]
            = sum_h F[a,b,c|g][f,h] * F[a,h,d|e][g,k] * F[b,c,d|k][h,l]

    Inadmissible slots count as 0; index tuples where both sides vanish by
    admissibility are skipped.
    """
    ring = model.ring
    n = ring.n
    rank = ring.rank
    fs = model.f_symbol
    worst = None
    residual = 0.0
    for a, b, c, d, e in itertools.product(range(rank), repeat=5):
        for f in range(rank):
            if not n[a, b, f]:
                continue
            for g in range(rank):
                if not n[g, d, e]:
                    continue
                for k in range(rank):
                    if not n[a, k, e]:
                        continue
                    for l in range(rank):
                        if not n[c, d, l]:
                            continue
                        lhs = fs(f, c, d, e, g, l) * fs(a, b, l, e, f, k)
                        rhs = sum(fs(a, b, c, g, f, h) * fs(a, h, d, e, g, k) * fs(b, c, d, k, h, l)
                                  for h in range(rank))
                        dev = abs(lhs - rhs)
                        if dev > residual:
                            residual = dev
                            worst = (a, b, c, d, e, f, g, k, l)
    return CheckReport('pentagon', residual, residual <= tol, worst)


def check_triangle(model: AnyonModel, tol: float = DEFAULT_TOL) -> CheckReport:
    """Every admissible F slot involving the unit among (a, b, c) must equal 1."""
    worst = None
    residual = 0.0
    for key, value in model.f.entries.items():
        a, b, c = key[:3]
        if a == 0 or b == 0 or c == 0:
            dev = abs(value - 1.0)
            if dev > residual:
                residual = dev
                worst = key
    return CheckReport('triangle', residual, residual <= tol, worst)


def _hexagon_residual(model: AnyonModel, conjugate: bool) -> tuple[float, tuple | None]:
    ring = model.ring
    n = ring.n
    rank = ring.rank
    fs = model.f_symbol

    def rs(x, y, z):
        v = model.r_symbol(x, y, z)
        return v.conjugate() if conjugate else v

    worst = None
    residual = 0.0
    for a, b, c, d in itertools.product(range(rank), repeat=4):
        for e in range(rank):
            if not (n[c, a, e] and n[e, b, d]):
                continue
            for g in range(rank):
                if not (n[c, b, g] and n[a, g, d]):
                    continue
                lhs = rs(c, a, e) * fs(a, c, b, d, e, g) * rs(c, b, g)
                rhs = sum(fs(c, a, b, d, e, f) * rs(c, f, d) * fs(a, b, c, d, f, g)
                          for f in range(rank))
                dev = abs(lhs - rhs)
                if dev > residual:
                    residual = dev
                    worst = (a, b, c, d, e, g)
    return residual, worst


def check_hexagon(model: AnyonModel, tol: float = DEFAULT_TOL) -> CheckReport:
    """Verify both hexagon identities (with R and with its inverse).

    The convention, pinned by the built-in golden model, is::

        R[c,a|e] * F[a,c,b|d][e,g] * R[c,b|g]
            = sum_f F[c,a,b|d][e,f] * R[c,f|d] * F[a,b,c|d][f,g]

    and the same with every R conjugated (R-inverse, since |R| = 1).  The
    report carries each orientation's residual so a model satisfying only one
    of them is diagnosed rather than silently accepted.
    """
    res_r, worst_r = _hexagon_residual(model, conjugate=False)
    res_c, worst_c = _hexagon_residual(model, conjugate=True)
    if res_r >= res_c:
        residual, worst = res_r, worst_r
    else:
        residual, worst = res_c, worst_c
    return CheckReport('hexagon', residual, residual <= tol, worst,
                       details={'r_form': res_r, 'r_inverse_form': res_c})


def check_ribbon(model: AnyonModel, tol: float = DEFAULT_TOL) -> CheckReport:
    """Check the balancing identity and twist/dual compatibility.

    For every admissible ``(a, b, c)``: ``R[b,a|c] * R[a,b|c] = theta_c /
    (theta_a * theta_b)``, and for every label ``theta_{a*} = theta_a``.
    """
    ring = model.ring
    rank = ring.rank
    theta = model.theta
    worst = None
    residual = 0.0
    for a, b, c in itertools.product(range(rank), repeat=3):
        if not ring.is_admissible(a, b, c):
            continue
        dev = abs(model.r_symbol(b, a, c) * model.r_symbol(a, b, c)
                  - theta[c] / (theta[a] * theta[b]))
        if dev > residual:
            residual = dev
            worst = (a, b, c)
    dual_residual = 0.0
    for a in range(rank):
        dev = abs(theta[ring.dual[a]] - theta[a])
        if dev > dual_residual:
            dual_residual = dev
            if dev > residual:
                worst = (a,)
    residual = max(residual, dual_residual)
    return CheckReport('ribbon', residual, residual <= tol, worst,
                       details={'dual_twist': dual_residual})


def s_matrix(model: AnyonModel) -> SMatrix:
    """The S-matrix from dimensions, twists and structure constants.

    ``s_tilde[i,j] = (1 / theta_i theta_j) sum_k N[i, j*]^k d_k theta_k`` and
    ``s = s_tilde / D`` with ``D = sqrt(sum_a d_a^2)``.
    """
    ring = model.ring
    rank = ring.rank
    theta = model.theta
    qdim = model.qdim
    st = np.zeros((rank, rank), dtype=complex)
    for i, j in itertools.product(range(rank), repeat=2):
        acc = 0.0 + 0.0j
        for k in range(rank):
            m = int(ring.n[i, ring.dual[j], k])
            if m:
                acc += m * qdim[k] * theta[k]
        st[i, j] = acc / (theta[i] * theta[j])
    d_global = float(np.sqrt(model.global_dim_sq))
    return SMatrix(st / d_global, d_global)


def check_modularity(model: AnyonModel, tol: float = DEFAULT_TOL) -> CheckReport:
    """Report S-matrix symmetry and invertibility (nondegenerate braiding)."""
    s = s_matrix(model).matrix
    sym_residual = float(np.abs(s - s.T).max())
    det_abs = float(abs(np.linalg.det(s)))
    symmetric = sym_residual <= tol
    invertible = det_abs > tol
    return CheckReport('modularity', sym_residual, symmetric and invertible,
                       details={'symmetric': symmetric, 'invertible': invertible,
                                'det_abs': det_abs})


def quantum_trace(model: AnyonModel, blocks: Mapping[int, np.ndarray]) -> complex:
    """Dimension-weighted trace ``sum_t d_t tr(block_t)`` over total-charge sectors."""
    total = 0.0 + 0.0j
    for label, block in blocks.items():
        label = model.ring.check_label(label)
        block = np.asarray(block)
        if block.ndim != 2 or block.shape[0] != block.shape[1]:
            raise InputError(f'block for sector {label} is not square: shape {block.shape}')
        total += model.qdim[label] * np.trace(block)
    return complex(total)


def check_unitarity(model: AnyonModel, tol: float = DEFAULT_TOL) -> CheckReport:
    """Every F-matrix must be unitary and every R and twist a unit phase."""
    rank = model.rank
    worst = None
    residual = 0.0
    for a, b, c, d in itertools.product(range(rank), repeat=4):
        block, es, _ = f_block(model, a, b, c, d)
        if block.size == 0:
            continue
        dev = float(np.abs(block @ block.conj().T - np.eye(len(es))).max())
        if dev > residual:
            residual = dev
            worst = ('F', a, b, c, d)
    for key, value in model.r.entries.items():
        dev = abs(abs(value) - 1.0)
        if dev > residual:
            residual = dev
            worst = ('R',) + key
    for a, t in enumerate(model.theta):
        dev = abs(abs(t) - 1.0)
        if dev > residual:
            residual = dev
            worst = ('theta', a)
    return CheckReport('unitarity', residual, residual <= tol, worst)


CHECK_ORDER = ('ring', 'triangle', 'pentagon', 'hexagon', 'ribbon', 'unitarity', 'modularity')


def all_checks(model: AnyonModel, tol: float = DEFAULT_TOL) -> dict[str, CheckReport]:
    """Run every check in a fixed order, including the ring axioms as a report entry."""
    ring_report = validate_ring(model.ring)
    ring_check = CheckReport(
        'ring', 0.0 if ring_report.all_passed else 1.0, ring_report.all_passed,
        next((c.witness for c in ring_report.checks if not c.passed), None),
        details={c.name: c.passed for c in ring_report.checks})
    reports = {'ring': ring_check}
    reports['triangle'] = check_triangle(model, tol)
    reports['pentagon'] = check_pentagon(model, tol)
    reports['hexagon'] = check_hexagon(model, tol)
    reports['ribbon'] = check_ribbon(model, tol)
    reports['unitarity'] = check_unitarity(model, tol)
    reports['modularity'] = check_modularity(model, tol)
    return reports
