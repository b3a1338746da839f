"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run with ``pytest tests/test_acceptance.py -q -s`` to see the lines live.
"""

import cmath
import json
import math
import subprocess
import sys

import numpy as np
import pytest

from anyonkit import (BraidWord, all_checks, braid_generator, builtin,
                      check_hexagon, check_modularity, check_pentagon, check_ribbon,
                      check_triangle, check_unitarity, closure_invariant,
                      compile_unitary, enumerate_basis, evaluate, parse_braid,
                      power_decompose, s_matrix, save_model, validate_ring)
from anyonkit.cli import run_cli

from conftest import (GOLDEN, fib_oracle, fibonacci_mutant, make_fermion_model,
                      make_semion_model)


def _verdict(number: int, name: str, ok: bool):
    print(f'criterion {number} ({name}): {"PASS" if ok else "FAIL"}')
    assert ok, f'criterion {number} ({name}) failed'


def test_criterion_1_fibonacci_golden_values():
    model = builtin('fibonacci')
    sqrt_golden = math.sqrt(GOLDEN)
    deviations = [
        abs(model.f.entries[(1, 1, 1, 1, 0, 0)] - 1 / GOLDEN),
        abs(model.f.entries[(1, 1, 1, 1, 0, 1)] - 1 / sqrt_golden),
        abs(model.f.entries[(1, 1, 1, 1, 1, 0)] - 1 / sqrt_golden),
        abs(model.f.entries[(1, 1, 1, 1, 1, 1)] + 1 / GOLDEN),
        abs(model.r.entries[(1, 1, 0)] - cmath.exp(-4j * cmath.pi / 5)),
        abs(model.r.entries[(1, 1, 1)] - cmath.exp(3j * cmath.pi / 5)),
        abs(model.theta[1] - cmath.exp(4j * cmath.pi / 5)),
        abs(model.qdim[0] - 1.0),
        abs(model.qdim[1] - GOLDEN),
        abs(model.global_dim_sq - (2.0 + GOLDEN)),
    ]
    smat = s_matrix(model).matrix
    expected = np.array([[1.0, GOLDEN], [GOLDEN, -1.0]]) / math.sqrt(2.0 + GOLDEN)
    deviations.append(float(np.abs(smat - expected).max()))
    ok = max(deviations) < 1e-12
    denominator = GOLDEN ** 2 + 1.0
    printed_inverse = math.sqrt(2.0 + GOLDEN) * np.array(
        [[1.0 / denominator, GOLDEN / denominator],
         [GOLDEN / denominator, -1.0 / denominator]])
    ok = ok and float(np.abs(smat @ printed_inverse - np.eye(2)).max()) < 1e-9
    _verdict(1, 'fibonacci golden values', ok)


def test_criterion_2_coherence_suite():
    ok = True
    for model in (builtin('fibonacci'), builtin('trivial')):
        for check in (check_pentagon, check_triangle, check_hexagon, check_ribbon,
                      check_unitarity):
            ok = ok and check(model).residual < 1e-10
    targeted = [
        (check_pentagon, fibonacci_mutant(flip_f=True)),
        (check_hexagon, fibonacci_mutant(conj_r=True)),
        (check_ribbon, fibonacci_mutant(theta_one=True)),
    ]
    for check, mutant in targeted:
        report = check(mutant)
        ok = ok and (not report.passed) and report.residual > 1e-2
    _verdict(2, 'coherence suite and mutants', ok)


def test_criterion_3_fusion_ring_suite():
    fib_ring = builtin('fibonacci').ring
    trivial_ring = builtin('trivial').ring
    ok = validate_ring(fib_ring).all_passed and validate_ring(trivial_ring).all_passed
    import anyonkit
    mutated = np.array(fib_ring.n)
    mutated[1, 1, 0] = 0
    mutant = anyonkit.FusionRing(('1', 'tau'), (0, 1), mutated)
    report = validate_ring(mutant)
    ok = ok and not report['conjugation'].passed
    for k in range(1, 31):
        ok = ok and power_decompose(fib_ring, 1, k) == (fib_oracle(k - 1), fib_oracle(k))
    _verdict(3, 'fusion ring axioms and tau powers', ok)


def test_criterion_4_dimension_law():
    model = builtin('fibonacci')
    ok = True
    for n in range(1, 21):
        dim = enumerate_basis(model, (1,) * n, 1).dim
        ok = ok and dim == fib_oracle(n)
        ok = ok and dim == power_decompose(model.ring, 1, n)[1]
    _verdict(4, 'fusion-tree dimension law', ok)


def test_criterion_5_braid_representation_properties():
    model = builtin('fibonacci')
    ok = True
    for n in range(2, 9):
        for total in range(2):
            basis = enumerate_basis(model, (1,) * n, total)
            if basis.dim == 0:
                continue
            gens = [braid_generator(model, basis, i) for i in range(1, n)]
            eye = np.eye(basis.dim)
            for i, gen in enumerate(gens, start=1):
                ok = ok and np.abs(gen @ gen.conj().T - eye).max() < 1e-9
                cancel = evaluate(model, BraidWord(n, (i, -i)), 1, total)
                ok = ok and np.abs(cancel - eye).max() < 1e-12
            for i in range(len(gens) - 1):
                lhs = gens[i] @ gens[i + 1] @ gens[i]
                rhs = gens[i + 1] @ gens[i] @ gens[i + 1]
                ok = ok and np.abs(lhs - rhs).max() < 1e-12
            for i in range(len(gens)):
                for j in range(i + 2, len(gens)):
                    ok = ok and np.abs(gens[i] @ gens[j] - gens[j] @ gens[i]).max() < 1e-12
    _verdict(5, 'braid representation properties', ok)


def test_criterion_6_knot_invariant_properties():
    model = builtin('fibonacci')
    ok = True
    for text, n in (('', 1), ('1', 2), ('1 2', 3)):
        value = closure_invariant(model, parse_braid(text, n), 1).value
        ok = ok and abs(value - 1.0) < 1e-9

    rng = np.random.default_rng(2026)
    for _ in range(200):
        n = int(rng.integers(2, 5))
        length = int(rng.integers(0, 9))
        letters = tuple(int(g) for g in
                        rng.integers(1, n, size=length) * rng.choice([-1, 1], size=length))
        word = BraidWord(n, letters)
        base = closure_invariant(model, word, 1).value
        k = int(rng.integers(1, 5))
        conj = tuple(int(g) for g in
                     rng.integers(1, n, size=k) * rng.choice([-1, 1], size=k))
        conjugated = BraidWord(n, conj + letters + tuple(-g for g in reversed(conj)))
        ok = ok and abs(closure_invariant(model, conjugated, 1).value - base) < 1e-9
        sign = 1 if rng.integers(0, 2) else -1
        stabilized = BraidWord(n + 1, letters + (sign * n,))
        ok = ok and abs(closure_invariant(model, stabilized, 1).value - base) < 1e-9
        mirrored = closure_invariant(model, word.mirror(), 1).value
        ok = ok and abs(mirrored - base.conjugate()) < 1e-9

    figure_eight = closure_invariant(model, parse_braid('1 -2 1 -2', 3), 1).value
    ok = ok and abs(figure_eight.imag) < 1e-9
    trefoil = closure_invariant(model, parse_braid('1 1 1', 2), 1).value
    ok = ok and abs(trefoil.imag) > 0.1 and abs(trefoil - 1.0) > 0.1
    _verdict(6, 'knot invariant properties', ok)


def test_criterion_7_compiler():
    model = builtin('fibonacci')
    basis = enumerate_basis(model, (1, 1, 1), 1)
    ok = True

    target = braid_generator(model, basis, 1)
    word, distance = compile_unitary(model, 1, 3, 1, target, 3)
    ok = ok and distance < 1e-12 and len(word.letters) == 1

    target = evaluate(model, parse_braid('1 2 1', 3), 1, 1)
    word, distance = compile_unitary(model, 1, 3, 1, target, 4)
    ok = ok and distance < 1e-12 and len(word.letters) == 3

    phase_flip = np.diag([1.0, -1.0]).astype(complex)
    distances = [compile_unitary(model, 1, 3, 1, phase_flip, L)[1]
                 for L in (4, 6, 8, 10)]
    ok = ok and all(b <= a for a, b in zip(distances, distances[1:]))

    for letters in ((1,), (2, -1), (1, 2, 1), (-1, -1, 2, -1)):
        target = evaluate(model, BraidWord(3, letters), 1, 1)
        pruned_word, pruned = compile_unitary(model, 1, 3, 1, target, 6, prune=True)
        full_word, full = compile_unitary(model, 1, 3, 1, target, 6, prune=False)
        ok = ok and abs(pruned - full) < 1e-12
        ok = ok and len(pruned_word.letters) == len(full_word.letters)
    _verdict(7, 'brute-force compiler', ok)


def test_criterion_8_cli_contract(tmp_path, capsys):
    fib_path = tmp_path / 'fib.json'
    save_model(builtin('fibonacci'), fib_path)
    fermion_path = tmp_path / 'fermion.json'
    save_model(make_fermion_model(), fermion_path)
    bad_path = tmp_path / 'broken.json'
    bad_path.write_text('{"labels": ', encoding='utf-8')

    matrix = [
        (['check', '--builtin', 'fibonacci'], 0),
        (['check', '--builtin', 'trivial'], 0),
        (['check', str(fib_path)], 0),
        (['check', str(fermion_path)], 1),
        (['check', '--builtin', 'fibonacci', '--tolerance', '1e-20'], 1),
        (['smatrix', '--builtin', 'fibonacci'], 0),
        (['dims', '--builtin', 'fibonacci'], 0),
        (['fuse', '--builtin', 'fibonacci', 'tau', 'tau'], 0),
        (['power', '--builtin', 'fibonacci', 'tau', '5'], 0),
        (['basis', '--builtin', 'fibonacci', '--charges', 'tau,tau', '--total', '1'], 0),
        (['braid', '--builtin', 'fibonacci', '-n', '3', '-w', '1 2 1',
          '--charge', 'tau'], 0),
        (['knot', '--builtin', 'fibonacci', '-n', '2', '-w', '1 1 1',
          '--charge', 'tau'], 0),
        (['knot', str(fib_path), '-n', '2', '-w', '1', '--charge', 'tau'], 0),
        (['compile', '--builtin', 'fibonacci', '-n', '3', '--charge', 'tau',
          '--total', 'tau', '--target', '1,0,0,0,0,0,1,0', '--max-len', '2'], 0),
        (['braid', '--builtin', 'fibonacci', '-n', '3', '-w', '1 2 0',
          '--charge', 'tau'], 2),
        (['check', '--builtin', 'ising'], 2),
        (['fuse', '--builtin', 'fibonacci', 'tau', 'sigma'], 2),
        (['check', str(bad_path)], 2),
        (['knot', str(fermion_path), '-n', '2', '-w', '1', '--charge', 'psi'], 2),
        (['nosuchcommand'], 2),
    ]
    ok = True
    for argv, expected in matrix:
        code = run_cli(argv)
        capsys.readouterr()
        ok = ok and code == expected

    argv = [sys.executable, '-m', 'anyonkit', 'check', '--builtin', 'fibonacci',
            '--json']
    first = subprocess.run(argv, capture_output=True, check=True).stdout
    second = subprocess.run(argv, capture_output=True, check=True).stdout
    ok = ok and first == second and json.loads(first)['pass'] is True
    _verdict(8, 'CLI exit codes and byte-stable JSON', ok)


def test_criterion_9_negative_modularity(tmp_path, capsys):
    fermion = make_fermion_model()
    report = check_modularity(fermion)
    ok = report.details['det_abs'] < 1e-12 and not report.passed
    others = {k: v for k, v in all_checks(fermion).items() if k != 'modularity'}
    ok = ok and all(r.passed for r in others.values())

    path = tmp_path / 'fermion.json'
    save_model(fermion, path)
    code = run_cli(['check', str(path)])
    capsys.readouterr()
    ok = ok and code == 1

    semion = make_semion_model()
    ok = ok and check_modularity(semion).details['invertible']
    _verdict(9, 'negative modularity fixtures', ok)
