"""Command-line interface.

Subcommands
-----------
``check``    run every coherence check and print per-check residuals
``smatrix``  print the S-matrix
``dims``     print quantum dimensions and the global dimension
``fuse``     print the fusion channels of two labels
``power``    print the decomposition of a tensor power
``basis``    enumerate a fusion-tree basis
``braid``    evaluate a braid word to a matrix
``knot``     normalized braid-closure invariant of a word
``compile``  brute-force search for a braid word approximating a unitary

The model argument is a JSON file path or ``--builtin <name>``.  Global flags
(per subcommand): ``--tolerance`` (default 1e-9) and ``--json``, which prints
exactly one JSON object ``{"command", "model", "results", "residuals",
"pass"}`` on stdout.

Exit codes: 0 success / all checks passed, 1 a check failed, 2 input or
schema error (diagnostic on stderr).  ``knot`` and ``compile`` refuse file
models that have not passed ``check`` since their last edit unless
``--unchecked`` is given; a passing ``check`` records a content digest in
``<model>.checked``.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from pathlib import Path

import numpy as np

from .braid import BraidWord, closure_invariant, compile_unitary, evaluate, parse_braid
from .errors import AnyonkitError, InputError
from .fusion_ring import fuse, power_decompose
from .fusion_space import enumerate_basis
from .models import builtin, load_model
from .mtc import AnyonModel, CHECK_ORDER, all_checks, s_matrix

__all__ = ['run_cli', 'main']


def _complex_json(z: complex) -> dict:
    return {'re': float(z.real), 'im': float(z.imag)}


def _matrix_json(m: np.ndarray) -> list:
    return [[_complex_json(m[i, j]) for j in range(m.shape[1])] for i in range(m.shape[0])]


def _format_complex(z: complex) -> str:
    return f'{z.real:.12g}{z.imag:+.12g}j'


def _print_matrix(m: np.ndarray):
    for i in range(m.shape[0]):
        print('  [' + ', '.join(_format_complex(m[i, j]) for j in range(m.shape[1])) + ']')


def _resolve_model(args) -> tuple[AnyonModel, str, Path | None]:
    if args.builtin is not None and args.model is not None:
        raise InputError('give either a model path or --builtin, not both')
    if args.builtin is not None:
        return builtin(args.builtin), f'builtin:{args.builtin}', None
    if args.model is None:
        raise InputError('a model path or --builtin <name> is required')
    path = Path(args.model)
    return load_model(path), str(path), path


def _emit(args, command: str, model_name: str, results: dict,
          residuals: dict, passed: bool):
    if args.json:
        payload = {'command': command, 'model': model_name, 'results': results,
                   'residuals': residuals, 'pass': passed}
        print(json.dumps(payload, sort_keys=True))


def _digest(path: Path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()


def _marker_path(path: Path) -> Path:
    return path.with_name(path.name + '.checked')


def _require_checked(path: Path | None, unchecked: bool):
    if path is None or unchecked:
        return
    marker = _marker_path(path)
    if not marker.exists() or marker.read_text(encoding='utf-8').strip() != _digest(path):
        raise InputError(
            f'{path} has not passed `check` since its last edit; '
            f'run `anyonkit check {path}` first or pass --unchecked')


def _cmd_check(args) -> int:
    model, name, path = _resolve_model(args)
    reports = all_checks(model, tol=args.tolerance)
    passed = all(reports[k].passed for k in CHECK_ORDER)
    if args.json:
        results = {}
        for key in CHECK_ORDER:
            rep = reports[key]
            entry = {'passed': rep.passed, 'residual': rep.residual}
            entry.update({k: v for k, v in rep.details.items()})
            results[key] = entry
        _emit(args, 'check', name, results,
              {key: reports[key].residual for key in CHECK_ORDER}, passed)
    else:
        for key in CHECK_ORDER:
            rep = reports[key]
            extra = ''
            if key == 'modularity':
                extra = f' |det|={rep.details["det_abs"]:.6g}'
            print(f'{key}: residual={rep.residual:.6g}{extra} '
                  f'{"pass" if rep.passed else "FAIL"}')
        print('all checks passed' if passed else 'CHECK FAILED')
    if args.figures:
        from .report import save_check_figures
        written = save_check_figures(reports, args.figures, name, args.tolerance)
        print('wrote ' + ', '.join(str(p) for p in written), file=sys.stderr)
    if path is not None:
        marker = _marker_path(path)
        if passed:
            marker.write_text(_digest(path) + '\n', encoding='utf-8')
        elif marker.exists():
            marker.unlink()
    return 0 if passed else 1


def _cmd_smatrix(args) -> int:
    model, name, _ = _resolve_model(args)
    smat = s_matrix(model)
    if args.json:
        _emit(args, 'smatrix', name,
              {'matrix': _matrix_json(smat.matrix),
               'normalization': smat.normalization}, {}, True)
    else:
        print(f'normalization D = {smat.normalization:.12g}')
        _print_matrix(smat.matrix)
    if args.figures:
        from .report import save_smatrix_figures
        written = save_smatrix_figures(smat, model.ring.labels, args.figures, name)
        print('wrote ' + ', '.join(str(p) for p in written), file=sys.stderr)
    return 0


def _cmd_dims(args) -> int:
    model, name, _ = _resolve_model(args)
    if args.json:
        _emit(args, 'dims', name,
              {'dims': [float(d) for d in model.qdim],
               'global_dim_sq': model.global_dim_sq}, {}, True)
    else:
        for label, dim in zip(model.ring.labels, model.qdim):
            print(f'{label}: {dim:.12g}')
        print(f'D^2: {model.global_dim_sq:.12g}')
    return 0


def _cmd_fuse(args) -> int:
    model, name, _ = _resolve_model(args)
    ring = model.ring
    a = ring.label_index(args.a)
    b = ring.label_index(args.b)
    channels = fuse(ring, a, b)
    if args.json:
        _emit(args, 'fuse', name,
              {'channels': {ring.labels[c]: m for c, m in channels.items()}}, {}, True)
    else:
        print(', '.join(f'{ring.labels[c]}:{m}' for c, m in channels.items()))
    return 0


def _cmd_power(args) -> int:
    model, name, _ = _resolve_model(args)
    ring = model.ring
    a = ring.label_index(args.a)
    coeffs = power_decompose(ring, a, args.k)
    if args.json:
        _emit(args, 'power', name, {'coefficients': list(coeffs)}, {}, True)
    else:
        print(', '.join(f'{label}:{c}' for label, c in zip(ring.labels, coeffs)))
    return 0


def _parse_names(text: str) -> list[str]:
    return [part for chunk in text.split(',') for part in chunk.split() if part]


def _cmd_basis(args) -> int:
    model, name, _ = _resolve_model(args)
    ring = model.ring
    charges = [ring.label_index(s) for s in _parse_names(args.charges)]
    total = ring.label_index(args.total)
    basis = enumerate_basis(model, charges, total)
    trees = [[ring.labels[e] for e in tree] for tree in basis.trees]
    if args.json:
        _emit(args, 'basis', name, {'dim': basis.dim, 'trees': trees}, {}, True)
    else:
        print('charges: ' + ' '.join(ring.labels[c] for c in basis.charges))
        print('total: ' + ring.labels[basis.total])
        print(f'dim: {basis.dim}')
        for tree in trees:
            print('tree: ' + (' '.join(tree) if tree else '-'))
    return 0


def _require_charge(args) -> str:
    if args.charge is None:
        raise InputError('--charge is required')
    return args.charge


def _cmd_braid(args) -> int:
    model, name, _ = _resolve_model(args)
    ring = model.ring
    word = parse_braid(args.word, args.n)
    charge = ring.label_index(_require_charge(args))
    if args.total is not None:
        total = ring.label_index(args.total)
        matrix = evaluate(model, word, charge, total)
        if args.json:
            _emit(args, 'braid', name,
                  {'total': ring.labels[total], 'matrix': _matrix_json(matrix)}, {}, True)
        else:
            print(f'sector {ring.labels[total]}: dim {matrix.shape[0]}')
            _print_matrix(matrix)
        return 0
    sectors = {}
    for t in range(ring.rank):
        if enumerate_basis(model, (charge,) * word.n, t).dim:
            sectors[ring.labels[t]] = evaluate(model, word, charge, t)
    if args.json:
        _emit(args, 'braid', name,
              {'sectors': {label: _matrix_json(m) for label, m in sectors.items()}},
              {}, True)
    else:
        for label, matrix in sectors.items():
            print(f'sector {label}: dim {matrix.shape[0]}')
            _print_matrix(matrix)
    return 0


def _cmd_knot(args) -> int:
    model, name, path = _resolve_model(args)
    _require_checked(path, args.unchecked)
    ring = model.ring
    word = parse_braid(args.word, args.n)
    charge = ring.label_index(_require_charge(args))
    result = closure_invariant(model, word, charge)
    if args.json:
        _emit(args, 'knot', name,
              {'value': _complex_json(result.value), 'raw': _complex_json(result.raw),
               'strands': result.strands, 'writhe': result.writhe,
               'kappa_plus': _complex_json(result.kappa_plus),
               'kappa_minus': _complex_json(result.kappa_minus)}, {}, True)
    else:
        print(f'V = {_format_complex(result.value)}')
        print(f'raw = {_format_complex(result.raw)}')
        print(f'strands = {result.strands}, writhe = {result.writhe}')
        print(f'kappa+ = {_format_complex(result.kappa_plus)}, '
              f'kappa- = {_format_complex(result.kappa_minus)}')
    return 0


def _parse_target(text: str) -> np.ndarray:
    try:
        values = [float(tok) for tok in text.split(',') if tok.strip() != '']
    except ValueError:
        raise InputError(f'--target must be comma-separated reals, got {text!r}') from None
    if not values or len(values) % 2:
        raise InputError('--target needs an even number of reals (re,im pairs)')
    pairs = len(values) // 2
    dim = int(round(pairs ** 0.5))
    if dim * dim != pairs:
        raise InputError(f'--target has {pairs} complex entries, not a square matrix')
    flat = np.array(values[0::2]) + 1j * np.array(values[1::2])
    return flat.reshape(dim, dim)


def _cmd_compile(args) -> int:
    model, name, path = _resolve_model(args)
    _require_checked(path, args.unchecked)
    ring = model.ring
    charge = ring.label_index(_require_charge(args))
    total = ring.label_index(args.total)
    target = _parse_target(args.target)
    word, distance = compile_unitary(model, charge, args.n, total, target, args.max_len)
    if args.json:
        _emit(args, 'compile', name,
              {'word': list(word.letters), 'length': len(word.letters),
               'distance': distance}, {}, True)
    else:
        print('word: ' + (' '.join(str(g) for g in word.letters) if word.letters else '-'))
        print(f'distance: {distance:.6g}')
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='anyonkit',
                                     description='anyon model checks, braids and knots')
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('model', nargs='?', default=None,
                        help='path to a JSON model file')
    common.add_argument('--builtin', metavar='NAME', default=None,
                        help='use a built-in model (trivial, fibonacci)')
    common.add_argument('--tolerance', type=float, default=1e-9, metavar='TOL',
                        help='numerical tolerance for checks (default 1e-9)')
    common.add_argument('--json', action='store_true',
                        help='print one machine-readable JSON object on stdout')

    sub = parser.add_subparsers(dest='command')

    p = sub.add_parser('check', parents=[common], help='run all coherence checks')
    p.add_argument('--figures', metavar='DIR', default=None,
                   help='also write residuals.csv and a residual chart to DIR')
    p.set_defaults(handler=_cmd_check)

    p = sub.add_parser('smatrix', parents=[common], help='print the S-matrix')
    p.add_argument('--figures', metavar='DIR', default=None,
                   help='also write the S-matrix as CSV and a heatmap to DIR')
    p.set_defaults(handler=_cmd_smatrix)

    p = sub.add_parser('dims', parents=[common], help='print quantum dimensions')
    p.set_defaults(handler=_cmd_dims)

    p = sub.add_parser('fuse', parents=[common], help='fusion channels of two labels')
    p.add_argument('a')
    p.add_argument('b')
    p.set_defaults(handler=_cmd_fuse)

    p = sub.add_parser('power', parents=[common], help='decompose a tensor power')
    p.add_argument('a')
    p.add_argument('k', type=int)
    p.set_defaults(handler=_cmd_power)

    p = sub.add_parser('basis', parents=[common], help='enumerate a fusion-tree basis')
    p.add_argument('--charges', required=True, metavar='NAMES',
                   help='comma- or space-separated charge labels')
    p.add_argument('--total', required=True, metavar='NAME')
    p.set_defaults(handler=_cmd_basis)

    p = sub.add_parser('braid', parents=[common], help='evaluate a braid word')
    p.add_argument('-n', type=int, required=True, help='strand count')
    p.add_argument('-w', '--word', required=True, metavar='WORD',
                   help='whitespace-separated signed generator indices')
    p.add_argument('--charge', metavar='NAME', default=None)
    p.add_argument('--total', metavar='NAME', default=None)
    p.set_defaults(handler=_cmd_braid)

    p = sub.add_parser('knot', parents=[common],
                       help='braid-closure knot invariant of a word')
    p.add_argument('-n', type=int, required=True, help='strand count')
    p.add_argument('-w', '--word', required=True, metavar='WORD')
    p.add_argument('--charge', metavar='NAME', default=None)
    p.add_argument('--unchecked', action='store_true',
                   help='skip the requirement that the model file passed `check`')
    p.set_defaults(handler=_cmd_knot)

    p = sub.add_parser('compile', parents=[common],
                       help='search braid words approximating a unitary')
    p.add_argument('-n', type=int, required=True, help='strand count')
    p.add_argument('--charge', metavar='NAME', default=None)
    p.add_argument('--total', metavar='NAME', required=True)
    p.add_argument('--target', required=True, metavar='REALS',
                   help='row-major re,im pairs of the target matrix, comma-separated')
    p.add_argument('--max-len', type=int, required=True, metavar='L')
    p.add_argument('--unchecked', action='store_true',
                   help='skip the requirement that the model file passed `check`')
    p.set_defaults(handler=_cmd_compile)

    return parser


def run_cli(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 2
    if getattr(args, 'command', None) is None:
        parser.print_usage(sys.stderr)
        return 2
    try:
        return args.handler(args)
    except (AnyonkitError, FileNotFoundError, IsADirectoryError, PermissionError,
            np.linalg.LinAlgError) as exc:
        print(f'error: {exc}', file=sys.stderr)
        return 2


def main():
    sys.exit(run_cli())


if __name__ == '__main__':
    main()
