"""Built-in models and the JSON model-file format.

A model file is a single JSON object with members:

* ``labels``: array of display names; index 0 is the unit.
* ``dual``: array of label indices, the conjugation map.
* ``fusion``: array of ``[a, b, c, N]`` quadruples; omitted quadruples mean 0.
* ``F``: array of ``{a, b, c, d, e, f, re, im}`` records.
* ``R``: array of ``{a, b, c, re, im}`` records.
* ``theta``: array of ``{re, im}``, one per label; entry 0 must be 1.

F and R records involving the unit label may be omitted; they default to 1 on
their admissible slots.  Quantum dimensions are always derived from the ring,
never read from the file.
"""

from __future__ import annotations

import cmath
import json
import math
from pathlib import Path

import numpy as np

from .errors import InputError, ParseError, SchemaError
from .fusion_ring import FusionRing
from .mtc import AnyonModel

__all__ = ['BUILTIN_NAMES', 'builtin', 'load_model', 'save_model',
           'model_to_dict', 'model_from_dict']

BUILTIN_NAMES = ('trivial', 'fibonacci')

_GOLDEN = (1.0 + math.sqrt(5.0)) / 2.0


def _fibonacci_model() -> AnyonModel:
    n = np.zeros((2, 2, 2), dtype=np.int64)
    n[0, 0, 0] = 1
    n[0, 1, 1] = 1
    n[1, 0, 1] = 1
    n[1, 1, 0] = 1
    n[1, 1, 1] = 1
    ring = FusionRing(('1', 'tau'), (0, 1), n)
    sqrt_golden = math.sqrt(_GOLDEN)
    f_entries = {
        (1, 1, 1, 1, 0, 0): 1.0 / _GOLDEN,
        (1, 1, 1, 1, 0, 1): 1.0 / sqrt_golden,
        (1, 1, 1, 1, 1, 0): 1.0 / sqrt_golden,
        (1, 1, 1, 1, 1, 1): -1.0 / _GOLDEN,
        (1, 1, 1, 0, 1, 1): 1.0,
    }
    r_entries = {
        (1, 1, 0): cmath.exp(-4j * cmath.pi / 5.0),
        (1, 1, 1): cmath.exp(3j * cmath.pi / 5.0),
    }
    theta = (1.0 + 0.0j, cmath.exp(4j * cmath.pi / 5.0))
    return AnyonModel.from_data(ring, f_entries, r_entries, theta)


def _trivial_model() -> AnyonModel:
    n = np.ones((1, 1, 1), dtype=np.int64)
    ring = FusionRing(('1',), (0,), n)
    return AnyonModel.from_data(ring, {}, {}, (1.0 + 0.0j,))


def builtin(name: str) -> AnyonModel:
    """Return a built-in model by name ('trivial' or 'fibonacci')."""
    if name == 'fibonacci':
        return _fibonacci_model()
    if name == 'trivial':
        return _trivial_model()
    raise InputError(f'unknown model {name!r}; available: {", ".join(BUILTIN_NAMES)}')


def _complex_record(value: complex) -> dict:
    return {'re': float(value.real), 'im': float(value.imag)}


def model_to_dict(model: AnyonModel) -> dict:
    """Serialize a model to the JSON document structure, deterministically ordered."""
    ring = model.ring
    fusion = [[a, b, c, int(ring.n[a, b, c])]
              for a in range(ring.rank)
              for b in range(ring.rank)
              for c in range(ring.rank)
              if ring.n[a, b, c]]
    f_records = []
    for key in sorted(model.f.entries):
        a, b, c, d, e, f = key
        record = {'a': a, 'b': b, 'c': c, 'd': d, 'e': e, 'f': f}
        record.update(_complex_record(model.f.entries[key]))
        f_records.append(record)
    r_records = []
    for key in sorted(model.r.entries):
        a, b, c = key
        record = {'a': a, 'b': b, 'c': c}
        record.update(_complex_record(model.r.entries[key]))
        r_records.append(record)
    return {
        'labels': list(ring.labels),
        'dual': list(ring.dual),
        'fusion': fusion,
        'F': f_records,
        'R': r_records,
        'theta': [_complex_record(t) for t in model.theta],
    }


def save_model(model: AnyonModel, path) -> None:
    text = json.dumps(model_to_dict(model), indent=2, sort_keys=True)
    Path(path).write_text(text + '\n', encoding='utf-8')


def _require(condition: bool, message: str):
    if not condition:
        raise SchemaError(message)


def _read_complex(record: dict, context: str) -> complex:
    _require(isinstance(record, dict), f'{context}: expected an object with re/im members')
    try:
        re = float(record['re'])
        im = float(record['im'])
    except (KeyError, TypeError, ValueError):
        raise SchemaError(f'{context}: re/im members must be numbers') from None
    return complex(re, im)


def model_from_dict(data: dict, source: str = '<data>') -> AnyonModel:
    """Build a model from the parsed JSON document, validating the schema."""
    _require(isinstance(data, dict), f'{source}: top level must be a JSON object')
    for member in ('labels', 'dual', 'fusion', 'F', 'R', 'theta'):
        _require(member in data, f'{source}: missing member {member!r}')
    labels = data['labels']
    _require(isinstance(labels, list) and labels
             and all(isinstance(s, str) for s in labels),
             f'{source}: labels must be a non-empty array of strings')
    rank = len(labels)

    dual = data['dual']
    _require(isinstance(dual, list) and len(dual) == rank
             and all(isinstance(d, int) and 0 <= d < rank for d in dual),
             f'{source}: dual must be an array of {rank} label indices')

    n = np.zeros((rank, rank, rank), dtype=np.int64)
    _require(isinstance(data['fusion'], list), f'{source}: fusion must be an array')
    for quad in data['fusion']:
        _require(isinstance(quad, list) and len(quad) == 4
                 and all(isinstance(x, int) for x in quad),
                 f'{source}: fusion entry {quad!r} must be four integers [a, b, c, N]')
        a, b, c, mult = quad
        _require(all(0 <= x < rank for x in (a, b, c)),
                 f'{source}: fusion entry {quad} has an out-of-range label')
        _require(mult >= 0, f'{source}: fusion entry {quad} has a negative multiplicity')
        n[a, b, c] = mult

    try:
        ring = FusionRing(tuple(labels), tuple(dual), n)
    except InputError as exc:
        raise SchemaError(f'{source}: {exc}') from None

    f_entries = {}
    _require(isinstance(data['F'], list), f'{source}: F must be an array')
    for record in data['F']:
        _require(isinstance(record, dict)
                 and all(k in record for k in ('a', 'b', 'c', 'd', 'e', 'f')),
                 f'{source}: F record {record!r} must name a,b,c,d,e,f')
        key = tuple(record[k] for k in ('a', 'b', 'c', 'd', 'e', 'f'))
        _require(all(isinstance(i, int) and 0 <= i < rank for i in key),
                 f'{source}: F record {key} has an out-of-range index')
        _require(key not in f_entries, f'{source}: duplicate F record {key}')
        f_entries[key] = _read_complex(record, f'{source}: F record {key}')

    r_entries = {}
    _require(isinstance(data['R'], list), f'{source}: R must be an array')
    for record in data['R']:
        _require(isinstance(record, dict) and all(k in record for k in ('a', 'b', 'c')),
                 f'{source}: R record {record!r} must name a,b,c')
        key = tuple(record[k] for k in ('a', 'b', 'c'))
        _require(all(isinstance(i, int) and 0 <= i < rank for i in key),
                 f'{source}: R record {key} has an out-of-range index')
        _require(key not in r_entries, f'{source}: duplicate R record {key}')
        r_entries[key] = _read_complex(record, f'{source}: R record {key}')

    _require(isinstance(data['theta'], list) and len(data['theta']) == rank,
             f'{source}: theta must list {rank} phases')
    theta = tuple(_read_complex(record, f'{source}: theta[{i}]')
                  for i, record in enumerate(data['theta']))

    try:
        return AnyonModel.from_data(ring, f_entries, r_entries, theta)
    except SchemaError as exc:
        raise SchemaError(f'{source}: {exc}') from None


def load_model(path) -> AnyonModel:
    """Load and validate a model file; coherence checks are not run here."""
    path = Path(path)
    text = path.read_text(encoding='utf-8')
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f'{path}: line {exc.lineno}, column {exc.colno}: {exc.msg}',
                         exc.pos) from None
    return model_from_dict(data, source=str(path))
