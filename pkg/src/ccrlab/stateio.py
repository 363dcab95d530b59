"""JSON state files.

Density matrices are stored as ``{"dim": d, "matrix": [[[re, im], ...], ...]}``
and bipartite kets as ``{"dims": [dA, dB], "amplitudes": [[re, im], ...]}``.
"""

import json

import numpy as np

from .exceptions import ValidationError
from .states import BipartitePureState, DensityMatrix


class StateFileError(ValidationError):
    """The document is malformed; ``invariant`` names the offending field."""

    def __init__(self, field_name, message):
        super().__init__(field_name, None, f"{field_name}: {message}")


def _pair(value, where):
    if (
        not isinstance(value, (list, tuple))
        or len(value) != 2
        or not all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in value)
    ):
        raise StateFileError(where, "expected a [re, im] pair of numbers")
    return complex(value[0], value[1])


def _positive_int(value, where):
    if not isinstance(value, int) or isinstance(value, bool) or value < 1:
        raise StateFileError(where, f"expected a positive integer, got {value!r}")
    return value


def parse_state(doc):
    """Turn a decoded JSON document into a state object."""
    if not isinstance(doc, dict):
        raise StateFileError("document", "top level must be a JSON object")
    if "matrix" in doc or "dim" in doc:
        if "dim" not in doc:
            raise StateFileError("dim", "missing")
        if "matrix" not in doc:
            raise StateFileError("matrix", "missing")
        d = _positive_int(doc["dim"], "dim")
        rows = doc["matrix"]
        if not isinstance(rows, list) or len(rows) != d:
            raise StateFileError("matrix", f"expected {d} rows")
        m = np.empty((d, d), dtype=complex)
        for j, row in enumerate(rows):
            if not isinstance(row, list) or len(row) != d:
                raise StateFileError(f"matrix[{j}]", f"expected {d} entries")
            for k, entry in enumerate(row):
                m[j, k] = _pair(entry, f"matrix[{j}][{k}]")
        return DensityMatrix(m)
    if "amplitudes" in doc or "dims" in doc:
        if "dims" not in doc:
            raise StateFileError("dims", "missing")
        if "amplitudes" not in doc:
            raise StateFileError("amplitudes", "missing")
        dims = doc["dims"]
        if not isinstance(dims, list) or len(dims) != 2:
            raise StateFileError("dims", "expected [dA, dB]")
        da = _positive_int(dims[0], "dims[0]")
        db = _positive_int(dims[1], "dims[1]")
        amps = doc["amplitudes"]
        if not isinstance(amps, list) or len(amps) != da * db:
            raise StateFileError("amplitudes", f"expected {da * db} entries")
        vec = np.array([_pair(a, f"amplitudes[{i}]") for i, a in enumerate(amps)])
        return BipartitePureState(da, db, vec)
    raise StateFileError("document", "needs either dim/matrix or dims/amplitudes")


def loads(text):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise StateFileError("document", f"invalid JSON at line {exc.lineno} column {exc.colno}") from exc
    return parse_state(doc)


def load(path):
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


def _encode(z):
    return [float(z.real), float(z.imag)]


def to_document(state):
    if isinstance(state, BipartitePureState):
        return {
            "dims": [state.dim_a, state.dim_b],
            "amplitudes": [_encode(z) for z in state.amplitudes],
        }
    m = np.asarray(state.matrix if isinstance(state, DensityMatrix) else state)
    return {"dim": m.shape[0], "matrix": [[_encode(z) for z in row] for row in m]}


def dump(state, path):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(to_document(state), fh)
        fh.write("\n")
