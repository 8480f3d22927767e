"""State-file interchange: JSON documents holding n-qubit amplitude vectors.

Schema (bit-exact contract):

    {"qubits": n, "amplitudes": [[re, im], ...]}      n in {1, 2, 3}

The amplitude list has length 2**n in big-endian basis order: for three
qubits the entry at index 4*A + 2*B + C is the amplitude of |A B C> with
qubit 1 the leftmost tensor slot.  Every float is emitted with 17
significant digits so that parse(dump(x)) reproduces x bit for bit.
"""

from __future__ import annotations

import json
from typing import Any

import numpy as np

from .spinor import as_spinor


class StateFileError(ValueError):
    """Malformed state-file document."""


def state_to_doc(psi) -> dict:
    """Serialize a spinor to a state-file document (plain dict)."""
    arr = as_spinor(psi)
    flat = arr.reshape(-1)
    return {
        "qubits": arr.ndim,
        "amplitudes": [[float(z.real), float(z.imag)] for z in flat],
    }


def doc_to_state(doc, qubits: int | None = None) -> np.ndarray:
    """Parse and validate a state-file document into a spinor array."""
    if not isinstance(doc, dict):
        raise StateFileError("state file must be a JSON object")
    try:
        n = doc["qubits"]
        amps = doc["amplitudes"]
    except (KeyError, TypeError) as exc:
        raise StateFileError(f"missing state-file field: {exc}") from exc
    if not isinstance(n, int) or isinstance(n, bool) or n not in (1, 2, 3):
        raise StateFileError(f"qubits must be 1, 2 or 3, got {n!r}")
    if qubits is not None and n != qubits:
        raise StateFileError(f"expected a {qubits}-qubit state, got {n} qubits")
    if not isinstance(amps, list) or len(amps) != 2**n:
        raise StateFileError(f"amplitudes must be a list of length {2**n}")
    values = []
    for k, pair in enumerate(amps):
        if (
            not isinstance(pair, (list, tuple))
            or len(pair) != 2
            or not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in pair)
        ):
            raise StateFileError(f"amplitude {k} must be a [re, im] number pair")
        values.append(complex(pair[0], pair[1]))
    arr = np.array(values, dtype=complex).reshape((2,) * n)
    if not np.isfinite(arr).all():
        raise StateFileError("amplitudes must be finite")
    if not arr.any():
        raise StateFileError("state vector is identically zero")
    return arr


def loads_state(text: str, qubits: int | None = None) -> np.ndarray:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise StateFileError(f"invalid JSON: {exc}") from exc
    return doc_to_state(doc, qubits=qubits)


def dumps_state(psi) -> str:
    return dumps_json(state_to_doc(psi))


def _format_float(x: float) -> str:
    if x != x or x in (float("inf"), float("-inf")):
        raise ValueError("non-finite number in JSON output")
    if x == int(x) and abs(x) < 1e16:
        return f"{x:.1f}"
    return format(x, ".17g")


def dumps_json(obj: Any, indent: int = 0) -> str:
    """JSON text with floats at 17 significant digits (round-trip exact)."""
    pad = " " * indent
    inner = " " * (indent + 2)
    if obj is None:
        return "null"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return _format_float(float(obj))
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        items = [dumps_json(v, indent + 2) for v in obj]
        return "[\n" + ",\n".join(inner + s for s in items) + "\n" + pad + "]"
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [
            f"{json.dumps(str(k))}: {dumps_json(v, indent + 2)}" for k, v in obj.items()
        ]
        return "{\n" + ",\n".join(inner + s for s in items) + "\n" + pad + "}"
    raise TypeError(f"cannot serialize {type(obj).__name__} to JSON")
