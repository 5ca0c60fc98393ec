"""JSON operator spec files.

Three document types are understood::

    {"type": "jacobi1d", "period": p, "block_dim": m, "a": [...], "b": [...],
     "restrict": [alpha, beta]}                      # restrict is optional
    {"type": "schrodinger2d", "N": N, "M": M, "q": [[...], ...]}
    {"type": "symbol", "dim_k": d, "H0": [[...]], "domain": [[a, b], ...],
     "terms": [{"phi": {"freq": [...], "coeff": [re, im]}, "A": [[...]]}, ...]}

Complex numbers are ``[re, im]`` pairs (plain reals are accepted on input);
matrices are row-major nested lists, and a bare number stands for a 1x1 matrix.
``domain`` is optional and defaults to the full torus.  A term may use
``{"samples": grid}`` instead of ``freq``/``coeff``.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from numbers import Real
from pathlib import Path

import numpy as np

from .operators import JacobiSpec, Schrodinger2DSpec, jacobi_symbol, schrodinger2d_symbol
from .symbol import FourierSymbol, KDomain, PhiFunction

TYPES = ("jacobi1d", "schrodinger2d", "symbol")


class SpecError(ValueError):
    pass


@dataclass(frozen=True)
class OperatorSpec:
    type: str
    jacobi: JacobiSpec | None = None
    schrodinger: Schrodinger2DSpec | None = None
    symbol: FourierSymbol | None = None
    restrict: tuple[float, float] | None = None

    def __post_init__(self):
        payloads = [x is not None for x in (self.jacobi, self.schrodinger, self.symbol)]
        if self.type not in TYPES or sum(payloads) != 1 or not payloads[TYPES.index(self.type)]:
            raise SpecError(f"spec of type {self.type!r} must carry exactly its own payload")
        if self.restrict is not None:
            if self.type != "jacobi1d":
                raise SpecError("restrict: only allowed for jacobi1d")
            a, b = self.restrict
            if not (0.0 <= a < b <= math.pi):
                raise SpecError("restrict: need 0 <= alpha < beta <= pi")

    def build_symbol(self, grid: int = 0) -> FourierSymbol:
        if self.type == "jacobi1d":
            return jacobi_symbol(self.jacobi, self.restrict, grid)
        if self.type == "schrodinger2d":
            return schrodinger2d_symbol(self.schrodinger, grid)
        if grid and grid != self.symbol.domain.grid:
            if any(phi.kind == "samples" for phi, _ in self.symbol.terms):
                raise SpecError(f"grid: sampled phi fixes the grid at {self.symbol.domain.grid} points per axis")
            return FourierSymbol(self.symbol.H0, self.symbol.terms, self.symbol.domain.with_grid(grid))
        return self.symbol


def _is_num(x) -> bool:
    return isinstance(x, Real) and not isinstance(x, bool)


def _complex(x, where: str) -> complex:
    if _is_num(x):
        z = complex(float(x))
    elif isinstance(x, list) and len(x) == 2 and all(_is_num(v) for v in x):
        z = complex(float(x[0]), float(x[1]))
    else:
        raise SpecError(f"{where}: expected a number or [re, im], got {json.dumps(x)}")
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise SpecError(f"{where}: non-finite value")
    return z


def _matrix(x, where: str, size: int | None = None) -> np.ndarray:
    if _is_num(x) or (isinstance(x, list) and len(x) == 2 and all(_is_num(v) for v in x)):
        M = np.array([[_complex(x, where)]])
    elif isinstance(x, list) and x and all(isinstance(r, list) for r in x):
        n = len(x)
        M = np.empty((n, n), dtype=complex)
        for i, row in enumerate(x):
            if len(row) != n:
                raise SpecError(f"{where}[{i}]: expected {n} entries for a square matrix, got {len(row)}")
            for j, v in enumerate(row):
                M[i, j] = _complex(v, f"{where}[{i}][{j}]")
    else:
        raise SpecError(f"{where}: expected a matrix")
    if size is not None and M.shape != (size, size):
        raise SpecError(f"{where}: expected a {size}x{size} matrix, got {M.shape[0]}x{M.shape[1]}")
    return M


def _int(doc, key, where="", minimum=1) -> int:
    if key not in doc:
        raise SpecError(f"{where}{key}: missing field")
    v = doc[key]
    if not isinstance(v, int) or isinstance(v, bool) or v < minimum:
        raise SpecError(f"{where}{key}: expected an integer >= {minimum}")
    return v


def _list(doc, key, length=None) -> list:
    if key not in doc:
        raise SpecError(f"{key}: missing field")
    v = doc[key]
    if not isinstance(v, list):
        raise SpecError(f"{key}: expected a list")
    if length is not None and len(v) != length:
        raise SpecError(f"{key}: expected {length} entries, got {len(v)}")
    return v


def _reject_unknown(doc, allowed):
    extra = sorted(set(doc) - set(allowed))
    if extra:
        raise SpecError(f"{extra[0]}: unknown field for type {doc['type']!r}")


def _parse_jacobi(doc) -> OperatorSpec:
    _reject_unknown(doc, ("type", "period", "block_dim", "a", "b", "restrict"))
    p = _int(doc, "period")
    m = _int(doc, "block_dim")
    a = [_matrix(x, f"a[{i}]", m) for i, x in enumerate(_list(doc, "a", p))]
    b = [_matrix(x, f"b[{i}]", m) for i, x in enumerate(_list(doc, "b", p))]
    for i, bn in enumerate(b):
        if np.linalg.norm(bn - bn.conj().T) > 1e-12 * max(1.0, np.linalg.norm(bn)):
            raise SpecError(f"b[{i}]: diagonal blocks must be Hermitian")
    restrict = None
    if "restrict" in doc:
        r = _list(doc, "restrict", 2)
        if not all(_is_num(v) for v in r):
            raise SpecError("restrict: expected [alpha, beta]")
        restrict = (float(r[0]), float(r[1]))
    return OperatorSpec("jacobi1d", jacobi=JacobiSpec(tuple(a), tuple(b)), restrict=restrict)


def _parse_schrodinger(doc) -> OperatorSpec:
    _reject_unknown(doc, ("type", "N", "M", "q"))
    N = _int(doc, "N")
    M = _int(doc, "M")
    rows = _list(doc, "q", N)
    q = np.empty((N, M))
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != M:
            raise SpecError(f"q[{i}]: expected {M} real entries")
        for j, v in enumerate(row):
            if not _is_num(v) or not math.isfinite(v):
                raise SpecError(f"q[{i}][{j}]: expected a finite real number")
            q[i, j] = v
    return OperatorSpec("schrodinger2d", schrodinger=Schrodinger2DSpec(q))


def _parse_samples(x, where: str, d: int) -> np.ndarray:
    arr = x
    shape = []
    for _ in range(d):
        if not isinstance(arr, list) or not arr:
            raise SpecError(f"{where}: expected a {d}-dimensional grid of complex values")
        shape.append(len(arr))
        arr = arr[0]
    if len(set(shape)) != 1:
        raise SpecError(f"{where}: sample grid must have equal length on every axis")
    out = np.empty(shape, dtype=complex)
    for idx in np.ndindex(*shape):
        v = x
        for i in idx:
            if not isinstance(v, list) or len(v) != shape[0]:
                raise SpecError(f"{where}: ragged sample grid")
            v = v[i]
        out[idx] = _complex(v, where + "".join(f"[{i}]" for i in idx))
    return out


def _parse_symbol(doc) -> OperatorSpec:
    _reject_unknown(doc, ("type", "dim_k", "H0", "terms", "domain"))
    d = _int(doc, "dim_k")
    if "H0" not in doc:
        raise SpecError("H0: missing field")
    H0 = _matrix(doc["H0"], "H0")
    if np.linalg.norm(H0 - H0.conj().T) > 1e-12 * max(1.0, np.linalg.norm(H0)):
        raise SpecError("H0: must be Hermitian")
    N = H0.shape[0]
    if "domain" in doc:
        ivs = _list(doc, "domain", d)
        for i, iv in enumerate(ivs):
            if not (isinstance(iv, list) and len(iv) == 2 and all(_is_num(v) for v in iv)):
                raise SpecError(f"domain[{i}]: expected [alpha, beta]")
        try:
            domain = KDomain(tuple((float(a), float(b)) for a, b in ivs))
        except ValueError as exc:
            raise SpecError(f"domain: {exc}") from None
    else:
        domain = KDomain.torus(d)

    terms = []
    for j, t in enumerate(doc.get("terms", [])):
        where = f"terms[{j}]"
        if not isinstance(t, dict) or "phi" not in t or "A" not in t:
            raise SpecError(f"{where}: expected an object with 'phi' and 'A'")
        phi_doc = t["phi"]
        if not isinstance(phi_doc, dict):
            raise SpecError(f"{where}.phi: expected an object")
        if "samples" in phi_doc:
            phi = PhiFunction.sampled(_parse_samples(phi_doc["samples"], f"{where}.phi.samples", d))
        else:
            freq = phi_doc.get("freq")
            if not (isinstance(freq, list) and len(freq) == d
                    and all(isinstance(n, int) and not isinstance(n, bool) for n in freq)):
                raise SpecError(f"{where}.phi.freq: expected {d} integers")
            phi = PhiFunction.fourier(freq, _complex(phi_doc.get("coeff", 1.0), f"{where}.phi.coeff"))
        terms.append((phi, _matrix(t["A"], f"{where}.A", N)))
    sampled = {phi.values.shape[0] for phi, _ in terms if phi.kind == "samples"}
    if len(sampled) > 1:
        raise SpecError("terms: sampled phi functions must share one grid size")
    if sampled:
        domain = domain.with_grid(sampled.pop())
    try:
        sym = FourierSymbol(H0, tuple(terms), domain)
    except ValueError as exc:
        raise SpecError(f"terms: {exc}") from None
    return OperatorSpec("symbol", symbol=sym)


def parse_spec(text: str) -> OperatorSpec:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise SpecError("top level: expected a JSON object")
    kind = doc.get("type")
    if kind == "jacobi1d":
        return _parse_jacobi(doc)
    if kind == "schrodinger2d":
        return _parse_schrodinger(doc)
    if kind == "symbol":
        return _parse_symbol(doc)
    raise SpecError(f"type: expected one of {', '.join(TYPES)}, got {kind!r}")


def load_spec(path) -> OperatorSpec:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise SpecError(f"{path}: {exc.strerror}") from None
    return parse_spec(text)


def _cplx_out(z) -> list[float]:
    z = complex(z)
    return [z.real, z.imag]


def _matrix_out(M) -> list:
    return [[_cplx_out(v) for v in row] for row in np.asarray(M)]


def spec_to_dict(spec: OperatorSpec) -> dict:
    if spec.type == "jacobi1d":
        J = spec.jacobi
        doc = {"type": "jacobi1d", "period": J.period, "block_dim": J.block_dim,
               "a": [_matrix_out(x) for x in J.a], "b": [_matrix_out(x) for x in J.b]}
        if spec.restrict is not None:
            doc["restrict"] = list(spec.restrict)
        return doc
    if spec.type == "schrodinger2d":
        q = spec.schrodinger.q
        return {"type": "schrodinger2d", "N": q.shape[0], "M": q.shape[1],
                "q": [[float(v) for v in row] for row in q]}
    sym = spec.symbol
    terms = []
    for phi, A in sym.terms:
        if phi.kind == "fourier":
            phi_doc = {"freq": list(phi.freq), "coeff": _cplx_out(phi.coeff)}
        else:
            flat = [_cplx_out(v) for v in phi.values.ravel()]
            phi_doc = {"samples": np.array(flat).reshape(phi.values.shape + (2,)).tolist()}
        terms.append({"phi": phi_doc, "A": _matrix_out(A)})
    return {"type": "symbol", "dim_k": sym.domain.dim, "H0": _matrix_out(sym.H0),
            "domain": [list(iv) for iv in sym.domain.intervals], "terms": terms}


def dump_spec(spec: OperatorSpec) -> str:
    return json.dumps(spec_to_dict(spec), indent=1) + "\n"
