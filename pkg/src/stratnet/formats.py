"""Edge-list and coefficient files, JSON/CSV number formatting."""

from __future__ import annotations

import io as _io
import json
from pathlib import Path

import numpy as np

from .errors import NonPositiveOmega
from .graph import Graph, SzegoJacobi, build_graph

SIG_DIGITS = 12


def fmt(x: float) -> str:
    # adding 0.0 folds -0.0 into 0.0
    return format(float(x) + 0.0, f".{SIG_DIGITS}g")


def round_sig(obj):
    """Recursively round floats to 12 significant digits for JSON output."""
    if isinstance(obj, dict):
        return {k: round_sig(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [round_sig(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return round_sig(obj.tolist())
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        return float(fmt(obj))
    return obj


def dumps(obj) -> str:
    return json.dumps(round_sig(obj), indent=2) + "\n"


def _data_lines(text: str):
    for raw in text.splitlines():
        line = raw.strip()
        if line and not line.startswith("#"):
            yield line


def parse_edge_list(text: str) -> Graph:
    lines = list(_data_lines(text))
    if not lines:
        raise ValueError("edge list is empty")
    header = lines[0].split()
    if len(header) != 2:
        raise ValueError(f"header must be 'n m', got {lines[0]!r}")
    n, m = int(header[0]), int(header[1])
    body = [line.split() for line in lines[1:]]
    if len(body) != m:
        raise ValueError(f"header declares {m} edges, found {len(body)}")
    for row in body:
        if len(row) != 2:
            raise ValueError(f"edge line must have two fields, got {' '.join(row)!r}")
    tokens = [t for row in body for t in row]
    if all(t.lstrip("-").isdigit() for t in tokens):
        edges = [(int(u), int(v)) for u, v in body]
        return build_graph(n, edges)
    labels: dict[str, int] = {}
    for t in tokens:
        labels.setdefault(t, len(labels))
    if len(labels) > n:
        raise ValueError(f"{len(labels)} distinct labels for {n} vertices")
    names = list(labels) + [f"_{i}" for i in range(len(labels), n)]
    return build_graph(n, [(labels[u], labels[v]) for u, v in body], names)


def read_edge_list(path) -> Graph:
    return parse_edge_list(Path(path).read_text())


def format_edge_list(g: Graph) -> str:
    edges = g.edges()
    buf = _io.StringIO()
    buf.write(f"{g.n} {len(edges)}\n")
    for u, v in edges:
        buf.write(f"{u} {v}\n")
    return buf.getvalue()


def parse_coefficients(text: str) -> tuple[SzegoJacobi, list[int] | None]:
    data = json.loads(text)
    if not isinstance(data, dict) or "omega" not in data or "alpha" not in data:
        raise ValueError('coefficient file must be an object with "omega" and "alpha"')
    c = SzegoJacobi(tuple(data["omega"]), tuple(data["alpha"]))
    if any(w <= 0 for w in c.omega):
        raise NonPositiveOmega(f"omega must be strictly positive, got {list(c.omega)}")
    sizes = data.get("sizes")
    if sizes is not None:
        sizes = [int(s) for s in sizes]
        if len(sizes) != c.d + 1:
            raise ValueError(f"need {c.d + 1} stratum sizes, got {len(sizes)}")
    return c, sizes


def read_coefficients(path):
    return parse_coefficients(Path(path).read_text())


def coefficients_dict(c: SzegoJacobi, sizes=None) -> dict:
    out = {"omega": list(c.omega), "alpha": list(c.alpha)}
    if sizes is not None:
        out["sizes"] = list(sizes)
    return out


def spectral_report(sd) -> dict:
    return {
        "eigenvalues": sd.eigenvalues,
        "weights": sd.weights,
        "pmat": sd.pmat,
    }


def trajectory_csv(times, gammas, concurrence) -> str:
    d = gammas.shape[1] - 1
    cols = ["t"]
    for i in range(d + 1):
        cols += [f"re_gamma_{i}", f"im_gamma_{i}"]
    cols.append("concurrence_0i")
    buf = _io.StringIO()
    buf.write(",".join(cols) + "\n")
    for t, g, c in zip(times, gammas, concurrence):
        vals = [fmt(t)]
        for z in g:
            vals += [fmt(z.real), fmt(z.imag)]
        vals.append(fmt(c))
        buf.write(",".join(vals) + "\n")
    return buf.getvalue()
