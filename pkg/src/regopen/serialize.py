"""JSON interchange formats and DOT export.

Space format:   {"n": int, "opens": [[indices...], ...], "labels": [str]?}
Lattice format: {"elements": int, "leq": [[i, j], ...], "gg": [[i, j], ...]?,
                 "payloads": [[indices...], ...]?}

Opens and payloads are arrays of sorted unique indices; validation runs on
load. Serialization is canonical (sorted keys, fixed separators, stable
element ordering) so identical inputs always produce byte-identical output.
"""

from __future__ import annotations

import json
from typing import IO

from .lattice import FiniteLattice, PairRelation
from .topology import Topology, mask_of, set_of


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


# -- spaces -------------------------------------------------------------------


def space_to_dict(t: Topology, labels: list[str] | None = None) -> dict:
    d = {"n": t.n, "opens": [sorted(set_of(m)) for m in t.open_masks]}
    if labels is not None:
        d["labels"] = list(labels)
    return d


def space_from_dict(d: dict) -> Topology:
    n = d["n"]
    if not isinstance(n, int):
        raise ValueError("'n' must be an integer")
    labels = d.get("labels")
    if labels is not None and len(labels) != n:
        raise ValueError("'labels' must have one entry per point")
    return Topology(n, [mask_of(o, n) for o in d["opens"]])


def dump_space(t: Topology, fp: IO[str], labels: list[str] | None = None):
    fp.write(canonical_json(space_to_dict(t, labels)))


def load_space(fp: IO[str]) -> Topology:
    return space_from_dict(json.load(fp))


# -- lattices -----------------------------------------------------------------


def lattice_to_dict(l: FiniteLattice, gg: PairRelation | None = None) -> dict:
    d = {
        "elements": l.m,
        "leq": sorted([i, j] for i in range(l.m) for j in range(l.m) if i != j and l.leq(i, j)),
    }
    if gg is not None:
        d["gg"] = sorted([f, g] for f, g in gg)
    if l.payload_masks is not None:
        d["payloads"] = [sorted(set_of(m)) for m in l.payload_masks]
    return d


def lattice_from_dict(d: dict) -> tuple[FiniteLattice, PairRelation | None]:
    m = d["elements"]
    payloads = d.get("payloads")
    masks = None
    if payloads is not None:
        if len(payloads) != m:
            raise ValueError("'payloads' must have one entry per element")
        width = 1 + max((max(p, default=0) for p in payloads), default=0)
        masks = [mask_of(p, width) for p in payloads]
    lat = FiniteLattice.from_leq(m, [(i, j) for i, j in d["leq"]], masks)
    gg = d.get("gg")
    if gg is not None:
        rel = frozenset((f, g) for f, g in gg)
        for f, g in rel:
            if not (0 <= f < m and 0 <= g < m):
                raise ValueError(f"gg pair ({f}, {g}) out of range")
        return lat, rel
    return lat, None


# -- DOT ----------------------------------------------------------------------


def _node_label(l: FiniteLattice, i: int) -> str:
    if l.payload_masks is not None:
        return "{" + ",".join(map(str, sorted(set_of(l.payload_masks[i])))) + "}"
    return str(i)


def lattice_to_dot(l: FiniteLattice, name: str = "lattice") -> str:
    """Hasse diagram: covering edges only, atoms annotated."""
    atoms = set(l.atoms())
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    for i in range(l.m):
        attrs = [f'label="{_node_label(l, i)}"']
        if i in atoms:
            attrs.append("peripheries=2")
            attrs.append('xlabel="atom"')
        lines.append(f"  n{i} [{', '.join(attrs)}];")
    for i, j in sorted(l.covers()):
        lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
