"""DOT rendering of Hasse diagrams, byte-deterministic."""

from __future__ import annotations

from .module import InstanceBundle


def emit_dot(bundle: InstanceBundle, which: str = "lattice") -> str:
    """DOT digraph of the cover relations, edges from lower to higher.

    `which` selects the scalar lattice or the module carrier; nodes and
    edges are emitted in sorted order so output is identical across runs.
    """
    if which not in ("lattice", "module"):
        raise ValueError("which must be 'lattice' or 'module'")
    lat = bundle.scalars.lat if which == "lattice" else bundle.carrier
    lines = [f"digraph {which} {{"]
    lines += [f'  "{name}";' for name in lat.names]
    lines += [f'  "{a}" -> "{b}";' for a, b in lat.covers()]
    lines.append("}")
    return "\n".join(lines) + "\n"
