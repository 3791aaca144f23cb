"""Kind-level "may descend to" graphs of the classical symmetric pairs."""

from __future__ import annotations

import json
from dataclasses import dataclass

from .descend import KINDS

# direct descendant kinds; every other kind only descends to itself
RULES = {
    "O_eps": ("U_O", "GL_O"),
    "U_O": ("GL_O",),
    "U_eps": ("GL_U", "GL_eps", "U_EF_U", "UxU_diag"),
    "GL_U": ("GLxGL_diag",),
    "GL_eps": ("GLxGL_diag", "GL_EF_GL"),
}

# root kind of each descend family, and descend kinds drawn under another name
FAMILY_ROOT = {"GL_O": "GL_O", "GL_U": "GL_U", "U_O": "U_O", "O_OxO": "O_eps", "U_UxU": "U_eps"}
DIAGRAM_NAME = {"GL_ext_GL": "GL_EF_GL", "U_ext_U": "U_EF_U"}

ROOTS = ("O_eps", "U_eps", "GL_O", "GL_U", "U_O")


def diagram_kind(kind: str) -> str:
    return DIAGRAM_NAME.get(kind, kind)


def _reachable(kind: str) -> set:
    seen = {kind}
    stack = [kind]
    while stack:
        for nxt in RULES.get(stack.pop(), ()):
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return seen


@dataclass(frozen=True)
class GenealogyGraph:
    root: str
    nodes: tuple
    edges: tuple

    def is_closed(self) -> bool:
        """Applying the direct rules to every node adds no node and no edge."""
        nodes, edges = set(self.nodes), set(self.edges)
        for u in self.nodes:
            for v in RULES.get(u, ()):
                if v not in nodes or (u, v) not in edges:
                    return False
        for u, v in self.edges:
            for w in RULES.get(v, ()):
                if w != u and (u, w) not in edges:
                    return False
        return True

    def to_json(self) -> dict:
        return {"root": self.root, "nodes": list(self.nodes), "edges": [list(e) for e in self.edges]}

    def to_dot(self) -> str:
        lines = [f'digraph "{self.root}" {{']
        lines += [f'  "{n}";' for n in self.nodes]
        lines += [f'  "{u}" -> "{v}";' for u, v in self.edges]
        lines.append("}")
        return "\n".join(lines)

    def to_text(self) -> str:
        lines = [f"root: {self.root}", f"nodes: {' '.join(self.nodes)}", "edges:"]
        lines += [f"  {u} -> {v}" for u, v in self.edges]
        return "\n".join(lines)

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return json.dumps(self.to_json(), indent=2)
        if fmt == "dot":
            return self.to_dot()
        if fmt == "text":
            return self.to_text()
        raise ValueError(f"unknown format {fmt!r}")


def genealogy(root: str) -> GenealogyGraph:
    """Transitive closure of the descendant rules from ``root``, without self-loops."""
    if root not in KINDS:
        raise ValueError(f"unknown pair kind {root!r}")
    nodes = _reachable(root)
    edges = {(u, v) for u in nodes for v in _reachable(u) if v != u}
    order = sorted(nodes, key=lambda k: (k != root, k))
    return GenealogyGraph(root, tuple(order), tuple(sorted(edges)))
