"""Lossless JSON serialization of decomposition trees.

A document stores the root graph (graph6 plus the sorted id list mapping
positions back to ids) and the recursive node structure: each internal node
records only its role vertex ids, so leaf graphs are re-derived top-down
when parsing.  The version field is mandatory and checked exactly.
"""

from __future__ import annotations

import json

from .graph import Graph, SplitCert
from .graph6 import emit_graph6, parse_graph6
from .decomposer import CoSgu, DecompTree, PentagonLeaf, Sgu, SplitLeaf, Subst, recompose
from .divide import PairRoles

__all__ = ["TreeDocumentError", "tree_to_document", "document_to_tree", "VERSION"]

VERSION = 1


class TreeDocumentError(ValueError):
    pass


def _ids(vs) -> list[int]:
    return sorted(vs)


def _node_to_json(node: DecompTree) -> dict:
    if isinstance(node, SplitLeaf):
        return {
            "kind": "split_leaf",
            "clique": _ids(node.cert.clique),
            "stable": _ids(node.cert.stable),
        }
    if isinstance(node, PentagonLeaf):
        return {"kind": "pentagon_leaf", "cycle": list(node.cycle)}
    if isinstance(node, Subst):
        return {
            "kind": "subst",
            "members": _ids(_subst_members(node)),
            "marker": node.marker,
            "children": [_node_to_json(node.quotient), _node_to_json(node.child)],
        }
    kind = "sgu" if isinstance(node, Sgu) else "cosgu"
    r = node.roles
    return {
        "kind": kind,
        "a": _ids(r.a_set),
        "b": _ids(r.b_set),
        "c": _ids(r.c_set),
        "l": _ids(r.l_set),
        "t": _ids(r.t_set),
        "marker_a": r.marker_a,
        "marker_c": r.marker_c,
        "children": [_node_to_json(node.part1), _node_to_json(node.part2)],
    }


def _subst_members(node: Subst):
    return recompose(node.child).vertex_set


def tree_to_document(tree: DecompTree, root_graph: Graph) -> str:
    doc = {
        "version": VERSION,
        "rootGraph": emit_graph6(root_graph),
        "vertexIds": list(root_graph.vertices),
        "node": _node_to_json(tree),
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _require(cond: bool, what: str) -> None:
    if not cond:
        raise TreeDocumentError(what)


def _node_from_json(obj: dict, g: Graph) -> DecompTree:
    _require(isinstance(obj, dict) and "kind" in obj, "node without a kind")
    kind = obj["kind"]
    if kind == "split_leaf":
        return SplitLeaf(
            graph=g,
            cert=SplitCert(clique=frozenset(obj["clique"]), stable=frozenset(obj["stable"])),
        )
    if kind == "pentagon_leaf":
        return PentagonLeaf(graph=g, cycle=tuple(obj["cycle"]))
    if kind == "subst":
        members = frozenset(obj["members"])
        marker = obj["marker"]
        _require(bool(members), "empty substitution members")
        _require(members <= g.vertex_set, "substitution members outside the node graph")
        _require(len(obj.get("children", ())) == 2, "substitution node needs two children")
        child_g = g.induced(members)
        outside = [v for v in g.vertices if v not in members]
        _require(marker not in outside, "marker collides with an outside vertex")
        probe = min(members)
        q_edges = [(a, b) for a, b in g.edges() if a not in members and b not in members]
        for v in outside:
            if g.has_edge(v, probe):
                q_edges.append((v, marker))
        quotient_g = Graph(outside + [marker], q_edges)
        return Subst(
            quotient=_node_from_json(obj["children"][0], quotient_g),
            child=_node_from_json(obj["children"][1], child_g),
            marker=marker,
        )
    if kind in ("sgu", "cosgu"):
        roles = PairRoles(
            a_set=frozenset(obj["a"]),
            b_set=frozenset(obj["b"]),
            c_set=frozenset(obj["c"]),
            l_set=frozenset(obj["l"]),
            t_set=frozenset(obj["t"]),
            marker_a=obj["marker_a"],
            marker_c=obj["marker_c"],
        )
        work = g.complement() if kind == "cosgu" else g
        all_roles = roles.a_set | roles.b_set | roles.c_set | roles.l_set | roles.t_set
        _require(all_roles == work.vertex_set, "role sets do not cover the node graph")
        _require(len(obj.get("children", ())) == 2, "unification node needs two children")
        g1_core = roles.a_set | roles.l_set | roles.t_set
        g1 = Graph(
            list(g1_core) + [roles.marker_c],
            work.induced(g1_core).edges() + [(roles.marker_c, v) for v in roles.l_set],
        )
        g2_core = roles.b_set | roles.c_set | roles.l_set | roles.t_set
        g2 = Graph(
            list(g2_core) + [roles.marker_a],
            work.induced(g2_core).edges() + [(roles.marker_a, v) for v in roles.b_set],
        )
        node_cls = Sgu if kind == "sgu" else CoSgu
        return node_cls(
            part1=_node_from_json(obj["children"][0], g1),
            part2=_node_from_json(obj["children"][1], g2),
            roles=roles,
        )
    raise TreeDocumentError(f"unknown node kind {kind!r}")


def document_to_tree(text: str) -> tuple[DecompTree, Graph]:
    """Parse a document back into (tree, root graph)."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise TreeDocumentError(f"not valid JSON: {exc}") from exc
    _require(isinstance(doc, dict), "document is not an object")
    version = doc.get("version")
    if version != VERSION:
        raise TreeDocumentError(f"unsupported document version {version!r}")
    for key in ("rootGraph", "vertexIds", "node"):
        _require(key in doc, f"missing field {key!r}")
    base = parse_graph6(doc["rootGraph"])
    ids = doc["vertexIds"]
    _require(len(ids) == base.n and len(set(ids)) == base.n, "vertexIds do not match the graph")
    remap = dict(enumerate(ids))  # graph6 position -> stored vertex id
    root = Graph(ids, [(remap[u], remap[v]) for u, v in base.edges()])
    tree = _node_from_json(doc["node"], root)
    return tree, root
