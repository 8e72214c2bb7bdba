"""JSON certificates binding a result to the graph it was computed on.

Vertex ids inside certificates are 1-based, like the graph text format.
"""

from __future__ import annotations

import json

from sweepkit.bounds import BoundsReport, graph_bounds
from sweepkit.errors import GraphFormatError, IllegalAction, StaleCertificate
from sweepkit.graph import Graph
from sweepkit.pathdecomp import PathDecomposition, validate_path_decomposition
from sweepkit.searchgame import (Move, Place, Remove, SearchStrategy,
                                 validate_strategy)


def decomposition_certificate(g: Graph, d: PathDecomposition) -> dict:
    return {"type": "path-decomposition", "graph_hash": g.content_hash(),
            "bags": [[v + 1 for v in bag] for bag in d.bags]}


def _action_json(a) -> dict:
    if isinstance(a, Move):
        return {"op": "move", "u": a.u + 1, "v": a.v + 1}
    return {"op": "place" if isinstance(a, Place) else "remove", "v": a.v + 1}


def strategy_certificate(g: Graph, strat: SearchStrategy) -> dict:
    return {"type": "search-strategy", "graph_hash": g.content_hash(), "k": strat.k,
            "actions": [_action_json(a) for a in strat.actions]}


def bounds_certificate(g: Graph, report: BoundsReport) -> dict:
    return {"type": "bounds", "graph_hash": g.content_hash(), **report.as_dict()}


def dumps(cert: dict) -> str:
    return json.dumps(cert, indent=1, ensure_ascii=False) + "\n"


def parse_decomposition(cert: dict) -> PathDecomposition:
    return PathDecomposition([v - 1 for v in bag] for bag in cert["bags"])


def parse_strategy(cert: dict) -> SearchStrategy:
    actions = []
    for i, a in enumerate(cert["actions"]):
        op = a.get("op")
        if op == "place":
            actions.append(Place(a["v"] - 1))
        elif op == "remove":
            actions.append(Remove(a["v"] - 1))
        elif op == "move":
            actions.append(Move(a["u"] - 1, a["v"] - 1))
        else:
            raise GraphFormatError(f"action {i + 1}: unknown op {op!r}")
    return SearchStrategy(int(cert["k"]), tuple(actions))


def verify_certificate(cert: dict, g: Graph, expected_type: str | None = None) -> list[str]:
    """Re-check ``cert`` against ``g``; returns human-readable problems (empty when valid)."""
    kind = cert.get("type")
    if expected_type is not None and kind != expected_type:
        return [f"certificate type is {kind!r}, expected {expected_type!r}"]
    if cert.get("graph_hash") != g.content_hash():
        raise StaleCertificate("certificate was issued for a different graph")
    if kind == "path-decomposition":
        d = parse_decomposition(cert)
        if not d.bags:
            return ["decomposition has no bags"]
        return [v.describe() for v in validate_path_decomposition(g, d).violations]
    if kind == "search-strategy":
        strat = parse_strategy(cert)
        try:
            report = validate_strategy(g, strat)
        except IllegalAction as exc:
            return [f"action {exc.step + 1}: {exc.kind} is illegal ({exc.reason})"]
        return [f"edge ({u + 1}, {v + 1}) is still dirty after the last action"
                for u, v in report.dirty]
    if kind == "bounds":
        fresh = graph_bounds(g)
        problems = []
        if cert.get("lower") != fresh.lower or cert.get("upper") != fresh.upper:
            problems.append(f"recomputed interval [{fresh.lower}, {fresh.upper}] differs "
                            f"from certified [{cert.get('lower')}, {cert.get('upper')}]")
        recorded = {(e["side"], e["rule"], e["value"]) for e in cert.get("provenance", [])}
        for e in fresh.provenance:
            if (e.side, e.rule, e.value) not in recorded:
                problems.append(f"missing or altered provenance entry {e.rule} ({e.side} {e.value})")
        return problems
    return [f"unknown certificate type {kind!r}"]
