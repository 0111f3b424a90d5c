"""JSON space and gnet files.

Space file::

    {"universe": ["w", "v"],
     "mu": [[], ["w"]],                  # or "mu_generators": [["w"]]
     "assoc": {"v": [["w"]]}}

``assoc`` may omit points of ``union(mu)``; their family is derived.  A value
given for such a point must equal the derived one or validation fails.

Gnet file::

    {"elements": ["a", "b"], "leq": [["a", "b"]], "map": {"a": "w", "b": "v"}}

``leq`` is the full order (reflexive pairs optional) unless ``"covers": true``,
in which case it lists cover pairs and the order is their closure.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Union

from . import sets
from .errors import MalformedInputError
from .gnets import FinitePoset, Gnet
from .space import GeneralizedTopology, GtfSpace, build_topology, make_space, orphaned_points
from .sets import Universe

PathOrData = Union[str, Path, dict]


def _read(source: PathOrData) -> dict:
    if isinstance(source, dict):
        return source
    try:
        data = json.loads(Path(source).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise MalformedInputError(f"{source}: invalid JSON ({exc})") from None
    if not isinstance(data, dict):
        raise MalformedInputError(f"{source}: top-level JSON value must be an object")
    return data


def _set_list(universe: Universe, value: Any, what: str) -> list:
    if not isinstance(value, list) or not all(isinstance(x, list) for x in value):
        raise MalformedInputError(f"{what} must be a list of label lists")
    return [universe.parse(x) for x in value]


def space_from_dict(data: dict, *, check: bool = True) -> GtfSpace:
    if "universe" not in data:
        raise MalformedInputError("space file needs a 'universe' list")
    universe = Universe(tuple(data["universe"]))
    if ("mu" in data) == ("mu_generators" in data):
        raise MalformedInputError("space file needs exactly one of 'mu' or 'mu_generators'")
    if "mu" in data:
        topology = GeneralizedTopology(frozenset(_set_list(universe, data["mu"], "mu")))
    else:
        topology = build_topology(universe, _set_list(universe, data["mu_generators"], "mu_generators"))
    assoc = data.get("assoc", {})
    if not isinstance(assoc, dict):
        raise MalformedInputError("'assoc' must map point labels to lists of sets")
    orphan_assoc = {
        universe.index(label): _set_list(universe, fam, f"assoc[{label!r}]")
        for label, fam in assoc.items()
    }
    return make_space(universe, topology, orphan_assoc, check=check)


def load_space(source: PathOrData, *, check: bool = True) -> GtfSpace:
    return space_from_dict(_read(source), check=check)


def space_to_dict(space: GtfSpace) -> dict:
    """Serialize with ``mu`` spelled out and ``assoc`` listed for every orphan."""
    u = space.universe
    orphans = orphaned_points(space)
    return {
        "universe": list(u.labels),
        "mu": [u.labels_of(x) for x in sets.canonical(space.mu)],
        "assoc": {
            u.labels[w]: [u.labels_of(x) for x in sets.canonical(space.assoc[w])]
            for w in sets.iter_bits(orphans)
        },
    }


def dump_space(space: GtfSpace, path: Union[str, Path, None] = None) -> str:
    text = json.dumps(space_to_dict(space), ensure_ascii=False, indent=2)
    if path is not None:
        Path(path).write_text(text + "\n", encoding="utf-8")
    return text


def gnet_from_dict(data: dict, universe: Universe) -> Gnet:
    for key in ("elements", "map"):
        if key not in data:
            raise MalformedInputError(f"gnet file needs '{key}'")
    elements = [str(e) for e in data["elements"]]
    pairs = data.get("leq", [])
    if not all(isinstance(p, list) and len(p) == 2 for p in pairs):
        raise MalformedInputError("'leq' must be a list of [a, b] pairs")
    if data.get("covers", False):
        poset = FinitePoset.from_covers(elements, pairs)
    else:
        poset = FinitePoset.from_pairs(elements, pairs)
    mapping = data["map"]
    missing = [e for e in elements if e not in mapping]
    if missing:
        raise MalformedInputError(f"gnet map has no value for {missing}")
    extra = set(map(str, mapping)) - set(elements)
    if extra:
        raise MalformedInputError(f"gnet map mentions unknown elements {sorted(extra)}")
    return Gnet(poset, tuple(universe.index(mapping[e]) for e in elements))


def load_gnet(source: PathOrData, universe: Universe) -> Gnet:
    return gnet_from_dict(_read(source), universe)


def gnet_to_dict(g: Gnet, universe: Universe) -> dict:
    p = g.domain
    return {
        "elements": list(p.elements),
        "leq": [list(pair) for pair in p.pairs()],
        "map": {e: universe.labels[v] for e, v in zip(p.elements, g.values)},
    }
