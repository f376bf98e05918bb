"""JSON / DOT serialization of crystal graphs and an on-disk cache."""

import hashlib
import json
import os
import tempfile
from pathlib import Path
from typing import Callable

from .crystal_core import CrystalGraph

FORMAT_VERSION = 1
CACHE_ENV = "E7KR_CACHE_DIR"
DEFAULT_CACHE_DIR = Path.home() / ".cache" / "e7kr"
ZERO_EDGE_STYLE = 'color="red", penwidth=2'


def _encode_key(b):
    if isinstance(b, tuple):
        return [_encode_key(x) for x in b]
    return b


def _decode_key(v):
    if isinstance(v, list):
        return tuple(_decode_key(x) for x in v)
    return v


def graph_to_dict(g: CrystalGraph) -> dict:
    pos = {b: k for k, b in enumerate(g.nodes)}
    nodes = [
        {"id": k, "key": _encode_key(b), "weight": list(g.weights[b]), "label": g.label(b)}
        for k, b in enumerate(g.nodes)
    ]
    edges = sorted(
        (pos[b], i, pos[t]) for (b, i), t in g.f_edges.items()
    )
    root = g.root_type if isinstance(g.root_type, str) else list(g.root_type)
    return {
        "format_version": FORMAT_VERSION,
        "metadata": {
            "type": g.metadata.get("type"),
            "s": g.metadata.get("s"),
            "index_set": sorted(g.index_set),
            "root_type": root,
        },
        "nodes": nodes,
        "edges": [{"src": a, "dst": c, "color": i} for a, i, c in edges],
    }


def graph_from_dict(data: dict) -> CrystalGraph:
    if data.get("format_version") != FORMAT_VERSION:
        raise ValueError(f"unsupported graph format version {data.get('format_version')}")
    meta = data["metadata"]
    keys = [_decode_key(n["key"]) for n in data["nodes"]]
    colors = frozenset(meta["index_set"])
    f_edges = {}
    for e in data["edges"]:
        if e["color"] not in colors:
            raise ValueError(f"edge color {e['color']} outside the index set")
        f_edges[(keys[e["src"]], e["color"])] = keys[e["dst"]]
    root = meta["root_type"]
    metadata = {k: meta[k] for k in ("type", "s") if meta.get(k) is not None}
    return CrystalGraph(
        nodes=keys,
        f_edges=f_edges,
        weights={b: tuple(n["weight"]) for b, n in zip(keys, data["nodes"])},
        index_set=colors,
        root_type=root if isinstance(root, str) else tuple(root),
        labels={b: n["label"] for b, n in zip(keys, data["nodes"])},
        metadata=metadata,
    )


def graph_to_json(g: CrystalGraph) -> str:
    return json.dumps(graph_to_dict(g), ensure_ascii=False, sort_keys=True, indent=1) + "\n"


def graph_from_json(text: str) -> CrystalGraph:
    return graph_from_dict(json.loads(text))


def graph_to_dot(g: CrystalGraph, name: str = "crystal") -> str:
    pos = {b: k for k, b in enumerate(g.nodes)}
    out = [f"digraph {name} {{"]
    for b, k in pos.items():
        label = g.label(b).replace("\\", "\\\\").replace('"', '\\"')
        out.append(f'  {k} [label="{label}"];')
    for a, i, c in sorted((pos[b], i, pos[t]) for (b, i), t in g.f_edges.items()):
        extra = f", {ZERO_EDGE_STYLE}" if i == 0 else ""
        out.append(f"  {a} -> {c} [label={i}{extra}];")
    out.append("}")
    return "\n".join(out) + "\n"


def graph_digest(g: CrystalGraph) -> str:
    return hashlib.sha256(graph_to_json(g).encode("utf-8")).hexdigest()


def atomic_write(path, text: str) -> None:
    """Write through a temporary file in the same directory, then rename."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def cache_dir(override=None) -> Path:
    if override:
        return Path(override)
    env = os.environ.get(CACHE_ENV)
    return Path(env) if env else DEFAULT_CACHE_DIR


def cache_path(kind: str, s: int, directory=None) -> Path:
    return cache_dir(directory) / f"{kind}-{s}-v{FORMAT_VERSION}.json"


def cached_graph(kind: str, s: int, build: Callable[[], CrystalGraph],
                 directory=None, refresh: bool = False) -> CrystalGraph:
    """Load ``kind``/``s`` from the cache, building and storing it on a miss.

    Unreadable or stale payloads are rebuilt.
    """
    path = cache_path(kind, s, directory)
    if path.exists() and not refresh:
        try:
            return graph_from_json(path.read_text(encoding="utf-8"))
        except (ValueError, KeyError):
            pass
    g = build()
    atomic_write(path, graph_to_json(g))
    return g
