from pathlib import Path
from typing import AbstractSet, Union

import networkx as nx
from networkx.drawing.nx_pydot import write_dot

from src.btree.probe import BallProbe
from src.btree.vertex import neighbors
from src.localfield import LocalField


def ball_graph(
    probe: BallProbe,
    field: LocalField,
    fixed: AbstractSet = frozenset(),
    axis: AbstractSet = frozenset(),
) -> nx.Graph:
    """The probed ball as an undirected graph; nodes carry depth and fixed/axis flags."""
    graph = nx.Graph(name=f"ball r={probe.radius} q={field.q}")
    ids = {}
    for depth, layer in enumerate(probe.layers):
        for v in layer:
            ids[v] = f"v{len(ids)}"
            color = "black"
            if v in fixed and v in axis:
                color = "purple"
            elif v in fixed:
                color = "blue"
            elif v in axis:
                color = "red"
            graph.add_node(ids[v], label=f'"{v}"', depth=depth, color=color)
    for v, node in ids.items():
        for w in neighbors(v, field):
            if w in ids:
                graph.add_edge(node, ids[w])
    return graph


def dump_dot(graph: nx.Graph, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    write_dot(graph, str(path))
    return path
