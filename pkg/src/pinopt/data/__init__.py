"""Bundled fixture networks."""

from importlib import resources

from ..graphs import Graph, parse_edge_list

__all__ = ["load_dolphins"]


def load_dolphins() -> Graph:
    """The 62-node, 159-edge dolphin social network (0-based node ids)."""
    text = resources.files(__package__).joinpath("dolphins.txt").read_text(encoding="utf-8")
    return parse_edge_list(text)
