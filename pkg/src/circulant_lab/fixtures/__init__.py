"""Named small-graph fixtures shipped as edge-list files."""
from importlib import resources

from circulant_lab.graphio import Graph, parse_edgelist

NAMES = ("k4", "k33", "cube3", "petersen", "heawood", "pappus")


def load(name: str) -> Graph:
    if name not in NAMES:
        raise KeyError(f"unknown fixture {name!r}; have {NAMES}")
    text = resources.files(__package__).joinpath(f"{name}.edgelist").read_text()
    return parse_edgelist(text)


def load_all() -> dict[str, Graph]:
    return {name: load(name) for name in NAMES}
