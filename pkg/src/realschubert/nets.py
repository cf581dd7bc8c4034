"""Noncrossing chord diagrams with block structure, and their bijection with SSYT.

Vertices ``1..2d-2`` sit on the real line from left to right and are cut
into consecutive blocks of sizes ``a_1, ..., a_q``. A net is a noncrossing
perfect matching of the vertices in which no chord joins two vertices of
the same block.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .combinatorics import ContentVector, Tableau, as_content, enumerate_ssyt
from .errors import MalformedNet, MalformedTableau

Edge = tuple[int, int]


@dataclass(frozen=True)
class BlockStructure:
    content: ContentVector
    block_of: tuple[int, ...]  # block_of[v - 1] is the block index of vertex v

    @classmethod
    def from_content(cls, content) -> "BlockStructure":
        content = as_content(content)
        block_of = []
        for j, a in enumerate(content.entries, start=1):
            block_of.extend([j] * a)
        return cls(content, tuple(block_of))

    @property
    def vertex_count(self) -> int:
        return len(self.block_of)

    def block(self, v: int) -> int:
        return self.block_of[v - 1]

    def vertices(self, j: int) -> list[int]:
        return [v for v in range(1, self.vertex_count + 1) if self.block_of[v - 1] == j]


def _crosses(e: Edge, f: Edge) -> bool:
    (i, k), (j, l) = sorted((e, f))
    return i < j < k < l


@dataclass(frozen=True)
class Net:
    blocks: BlockStructure
    edges: tuple[Edge, ...]

    def __post_init__(self):
        edges = tuple(sorted(tuple(sorted(e)) for e in self.edges))
        object.__setattr__(self, "edges", edges)

    def partner(self, v: int) -> int:
        for i, k in self.edges:
            if i == v:
                return k
            if k == v:
                return i
        raise MalformedNet(f"vertex {v} is unmatched")

    def violations(self) -> list[str]:
        n = self.blocks.vertex_count
        problems = []
        seen = [v for e in self.edges for v in e]
        if sorted(seen) != list(range(1, n + 1)):
            problems.append("not a perfect matching of 1..%d" % n)
        for idx, e in enumerate(self.edges):
            if e[0] == e[1]:
                problems.append(f"loop at {e[0]}")
            elif all(1 <= v <= n for v in e) and self.blocks.block(e[0]) == self.blocks.block(e[1]):
                problems.append(f"edge {e} joins two vertices of block {self.blocks.block(e[0])}")
            for f in self.edges[idx + 1:]:
                if _crosses(e, f):
                    problems.append(f"edges {e} and {f} cross")
        return problems

    def is_valid(self) -> bool:
        return not self.violations()

    def __str__(self) -> str:
        return " ".join(f"({i},{k})" for i, k in self.edges)


def _matchings(vertices: list[int], blocks: BlockStructure) -> Iterator[list[Edge]]:
    if not vertices:
        yield []
        return
    first = vertices[0]
    # the partner must leave an even number of vertices strictly inside the chord
    for pos in range(1, len(vertices), 2):
        other = vertices[pos]
        if blocks.block(first) == blocks.block(other):
            continue
        for inner in _matchings(vertices[1:pos], blocks):
            for outer in _matchings(vertices[pos + 1:], blocks):
                yield [(first, other)] + inner + outer


def enumerate_nets(blocks) -> list[Net]:
    """Every admissible net on the given block structure, sorted by edge list."""
    if not isinstance(blocks, BlockStructure):
        blocks = BlockStructure.from_content(blocks)
    verts = list(range(1, blocks.vertex_count + 1))
    nets = [Net(blocks, tuple(m)) for m in _matchings(verts, blocks)]
    nets.sort(key=lambda net: net.edges)
    return nets


def net_to_ssyt(net: Net) -> Tableau:
    """Read a tableau off a net.

    Scanning vertices left to right, the block index of a vertex goes to the
    first row when its chord points right and to the second row otherwise.
    """
    problems = net.violations()
    if problems:
        raise MalformedNet("; ".join(problems))
    row1: list[int] = []
    row2: list[int] = []
    for v in range(1, net.blocks.vertex_count + 1):
        j = net.blocks.block(v)
        (row1 if net.partner(v) > v else row2).append(j)
    return Tableau(tuple(row1), tuple(row2))


def ssyt_to_net(tab: Tableau, blocks=None) -> Net:
    """Build the net of a tableau by repeatedly pairing off its second row.

    At each step ``k`` is the first entry of the second row and ``m`` the
    rightmost first-row entry strictly below ``k``; the leftmost free vertex
    of block ``k`` is joined to the rightmost free vertex of block ``m``.
    Each new chord is checked to enclose no free vertex and cross no
    earlier chord.
    """
    if blocks is None:
        counts: dict[int, int] = {}
        for x in tab.row1 + tab.row2:
            counts[x] = counts.get(x, 0) + 1
        blocks = BlockStructure.from_content([counts.get(j, 0) for j in range(1, max(counts) + 1)])
    elif not isinstance(blocks, BlockStructure):
        blocks = BlockStructure.from_content(blocks)
    if not tab.is_valid(blocks.content):
        raise MalformedTableau(f"{tab} is not an SSYT with content {blocks.content.entries}")

    row1 = list(tab.row1)
    row2 = list(tab.row2)
    free = {j: blocks.vertices(j) for j in range(1, blocks.content.q + 1)}
    edges: list[Edge] = []
    while row2:
        k = row2.pop(0)
        candidates = [i for i, m in enumerate(row1) if m < k]
        if not candidates:
            raise MalformedTableau(f"no first-row entry below {k} in {row1}")
        idx = candidates[-1]
        m = row1.pop(idx)
        left = free[m].pop()  # rightmost free vertex of block m
        right = free[k].pop(0)  # leftmost free vertex of block k
        enclosed = [v for vs in free.values() for v in vs if left < v < right]
        assert not enclosed, f"chord ({left},{right}) encloses free vertices {enclosed}"
        edge = (left, right)
        assert not any(_crosses(edge, e) for e in edges), f"chord {edge} crosses {edges}"
        edges.append(edge)
    return Net(blocks, tuple(edges))


def bijection_report(max_d: int) -> list[dict]:
    """Run both round trips and the count check for every content with ``d <= max_d``."""
    from .combinatorics import kostka, valid_contents

    rows = []
    for d in range(2, max_d + 1):
        for content in valid_contents(d):
            blocks = BlockStructure.from_content(content)
            nets = enumerate_nets(blocks)
            tabs = enumerate_ssyt(content)
            k = kostka(content)
            net_trip = all(ssyt_to_net(net_to_ssyt(n), blocks) == n for n in nets)
            tab_trip = all(net_to_ssyt(ssyt_to_net(t, blocks)) == t for t in tabs)
            rows.append({
                "d": d,
                "content": list(content.entries),
                "kostka": k,
                "nets": len(nets),
                "ssyt": len(tabs),
                "net_round_trip": net_trip,
                "ssyt_round_trip": tab_trip,
                "ok": len(nets) == k == len(tabs) and net_trip and tab_trip,
            })
    return rows


def nets_with_tableaux(content) -> Iterable[tuple[Net, Tableau]]:
    for net in enumerate_nets(BlockStructure.from_content(content)):
        yield net, net_to_ssyt(net)
