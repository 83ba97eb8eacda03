"""Regenerate the text fixtures under tests/fixtures (deterministic)."""

from __future__ import annotations

import itertools
import math
from pathlib import Path

from localdim.diffgraph import BipartiteGraph, DifferenceGraph, random_bipartite, staircase
from localdim.poset import boolean_lattice, chain, generate, standard_example

HERE = Path(__file__).parent


def bigraphs() -> dict[str, BipartiteGraph]:
    out: dict[str, BipartiteGraph] = {}
    for n in range(1, 5):
        out[f"staircase_{n}"] = staircase(n).to_bipartite()
    for a in range(1, 6):
        for b in range(a, 6):
            if a * b <= 10:
                out[f"complete_{a}x{b}"] = BipartiteGraph(a, b, itertools.product(range(1, a + 1), range(1, b + 1)))
    for k in range(1, 6):
        out[f"matching_{k}"] = BipartiteGraph(k, k, [(i, i) for i in range(1, k + 1)])
    for e in range(2, 10):
        # path u1 w1 u2 w2 ... with e edges
        edges = [((i + 2) // 2, (i + 1) // 2 + 1) if i % 2 else (i // 2 + 1, i // 2 + 1) for i in range(e)]
        a = max(r for r, _ in edges)
        b = max(c for _, c in edges)
        out[f"path_{e}"] = BipartiteGraph(a, b, edges)
    for k in range(2, 6):
        edges = [(i, i) for i in range(1, k + 1)] + [(i, i % k + 1) for i in range(1, k + 1)]
        out[f"cycle_{2 * k}"] = BipartiteGraph(k, k, edges)
    for k in (3, 4):
        out[f"crown_{k}"] = BipartiteGraph(k, k, [(i, j) for i in range(1, k + 1) for j in range(1, k + 1) if i != j])
    for f in [(3, 2, 2), (4, 2, 1), (3, 3, 1), (2, 2, 2, 1), (4, 3, 2, 1), (5, 3, 1, 1)]:
        out["diff_" + "".join(map(str, f))] = DifferenceGraph(f).to_bipartite()
    for seed in range(30):
        n1 = 2 + seed % 4
        n2 = 2 + (seed // 4) % 4
        out[f"random_{n1}x{n2}_s{seed}"] = random_bipartite(n1, n2, 1 / math.e, seed)
    return out


def posets() -> dict[str, str]:
    out = {}
    for n in (3, 4, 5):
        out[f"standard_example_{n}"] = standard_example(n)[0]
    out["boolean_lattice_3"] = boolean_lattice(3)[0]
    out["chain_4"] = chain(4)[0]
    out["layers_1_2_4"] = generate("layers", 1, 2, 4)[0]
    return {k: v.to_text() for k, v in out.items()}


def main() -> None:
    for name, G in bigraphs().items():
        (HERE / "bigraphs" / f"{name}.txt").write_text(G.to_text())
    for name, text in posets().items():
        (HERE / "posets" / f"{name}.txt").write_text(text)


if __name__ == "__main__":
    main()
