"""Write the connected 8-vertex graphs, one per isomorphism class, as graph6.

Independent of the package: isomorphism classes come from nauty certificates
(pynauty) and graph6 encoding from networkx.

    python tools/make_catalog.py [n] [out]
"""

import sys

import networkx as nx
import pynauty


def classes(n):
    """Certificates -> adjacency dicts, for all graphs on n vertices."""
    if n == 1:
        return {b"": {0: []}}
    out = {}
    for adj in classes(n - 1).values():
        for mask in range(1 << (n - 1)):
            new = {v: list(nb) for v, nb in adj.items()}
            new[n - 1] = []
            for v in range(n - 1):
                if mask >> v & 1:
                    new[v].append(n - 1)
                    new[n - 1].append(v)
            cert = pynauty.certificate(pynauty.Graph(n, adjacency_dict=new))
            out.setdefault(cert, new)
    return out


def main():
    n = int(sys.argv[1]) if len(sys.argv) > 1 else 8
    path = sys.argv[2] if len(sys.argv) > 2 else f"tests/data/connected{n}.g6"
    lines = []
    for adj in classes(n).values():
        g = nx.Graph()
        g.add_nodes_from(range(n))
        g.add_edges_from((u, v) for u, nb in adj.items() for v in nb)
        if nx.is_connected(g):
            lines.append(nx.to_graph6_bytes(g, header=False).decode().strip())
    lines.sort()
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")
    print(f"{len(lines)} connected graphs on {n} vertices -> {path}")


if __name__ == "__main__":
    main()
