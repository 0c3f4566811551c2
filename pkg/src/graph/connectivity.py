"""
Connectivity: Strongly connected components and the closed-path special case
"""
from .graph import Graph


def scc_decomposition(g: Graph, skip_arc: int | None = None) -> list[int]:
    """
    Map each node to a component id with an iterative Tarjan traversal.

    Arc `skip_arc` (if given) is treated as absent, which is how G minus f is
    decomposed without copying the graph. Component ids are assigned in the
    order components are completed (reverse topological order).
    """
    n = g.node_count
    heads = g.heads
    out_arcs = g.out_arcs
    preorder = [-1] * n
    lowlink = [0] * n
    component = [-1] * n
    on_stack = [False] * n
    scc_stack: list[int] = []
    counter = 0
    next_component = 0

    for source in range(n):
        if preorder[source] != -1:
            continue
        # Frames are (node, position in its out-arc list)
        frames: list[list[int]] = [[source, 0]]
        preorder[source] = lowlink[source] = counter
        counter += 1
        scc_stack.append(source)
        on_stack[source] = True

        while frames:
            frame = frames[-1]
            v, pos = frame
            arcs = out_arcs[v]
            descended = False
            while pos < len(arcs):
                e = arcs[pos]
                pos += 1
                if e == skip_arc:
                    continue
                w = heads[e]
                if preorder[w] == -1:
                    frame[1] = pos
                    preorder[w] = lowlink[w] = counter
                    counter += 1
                    scc_stack.append(w)
                    on_stack[w] = True
                    frames.append([w, 0])
                    descended = True
                    break
                if on_stack[w] and preorder[w] < lowlink[v]:
                    lowlink[v] = preorder[w]
            if descended:
                continue

            frames.pop()
            if frames:
                parent = frames[-1][0]
                if lowlink[v] < lowlink[parent]:
                    lowlink[parent] = lowlink[v]
            if lowlink[v] == preorder[v]:
                while True:
                    w = scc_stack.pop()
                    on_stack[w] = False
                    component[w] = next_component
                    if w == v:
                        break
                next_component += 1

    return component


def is_strongly_connected(g: Graph) -> bool:
    if g.node_count == 0:
        return False
    component = scc_decomposition(g)
    return all(c == component[0] for c in component)


def nontrivial_components(g: Graph) -> list[list[int]]:
    """Node sets of the SCCs that contain at least one arc, ordered by smallest node"""
    component = scc_decomposition(g)
    members: dict[int, list[int]] = {}
    for v, c in enumerate(component):
        members.setdefault(c, []).append(v)
    has_arc = {component[t] for _, t, h in g.arcs() if component[t] == component[h]}
    groups = [nodes for c, nodes in members.items() if c in has_arc]
    return sorted(groups, key=lambda nodes: nodes[0])


def is_closed_path(g: Graph) -> bool:
    """True iff g is a single directed cycle through every node and arc once"""
    if g.node_count == 0:
        return False
    if any(g.out_degree(v) != 1 or g.in_degree(v) != 1 for v in range(g.node_count)):
        return False
    return is_strongly_connected(g)
