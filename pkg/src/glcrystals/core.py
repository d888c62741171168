"""Model-independent crystal machinery.

A crystal model exposes a rank k, a weight map into Z^k, and partial raising
and lowering operators e_i, f_i for node indices i in {1, ..., k-1}; elements
are opaque hashable values owned by the model.  Everything else here is
generic over that contract: connected components, extremal elements, the
Schutzenberger involution, Kashiwara reflections, axiom and morphism
verifiers, characters, and DOT export.

Absent results are represented by None, never by sentinel elements.
"""

from collections import Counter
from dataclasses import dataclass

from .base import Weight, add_root, pairing, theta_on_nodes


class Crystal:
    """Abstract crystal contract.  Subclasses implement weight, e, f and may
    override eps/phi with model-specific formulas (the default counts
    operator applications).
    """

    rank: int

    def __init__(self, rank: int):
        self.rank = rank
        # memo caches, keyed by node tuple; values map element -> result.
        # Dict mutation is atomic in CPython, so concurrent readers are safe;
        # at worst two workers recompute the same pure value.
        self._xi_cache: dict = {}
        self._component_cache: dict = {}

    # -- required model surface ------------------------------------------
    def weight(self, b) -> Weight:
        raise NotImplementedError

    def e(self, i: int, b):
        raise NotImplementedError

    def f(self, i: int, b):
        raise NotImplementedError

    # -- derived quantities ----------------------------------------------
    def eps(self, i: int, b) -> int:
        """Number of times e_i applies before hitting None."""
        n = 0
        x = self.e(i, b)
        while x is not None:
            n += 1
            x = self.e(i, x)
        return n

    def phi(self, i: int, b) -> int:
        n = 0
        x = self.f(i, b)
        while x is not None:
            n += 1
            x = self.f(i, x)
        return n

    def nodes(self) -> tuple[int, ...]:
        return tuple(range(1, self.rank))

    def canon(self, b) -> str:
        """Canonical element string; deterministic, used for DOT ids and
        report witnesses."""
        return repr(b)


@dataclass(frozen=True)
class Component:
    """A connected component of the graph restricted to some node subset."""
    elements: frozenset
    highest: object
    lowest: object


@dataclass
class Report:
    """Outcome of a verifier: pass, or fail with the first witness found."""
    name: str
    instance: dict
    checked: int
    status: str
    witness: str | None = None

    @property
    def ok(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> dict:
        return {"name": self.name, "instance": self.instance,
                "checked": self.checked, "status": self.status,
                "witness": self.witness}


def _fail(name, instance, checked, witness) -> Report:
    return Report(name, instance, checked, "fail", witness)


def _passed(name, instance, checked) -> Report:
    return Report(name, instance, checked, "pass")


def component(crystal: Crystal, b, nodes: tuple[int, ...]) -> Component:
    """Connected component of b under the e/f edges coloured by `nodes`.

    Asserts exactly one highest-weight and one lowest-weight element; a
    violation means the model is broken.  Components are memoized per node
    tuple, so repeated involution queries inside cactus words stay cheap.
    """
    nodes = tuple(nodes)
    cache = crystal._component_cache.setdefault(nodes, {})
    hit = cache.get(b)
    if hit is not None:
        return hit
    seen = {b}
    frontier = [b]
    while frontier:
        x = frontier.pop()
        for j in nodes:
            for y in (crystal.e(j, x), crystal.f(j, x)):
                if y is not None and y not in seen:
                    seen.add(y)
                    frontier.append(y)
    highs = [x for x in seen if all(crystal.e(j, x) is None for j in nodes)]
    lows = [x for x in seen if all(crystal.f(j, x) is None for j in nodes)]
    if len(highs) != 1 or len(lows) != 1:
        raise ValueError(
            f"component of {crystal.canon(b)} on nodes {nodes} has "
            f"{len(highs)} highest / {len(lows)} lowest weight elements")
    comp = Component(frozenset(seen), highs[0], lows[0])
    for x in seen:
        cache[x] = comp
    return comp


def components(crystal: Crystal, elements, nodes: tuple[int, ...]) -> list[Component]:
    """Partition a closed element set into connected components.

    Raises if the set is not closed under the coloured edges (caller
    precondition) and orders the result by canonical highest-element string.
    """
    nodes = tuple(nodes)
    pool = set(elements)
    out = []
    for b in elements:
        if b not in pool:
            continue
        comp = component(crystal, b, nodes)
        if not comp.elements <= pool:
            stray = next(iter(comp.elements - pool))
            raise ValueError(
                f"element set not closed under edges: reached {crystal.canon(stray)}")
        pool -= comp.elements
        out.append(comp)
    out.sort(key=lambda c: crystal.canon(c.highest))
    return out


def to_highest_path(crystal: Crystal, b, nodes: tuple[int, ...]):
    """Greedy raising with smallest node first; returns (highest, path).

    The recorded path lists the applied node indices in application order,
    so lowering along the reversed path from the highest element returns b.
    """
    path = []
    x = b
    while True:
        for j in nodes:
            y = crystal.e(j, x)
            if y is not None:
                x = y
                path.append(j)
                break
        else:
            return x, tuple(path)


def to_lowest(crystal: Crystal, b, nodes: tuple[int, ...]):
    x = b
    while True:
        for j in nodes:
            y = crystal.f(j, x)
            if y is not None:
                x = y
                break
        else:
            return x


def schuetzenberger(crystal: Crystal, b, nodes) -> object:
    """Schutzenberger involution of the restriction to `nodes`, applied to b.

    Computed per component by transport: the highest element maps to the
    lowest, and the image propagates along every edge with the node index
    twisted by the interval involution.  One sweep records the component's
    edges, fills the involution for all its elements, and memoizes both,
    which is what makes exhaustive verification sweeps affordable.  Path
    independence against the directed single-path variant is a tested
    property, not an assumption.

    An empty node set gives the identity.
    """
    nodes = tuple(nodes)
    if not nodes:
        return b
    table = crystal._xi_cache.setdefault(nodes, {})
    hit = table.get(b)
    if hit is not None:
        return hit
    e_edge = {j: {} for j in nodes}
    f_edge = {j: {} for j in nodes}
    seen = {b}
    frontier = [b]
    while frontier:
        x = frontier.pop()
        for j in nodes:
            y = crystal.e(j, x)
            if y is not None:
                e_edge[j][x] = y
                if y not in seen:
                    seen.add(y)
                    frontier.append(y)
            y = crystal.f(j, x)
            if y is not None:
                f_edge[j][x] = y
                if y not in seen:
                    seen.add(y)
                    frontier.append(y)
    highs = [x for x in seen if not any(x in e_edge[j] for j in nodes)]
    lows = [x for x in seen if not any(x in f_edge[j] for j in nodes)]
    if len(highs) != 1 or len(lows) != 1:
        raise ValueError(
            f"component of {crystal.canon(b)} on nodes {nodes} has "
            f"{len(highs)} highest / {len(lows)} lowest weight elements")
    comp = Component(frozenset(seen), highs[0], lows[0])
    comp_cache = crystal._component_cache.setdefault(nodes, {})
    for x in seen:
        comp_cache.setdefault(x, comp)
    xi = {comp.highest: comp.lowest}
    frontier = [comp.highest]
    try:
        while frontier:
            x = frontier.pop()
            img = xi[x]
            for j in nodes:
                tj = theta_on_nodes(nodes, j)
                y = f_edge[j].get(x)
                if y is not None and y not in xi:
                    xi[y] = e_edge[tj][img]
                    frontier.append(y)
                y = e_edge[j].get(x)
                if y is not None and y not in xi:
                    xi[y] = f_edge[tj][img]
                    frontier.append(y)
    except KeyError:
        raise ValueError(
            f"involution transport broke inside the component of "
            f"{crystal.canon(b)} on nodes {nodes}") from None
    if len(xi) != len(seen):
        raise ValueError("involution transport missed part of a component")
    table.update(xi)
    return table[b]


def schuetzenberger_by_path(crystal: Crystal, b, nodes, order: str = "smallest"):
    """Single-path variant: raise b to the highest element recording the
    node sequence (smallest or largest index first), then replay the
    sequence from the lowest element backwards with twisted indices.

    Exists as an independent route for the path-independence checks.
    """
    nodes = tuple(nodes)
    if not nodes:
        return b
    scan = nodes if order == "smallest" else tuple(reversed(nodes))
    path = []
    x = b
    while True:
        for j in scan:
            y = crystal.e(j, x)
            if y is not None:
                x = y
                path.append(j)
                break
        else:
            break
    comp = component(crystal, x, nodes)
    y = comp.lowest
    for j in reversed(path):
        y = crystal.e(theta_on_nodes(nodes, j), y)
        if y is None:
            raise ValueError("replay fell off the crystal")
    return y


def kashiwara_reflection(crystal: Crystal, b, i: int):
    """Single-node reflection: apply f_i or e_i |<wt, coroot_i>| times."""
    d = pairing(crystal.weight(b), i)
    x = b
    if d >= 0:
        for _ in range(d):
            x = crystal.f(i, x)
    else:
        for _ in range(-d):
            x = crystal.e(i, x)
    if x is None:
        raise ValueError(f"reflection fell off the crystal at {crystal.canon(b)}")
    return x


def check_crystal_axioms(crystal: Crystal, elements, nodes=None) -> Report:
    """Verify the defining axioms on a finite element set:

    - f_i(b) = c exactly when e_i(c) = b,
    - weights move by the simple root,
    - eps/phi equal the counts of repeated applications,
    - phi - eps equals the coroot pairing of the weight.
    """
    nodes = tuple(nodes) if nodes is not None else crystal.nodes()
    instance = {"rank": crystal.rank, "size": len(elements)}
    checked = 0
    for b in elements:
        wb = crystal.weight(b)
        for i in nodes:
            checked += 1
            c = crystal.f(i, b)
            if c is not None:
                if crystal.e(i, c) != b:
                    return _fail("axioms", instance, checked,
                                 f"e_{i} f_{i} != id at {crystal.canon(b)}")
                if crystal.weight(c) != add_root(wb, i, -1):
                    return _fail("axioms", instance, checked,
                                 f"f_{i} weight step wrong at {crystal.canon(b)}")
            c = crystal.e(i, b)
            if c is not None:
                if crystal.f(i, c) != b:
                    return _fail("axioms", instance, checked,
                                 f"f_{i} e_{i} != id at {crystal.canon(b)}")
                if crystal.weight(c) != add_root(wb, i, +1):
                    return _fail("axioms", instance, checked,
                                 f"e_{i} weight step wrong at {crystal.canon(b)}")
            ep, ph = crystal.eps(i, b), crystal.phi(i, b)
            if ep != Crystal.eps(crystal, i, b) or ph != Crystal.phi(crystal, i, b):
                return _fail("axioms", instance, checked,
                             f"eps/phi formula disagrees with iteration at "
                             f"{crystal.canon(b)}, node {i}")
            if ph - ep != pairing(wb, i):
                return _fail("axioms", instance, checked,
                             f"phi - eps != <wt, coroot> at {crystal.canon(b)}, node {i}")
    return _passed("axioms", instance, checked)


def character(crystal: Crystal, elements) -> Counter:
    """Weight multiset of an element set."""
    return Counter(crystal.weight(b) for b in elements)


def verify_involution_properties(crystal: Crystal, elements) -> Report:
    """Pointwise involution contract on an element set, for every interval:

    - the involution squares to the identity,
    - it swaps e_i with f at the twisted index and reverses the weight
      inside the interval's positions,
    - the componentwise transport agrees with directed path transport under
      both scan orders.
    """
    instance = {"rank": crystal.rank, "size": len(elements)}
    checked = 0
    k = crystal.rank
    all_nodes = []
    for p in range(1, k):
        for q in range(p + 1, k + 1):
            all_nodes.append(tuple(range(p, q)))
    for nodes in all_nodes:
        p, q = nodes[0], nodes[-1] + 1
        for b in elements:
            checked += 1
            xb = schuetzenberger(crystal, b, nodes)
            if schuetzenberger(crystal, xb, nodes) != b:
                return _fail("involution", instance, checked,
                             f"not an involution on {nodes} at {crystal.canon(b)}")
            wb = list(crystal.weight(b))
            wb[p - 1:q] = wb[p - 1:q][::-1]
            if list(crystal.weight(xb)) != wb:
                return _fail("involution", instance, checked,
                             f"weight not block-reversed on {nodes} at {crystal.canon(b)}")
            for i in nodes:
                ti = theta_on_nodes(nodes, i)
                lhs = crystal.e(i, xb)
                down = crystal.f(ti, b)
                rhs = None if down is None else schuetzenberger(crystal, down, nodes)
                if lhs != rhs:
                    return _fail("involution", instance, checked,
                                 f"e_{i} twist fails on {nodes} at {crystal.canon(b)}")
                lhs = crystal.f(i, xb)
                up = crystal.e(ti, b)
                rhs = None if up is None else schuetzenberger(crystal, up, nodes)
                if lhs != rhs:
                    return _fail("involution", instance, checked,
                                 f"f_{i} twist fails on {nodes} at {crystal.canon(b)}")
            small = schuetzenberger_by_path(crystal, b, nodes, "smallest")
            large = schuetzenberger_by_path(crystal, b, nodes, "largest")
            if small != xb or large != xb:
                return _fail("involution", instance, checked,
                             f"path transport disagrees on {nodes} at {crystal.canon(b)}")
    return _passed("involution", instance, checked)


def is_morphism(f_map, dom: Crystal, cod: Crystal, elements, nodes=None) -> Report:
    """Check that an element map is a crystal morphism on `elements`.

    f_map returns None for the distinguished absent value; conditions apply
    only where the image is present: weights and all eps/phi agree, and the
    map intertwines e_i and f_i wherever both sides are defined.
    """
    if dom.rank != cod.rank:
        raise ValueError("morphism endpoints must share a rank")
    nodes = tuple(nodes) if nodes is not None else dom.nodes()
    instance = {"rank": dom.rank, "size": len(elements)}
    checked = 0
    for b in elements:
        fb = f_map(b)
        if fb is None:
            continue
        checked += 1
        if dom.weight(b) != cod.weight(fb):
            return _fail("morphism", instance, checked,
                         f"weight not preserved at {dom.canon(b)}")
        for i in nodes:
            if dom.eps(i, b) != cod.eps(i, fb) or dom.phi(i, b) != cod.phi(i, fb):
                return _fail("morphism", instance, checked,
                             f"eps/phi not preserved at {dom.canon(b)}, node {i}")
            down = dom.f(i, b)
            if down is not None:
                lhs = f_map(down)
                rhs = cod.f(i, fb)
                if lhs != rhs:
                    return _fail("morphism", instance, checked,
                                 f"f_{i} not intertwined at {dom.canon(b)}")
            up = dom.e(i, b)
            if up is not None:
                lhs = f_map(up)
                rhs = cod.e(i, fb)
                if lhs != rhs:
                    return _fail("morphism", instance, checked,
                                 f"e_{i} not intertwined at {dom.canon(b)}")
    return _passed("morphism", instance, checked)


def export_graph(crystal: Crystal, elements, nodes=None) -> str:
    """DOT text for the coloured graph on `elements`.

    Vertex ids are canonical element strings in lexicographic order; each
    lowering edge b -> f_i(b) carries color=i.  Output is byte-stable for a
    fixed input.
    """
    nodes = tuple(nodes) if nodes is not None else crystal.nodes()
    named = sorted((crystal.canon(b), b) for b in elements)
    lines = ["digraph crystal {"]
    for name, b in named:
        w = crystal.weight(b)
        lines.append(f'  "{name}" [wt="[{",".join(str(x) for x in w)}]"];')
    for name, b in named:
        for i in nodes:
            c = crystal.f(i, b)
            if c is not None:
                lines.append(f'  "{name}" -> "{crystal.canon(c)}" [color={i}];')
    lines.append("}")
    return "\n".join(lines)
