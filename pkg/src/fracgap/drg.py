"""Distance-regularity, intersection arrays and the odd-girth corollary bounds."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .cycles import cycles_per_edge, enumerate_cycles, odd_cycle_decomposition, odd_girth
from .decomposition import certify
from .errors import BipartiteGraphError, CycleCountMismatch, InputError, NotDistanceRegularError
from .graph import Graph, distance_matrix, is_connected, is_regular
from .spectral import spectral_summary


@dataclass(frozen=True)
class IntersectionArray:
    b: tuple[int, ...]  # b_0 .. b_{D-1}
    c: tuple[int, ...]  # c_1 .. c_D

    def __post_init__(self):
        if len(self.b) != len(self.c) or not self.b:
            raise InputError("intersection array needs D >= 1 entries in both rows")
        if self.c[0] != 1:
            raise InputError("c_1 must be 1")
        if any(x < 1 for x in self.b) or any(x < 1 for x in self.c):
            raise InputError("b_i (i < D) and c_i must be positive")
        for i in range(self.D + 1):
            if self.a(i) < 0:
                raise InputError(f"a_{i} = k - b_{i} - c_{i} is negative")

    @property
    def D(self) -> int:
        return len(self.b)

    @property
    def k(self) -> int:
        return self.b[0]

    def b_at(self, i: int) -> int:
        return self.b[i] if i < self.D else 0

    def c_at(self, i: int) -> int:
        return 0 if i == 0 else self.c[i - 1]

    def a(self, i: int) -> int:
        return self.k - self.b_at(i) - self.c_at(i)

    def to_json(self) -> dict:
        return {"D": self.D, "k": self.k, "b": list(self.b), "c": list(self.c)}

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.b)) + "; " + ",".join(map(str, self.c)) + "}"


@dataclass(frozen=True)
class DRGCheck:
    array: IntersectionArray | None
    witness: dict | None

    @property
    def distance_regular(self) -> bool:
        return self.array is not None

    def __bool__(self) -> bool:
        return self.distance_regular

    def to_json(self) -> dict:
        return {
            "distance_regular": self.distance_regular,
            "array": self.array.to_json() if self.array else None,
            "witness": self.witness,
        }


def check_distance_regular(g: Graph) -> DRGCheck:
    """Intersection array, or the first pair (u, v) whose counts disagree with an earlier pair.

    Irregular graphs fail at distance 0 (b_0 is the degree), so they yield a
    witness instead of an exception.
    """
    if not is_connected(g):
        raise InputError("distance-regularity is checked on connected graphs only")
    dist = distance_matrix(g)
    diam = int(dist.max())
    b: dict[int, tuple[int, int, int]] = {}
    c: dict[int, tuple[int, int, int]] = {}
    for u in range(g.n):
        du = dist[u]
        for v in range(g.n):
            i = int(du[v])
            nb = g.neighbors[v]
            up = sum(1 for w in nb if du[w] == i + 1)
            down = sum(1 for w in nb if du[w] == i - 1)
            for name, table, val in (("b", b, up), ("c", c, down)):
                if i not in table:
                    table[i] = (val, u, v)
                elif table[i][0] != val:
                    first = table[i]
                    return DRGCheck(None, {
                        "parameter": f"{name}_{i}",
                        "distance": i,
                        "pair": [u, v],
                        "value": val,
                        "reference_pair": [first[1], first[2]],
                        "reference_value": first[0],
                    })
    arr = IntersectionArray(tuple(b[i][0] for i in range(diam)), tuple(c[i][0] for i in range(1, diam + 1)))
    return DRGCheck(arr, None)


def path_count_p(ia: IntersectionArray, h: int) -> int:
    """Number of geodesics of length h between two vertices at distance h: c_1 c_2 ... c_h."""
    if not 1 <= h <= ia.D:
        raise InputError(f"h must lie in 1..D={ia.D}, got {h}")
    return math.prod(ia.c[:h])


def common_distance_q(g: Graph, h: int) -> int:
    """Common value over edges xy of |{v : d(x,v) = d(y,v) = h}|."""
    dist = distance_matrix(g)
    values = {}
    for x, y in g.sorted_edges:
        values[(x, y)] = int(((dist[x] == h) & (dist[y] == h)).sum())
    distinct = set(values.values())
    if len(distinct) != 1:
        raise NotDistanceRegularError(
            f"q varies across edges: {sorted(distinct)}", details={"values": sorted(distinct)}
        )
    q = distinct.pop()
    if q <= 0:
        raise NotDistanceRegularError(f"q = {q}; expected a positive count at distance {h}")
    return q


def predicted_cycle_count(p: int, q: int) -> int:
    return p * p * q


def cross_check_cycle_count(g: Graph, ia: IntersectionArray | None = None) -> dict:
    """Compare p^2 q with the enumerated per-edge count of shortest odd cycles; raises on mismatch."""
    og = odd_girth(g)
    if og is None:
        raise BipartiteGraphError("bipartite graph has no odd girth")
    h = (og - 1) // 2
    if ia is None:
        chk = check_distance_regular(g)
        if not chk:
            raise NotDistanceRegularError("graph is not distance-regular", details=chk.witness)
        ia = chk.array
    p = path_count_p(ia, h)
    q = common_distance_q(g, h)
    counts = cycles_per_edge(g, og, enumerate_cycles(g, og))
    predicted = predicted_cycle_count(p, q)
    if not counts.uniform or counts.value != predicted:
        raise CycleCountMismatch(
            f"p^2 q = {predicted} but enumeration gives {sorted(set(counts.counts.values()))}",
            details={"p": p, "q": q},
        )
    return {"h": h, "p": p, "q": q, "per_edge": predicted}


def corollary_bound(k: float, h: int) -> float:
    """(1 - cos(pi / (2h+1))) k."""
    return (1.0 - math.cos(math.pi / (2 * h + 1))) * k


def taylor_minorant(k: float, h: int) -> float:
    """(pi^2 / (2 g^2) - pi^4 / (24 g^4)) k with g = 2h+1; strictly below ``corollary_bound``."""
    g = 2 * h + 1
    return (math.pi**2 / (2 * g**2) - math.pi**4 / (24 * g**4)) * k


def sharpness_coefficient(g: int) -> float:
    """2 cos^2((g-1) pi / (2g)), the value of delta(C_g) / 2."""
    return 2.0 * math.cos((g - 1) * math.pi / (2 * g)) ** 2


def drg_bound(g: Graph) -> dict:
    """Odd-girth data, both corollary values and the certified bound from the odd-cycle decomposition.

    h is always taken from the odd girth, never supplied by the caller.
    """
    og = odd_girth(g)
    if og is None:
        raise BipartiteGraphError("graph is bipartite; delta(G) = 0")
    h = (og - 1) // 2
    decomp = odd_cycle_decomposition(g)
    k = is_regular(g)
    if k is None:
        raise InputError("host graph is not regular")
    cert = certify(g, decomp, compute_actual=False)
    chk = check_distance_regular(g)
    return {
        "k": k,
        "h": h,
        "g": og,
        "distance_regular": chk.distance_regular,
        "corollary_bound": corollary_bound(k, h),
        "taylor_minorant": taylor_minorant(k, h),
        "certified_bound": cert.bound,
        "certificate_valid": cert.valid,
        "failed_stage": cert.failed_stage,
        "delta_actual": spectral_summary(g).delta,
    }
