"""Deterministic box enumeration and the density experiments.

Scans enumerate integer vectors in a coordinate box in lexicographic
order, project them onto V, and collect exact signed rays. Covering
radius against a Fibonacci-sphere grid is the desk-scale measure of
density. No randomness anywhere in this module.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Optional

import numpy as np

from .errors import DimensionMismatch, EmptyCloud, InvalidBound, InvalidSignature
from .linalg import GramLattice, HyperTriple, signature, triple_gram_rows
from .twistor import TwistorPoint, stereographic


@dataclass(frozen=True)
class ScanConfig:
    box_bound: int
    coordinate_mask: Optional[tuple[int, ...]] = None
    grid_resolution: int = 100

    def __post_init__(self):
        if self.box_bound < 1:
            raise InvalidBound("box_bound must be >= 1")
        if self.grid_resolution < 2:
            raise InvalidBound("grid_resolution must be >= 2")
        if self.coordinate_mask is not None:
            object.__setattr__(
                self, "coordinate_mask",
                tuple(sorted(set(int(i) for i in self.coordinate_mask))))

    def active_indices(self, rank: int) -> tuple[int, ...]:
        if self.coordinate_mask is None:
            return tuple(range(rank))
        for i in self.coordinate_mask:
            if not 0 <= i < rank:
                raise DimensionMismatch(f"mask index {i} out of range for rank {rank}")
        return self.coordinate_mask


class PointCloud:
    """Finite set of exact twistor points, each with one witness vector.

    Insertion order is the enumeration order; emission sorts by ray."""

    def __init__(self):
        self._entries: dict[TwistorPoint, tuple[int, ...]] = {}

    def add(self, point: TwistorPoint, witness: tuple[int, ...]):
        self._entries.setdefault(point, witness)

    def __len__(self):
        return len(self._entries)

    def __contains__(self, point):
        return point in self._entries

    def __iter__(self):
        return iter(self._entries)

    def witness(self, point: TwistorPoint) -> tuple[int, ...]:
        return self._entries[point]

    def rays(self) -> set[tuple[int, int, int]]:
        return {p.dir for p in self._entries}

    def sorted_points(self) -> list[TwistorPoint]:
        return sorted(self._entries, key=lambda p: p.dir)

    def unit_array(self) -> np.ndarray:
        return np.array([p.unit for p in self._entries])


def box_vectors(rank: int, config: ScanConfig) -> Iterator[tuple[int, ...]]:
    """All nonzero integer vectors with masked coordinates in
    [-B, B], lexicographic order, unmasked coordinates fixed to 0."""
    active = config.active_indices(rank)
    b = config.box_bound
    k = len(active)
    counter = [-b] * k
    while True:
        if any(counter):
            v = [0] * rank
            for i, c in zip(active, counter):
                v[i] = c
            yield tuple(v)
        # increment like an odometer, last coordinate fastest
        pos = k - 1
        while pos >= 0 and counter[pos] == b:
            counter[pos] = -b
            pos -= 1
        if pos < 0:
            return
        counter[pos] += 1


def _box_array(rank: int, config: ScanConfig) -> np.ndarray:
    """Same vectors as box_vectors, as an int64 array (rows in the same
    lexicographic order, zero row removed)."""
    active = config.active_indices(rank)
    b = config.box_bound
    rng = np.arange(-b, b + 1, dtype=np.int64)
    grids = np.meshgrid(*([rng] * len(active)), indexing="ij")
    block = np.stack(grids, axis=-1).reshape(-1, len(active))
    block = block[np.any(block != 0, axis=1)]
    out = np.zeros((block.shape[0], rank), dtype=np.int64)
    out[:, list(active)] = block
    return out


def _check_hyperkahler_signature(lattice: GramLattice):
    sig = signature(lattice)
    if sig.as_tuple() != (3, lattice.rank - 3, 0):
        raise InvalidSignature(
            f"twistor scans need signature (3, r-3, 0); got {sig.as_tuple()}")


def _projection_rays(lattice: GramLattice, triple: HyperTriple,
                     config: ScanConfig):
    """Box vectors with their q-norms and primitive projection rays."""
    triple.validate(lattice)
    vecs = _box_array(lattice.rank, config)
    gram = np.array(lattice.gram, dtype=np.int64)
    rows = np.array(triple_gram_rows(lattice, triple), dtype=np.int64)
    qvv = np.einsum("ij,jk,ik->i", vecs, gram, vecs)
    t = vecs @ rows.T
    g = np.gcd.reduce(np.abs(t), axis=1)
    return vecs, qvv, t, g


def scan_algebraic(lattice: GramLattice, triple: HyperTriple,
                   config: ScanConfig) -> PointCloud:
    """Projections of all positive integral box vectors: the box
    truncation of the set of algebraic twistor points."""
    _check_hyperkahler_signature(lattice)
    vecs, qvv, t, g = _projection_rays(lattice, triple, config)
    cloud = PointCloud()
    for i in np.nonzero(qvv > 0)[0]:
        gi = g[i]
        if gi == 0:
            raise InvalidSignature(
                "positive vector with zero projection; V^perp not negative definite")
        ray = (int(t[i, 0] // gi), int(t[i, 1] // gi), int(t[i, 2] // gi))
        cloud.add(TwistorPoint.from_ray(*ray), tuple(int(e) for e in vecs[i]))
    return cloud


def scan_non_general_type(lattice: GramLattice, triple: HyperTriple,
                          config: ScanConfig) -> PointCloud:
    """Signed projection rays of all integral box vectors with nonzero
    projection: the box truncation of the non-general-type points.
    Both orientations of each ray are included."""
    _check_hyperkahler_signature(lattice)
    vecs, _, t, g = _projection_rays(lattice, triple, config)
    cloud = PointCloud()
    for i in np.nonzero(g > 0)[0]:
        gi = g[i]
        ray = (int(t[i, 0] // gi), int(t[i, 1] // gi), int(t[i, 2] // gi))
        witness = tuple(int(e) for e in vecs[i])
        point = TwistorPoint.from_ray(*ray)
        cloud.add(point, witness)
        cloud.add(TwistorPoint.from_ray(-ray[0], -ray[1], -ray[2]), witness)
    return cloud


def fibonacci_sphere(n: int) -> np.ndarray:
    """Deterministic near-uniform grid of n points on S^2."""
    i = np.arange(n)
    y = (i * (2.0 / n)) - 1.0 + 1.0 / n
    r = np.sqrt(np.maximum(0.0, 1.0 - y * y))
    phi = i * (math.pi * (3.0 - math.sqrt(5.0)))
    return np.column_stack((np.cos(phi) * r, y, np.sin(phi) * r))


def covering_radius(cloud: PointCloud, grid_resolution: int) -> float:
    """Max over a grid_resolution^2 Fibonacci grid of the angular
    distance to the nearest cloud point, in radians."""
    if len(cloud) == 0:
        raise EmptyCloud("covering radius of an empty cloud is undefined")
    grid = fibonacci_sphere(grid_resolution * grid_resolution)
    units = cloud.unit_array()
    # nearest neighbor by max cosine; chunk the grid to bound memory
    worst = -1.0
    for start in range(0, grid.shape[0], 65536):
        block = grid[start:start + 65536]
        best = np.max(block @ units.T, axis=1)
        worst = max(worst, float(np.max(np.arccos(np.clip(best, -1.0, 1.0)))))
    return worst


def _fmt(x: float) -> str:
    return format(x, ".17g")


def write_csv(cloud: PointCloud, stream):
    """Emit the cloud as CSV, sorted by exact ray."""
    stream.write("a,b,c,ux,uy,uz,cp1_re,cp1_im,witness\n")
    for p in cloud.sorted_points():
        a, b, c = p.dir
        z = stereographic(p)
        witness = ";".join(str(e) for e in cloud.witness(p))
        stream.write(
            f"{a},{b},{c},{_fmt(p.unit[0])},{_fmt(p.unit[1])},{_fmt(p.unit[2])},"
            f"{_fmt(z.real)},{_fmt(z.imag)},{witness}\n")


def _lambert(u, center_sign):
    # Lambert azimuthal equal-area, centered at (center_sign, 0, 0)
    x, y, z = u
    denom = 1.0 + center_sign * x
    if denom <= 1e-15:
        return None
    f = math.sqrt(2.0 / denom)
    return (f * y, f * center_sign * z)


def write_svg(cloud: PointCloud, stream, size: int = 400):
    """Scatter plot of the cloud: two Lambert equal-area hemispheres
    (around +a and -a) side by side."""
    pad = 10
    scale = (size - 2 * pad) / (2.0 * math.sqrt(2.0))
    width = 2 * size + pad
    stream.write(
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
        f'height="{size}" viewBox="0 0 {width} {size}">\n')
    centers = [(size / 2.0, 1.0), (size + pad + size / 2.0, -1.0)]
    for cx, _ in centers:
        stream.write(
            f'<circle cx="{cx:.2f}" cy="{size / 2.0:.2f}" '
            f'r="{math.sqrt(2.0) * scale:.2f}" fill="none" stroke="black"/>\n')
    for p in cloud.sorted_points():
        for cx, sgn in centers:
            if sgn * p.unit[0] < 0:
                continue
            xy = _lambert(p.unit, sgn)
            if xy is None:
                continue
            px = cx + xy[0] * scale
            py = size / 2.0 - xy[1] * scale
            stream.write(f'<circle cx="{px:.2f}" cy="{py:.2f}" r="1.5"/>\n')
    stream.write("</svg>\n")
