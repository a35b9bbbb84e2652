"""Meta-atom structure grids: symmetry reduction/expansion, value mapping,
binarization, and PGM export.

A full structure is a square matrix with four-fold mirror symmetry (invariant
under horizontal and vertical flips). The mirror axes run between cells, so a
full grid of even side S is fully determined by its upper-left S/2 x S/2
quadrant. Value conventions:

  binary01      entries in {0, 1} (fabricable structure; 1 = dielectric)
  signed        clean data mapped {0,1} -> {-1,+1}; noisy states may exceed it
  continuous01  arbitrary reals nominally in [0, 1] (e.g. pre-threshold output)
"""

from dataclasses import dataclass

import numpy as np

from .errors import OutOfRange, ShapeMismatch, SymmetryViolation

BINARY01 = "binary01"
SIGNED = "signed"
CONTINUOUS01 = "continuous01"

_TAGS = (BINARY01, SIGNED, CONTINUOUS01)

SYMMETRY_TOL = 1e-9


def _as_square(values, what):
    a = np.asarray(values, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ShapeMismatch(f"{what} must be a square 2D matrix, got shape {a.shape}")
    return a


@dataclass(frozen=True)
class StructureGrid:
    """Full meta-atom occupancy matrix (side S, S even for symmetric use)."""

    values: np.ndarray
    domain_tag: str = BINARY01

    def __post_init__(self):
        a = _as_square(self.values, "StructureGrid")
        object.__setattr__(self, "values", a)
        if self.domain_tag not in _TAGS:
            raise ValueError(f"unknown domain_tag {self.domain_tag!r}")
        if self.domain_tag == BINARY01 and not _is_binary(a):
            raise ValueError("binary01 grid contains entries outside {0, 1}")

    @property
    def side(self):
        return self.values.shape[0]


@dataclass(frozen=True)
class QuadrantGrid:
    """Upper-left quadrant of a symmetric structure (side S/2)."""

    values: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "values", _as_square(self.values, "QuadrantGrid"))

    @property
    def side(self):
        return self.values.shape[0]


# Fixed lower layer of every unit cell (documented constant, not a field).
LOWER_LAYER_N1 = 1.4
LOWER_LAYER_H1_UM = 2.0

W1_RANGE = (2.5, 3.0)
H2_RANGE = (0.5, 1.0)
N2_RANGE = (3.5, 5.0)


@dataclass(frozen=True)
class ExtraParams:
    """Substrate size W1 (um), thickness H2 (um) and refractive index N2."""

    w1: float
    h2: float
    n2: float

    def __post_init__(self):
        for name, value, (lo, hi) in (
            ("w1", self.w1, W1_RANGE),
            ("h2", self.h2, H2_RANGE),
            ("n2", self.n2, N2_RANGE),
        ):
            if not (lo <= value <= hi):
                from .errors import OutOfRange

                raise OutOfRange(f"{name}={value} outside [{lo}, {hi}]")


def _is_binary(a):
    return bool(np.all((a == 0.0) | (a == 1.0)))


def _infer_tag(a):
    if _is_binary(a):
        return BINARY01
    if np.all(a >= 0.0) and np.all(a <= 1.0):
        return CONTINUOUS01
    return SIGNED


def expand_symmetric(q):
    """Mirror a quadrant across both midlines into a full grid.

    output[i][j] == quadrant[min(i, S-1-i)][min(j, S-1-j)], so the result is
    exactly invariant under horizontal and vertical flips.
    """
    a = q.values if isinstance(q, QuadrantGrid) else _as_square(q, "quadrant")
    top = np.concatenate([a, a[:, ::-1]], axis=1)
    full = np.concatenate([top, top[::-1, :]], axis=0)
    return StructureGrid(full, _infer_tag(full))


def reduce_quadrant(g):
    """Return the upper-left quadrant of a flip-symmetric grid.

    Raises SymmetryViolation if any mirrored pair differs by more than
    SYMMETRY_TOL, or ShapeMismatch for odd side lengths.
    """
    a = g.values if isinstance(g, StructureGrid) else _as_square(g, "grid")
    s = a.shape[0]
    if s % 2 != 0:
        raise ShapeMismatch(f"symmetric reduction requires even side, got {s}")
    if (np.abs(a - a[:, ::-1]).max() > SYMMETRY_TOL
            or np.abs(a - a[::-1, :]).max() > SYMMETRY_TOL):
        raise SymmetryViolation("grid is not mirror-symmetric about both midlines")
    return QuadrantGrid(a[: s // 2, : s // 2].copy())


def is_symmetric(values):
    a = np.asarray(values)
    return bool(np.array_equal(a, a[:, ::-1]) and np.array_equal(a, a[::-1, :]))


def to_signed(g):
    """Map a binary01 grid elementwise v -> 2v - 1 into the signed domain."""
    if g.domain_tag != BINARY01:
        raise ValueError(f"to_signed expects a binary01 grid, got {g.domain_tag!r}")
    return StructureGrid(2.0 * g.values - 1.0, SIGNED)


def threshold01(values):
    """Binarize raw [0,1]-space values at 0.5 (>= 0.5 maps to 1)."""
    a = np.asarray(values, dtype=np.float64)
    return (a >= 0.5).astype(np.float64)


def signed_to_unit(values):
    """Map signed-space values back to [0,1] space: v -> (v + 1) / 2."""
    return (np.asarray(values, dtype=np.float64) + 1.0) / 2.0


def binarize(g):
    """Threshold a grid to binary01 at 0.5 in [0,1] space (idempotent).

    Signed grids are first mapped through v -> (v + 1) / 2.
    """
    v = g.values
    if g.domain_tag == SIGNED:
        v = signed_to_unit(v)
    return StructureGrid(threshold01(v), BINARY01)


def write_pgm(g, path):
    """Export a binary grid as plain-text PGM (P2, maxval 1)."""
    if g.domain_tag != BINARY01:
        raise ValueError("PGM export is defined for binary01 grids")
    s = g.side
    rows = [" ".join(str(int(v)) for v in row) for row in g.values]
    with open(path, "w") as fh:
        fh.write(f"P2\n{s} {s}\n1\n")
        fh.write("\n".join(rows))
        fh.write("\n")


def read_pgm(path):
    with open(path) as fh:
        tokens = []
        for line in fh:
            hash_pos = line.find("#")
            if hash_pos >= 0:
                line = line[:hash_pos]
            tokens.extend(line.split())
    if not tokens or tokens[0] != "P2":
        raise ValueError(f"{path}: not a plain PGM (P2) file")
    w, h, maxval = int(tokens[1]), int(tokens[2]), int(tokens[3])
    if maxval != 1:
        raise ValueError(f"{path}: expected maxval 1, got {maxval}")
    data = np.array([float(t) for t in tokens[4:]], dtype=np.float64)
    if data.size != w * h:
        raise ValueError(f"{path}: pixel count {data.size} != {w}x{h}")
    return StructureGrid(data.reshape(h, w), BINARY01)
