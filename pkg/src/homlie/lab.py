"""Randomized experiments over the space of skew algebras.

Genericity rates are estimated by sampling over a large prime field: a
fixed nonzero polynomial (a determinant or maximal minor) vanishes at a
uniform random point of F_p^N with probability at most deg/p
(Schwartz-Zippel), so observed full-rank fractions track the Zariski-open
locus up to that error. Reports are deterministic per seed.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field as dc_field

from . import rng
from .algebra import SkewAlgebra, make_algebra, random_algebra, random_invertible_map
from .field import QQ, Field, PrimeField
from .system import build_matrix, is_in_kernel, kernel_basis, rank as matrix_rank

DEFAULT_PRIME = 10007
DEFAULT_BOUND = 10


@dataclass
class SampleReport:
    """Nullity histogram of the Hom-Jacobi matrix over random algebras."""

    dim: int
    field: Field
    trials: int
    seed: int
    histogram: dict = dc_field(default_factory=dict)
    full_rank: int = 0
    elapsed: float = 0.0

    def to_obj(self) -> dict:
        # elapsed is intentionally left out: serialized reports are
        # reproducible functions of (dim, p, trials, seed)
        return {
            "dim": self.dim,
            "p": self.field.p,
            "trials": self.trials,
            "seed": self.seed,
            "histogram": {str(k): v for k, v in sorted(self.histogram.items())},
            "full_rank": self.full_rank,
        }


def genericity_experiment(dim: int, trials: int, field: Field, seed: int,
                          bound: int = DEFAULT_BOUND) -> SampleReport:
    """Sample `trials` random algebras and record the nullity of each."""
    if dim < 3:
        raise ValueError("genericity experiments need dimension >= 3")
    if trials < 1:
        raise ValueError("need at least one trial")
    if not isinstance(field, PrimeField):
        raise ValueError("genericity experiments run over a prime field")
    start = time.perf_counter()
    hist: dict[int, int] = {}
    full = 0
    for t in range(trials):
        A = random_algebra(dim, field, rng.split(seed, t), bound)
        M = build_matrix(A)
        nul = M.ncols - matrix_rank(M)
        hist[nul] = hist.get(nul, 0) + 1
        if nul == 0:
            full += 1
    return SampleReport(dim, field, trials, seed, hist, full,
                        time.perf_counter() - start)


def invariance_battery(A: SkewAlgebra, trials: int, seed: int,
                       bound: int = DEFAULT_BOUND) -> bool:
    """Check that nullity is a transport invariant and kernels conjugate.

    Draws `trials` random invertible maps g; for each, the transported
    algebra must have the same nullity, and g o f o g^-1 must stay in the
    transported kernel for every canonical kernel basis map f.
    """
    if trials < 1:
        raise ValueError("need at least one trial")
    base = kernel_basis(build_matrix(A))
    for t in range(trials):
        g = random_invertible_map(A.dim, A.field, rng.split(seed, t), bound)
        moved = A.transport(g)
        moved_matrix = build_matrix(moved)
        moved_kernel = kernel_basis(moved_matrix)
        if moved_kernel.nullity != base.nullity:
            return False
        ginv = g.inverse()
        for f in base.maps:
            conjugated = g.compose(f).compose(ginv)
            if not is_in_kernel(moved, conjugated, matrix=moved_matrix):
                return False
    return True


@dataclass
class NamedAlgebra:
    """A regression fixture with its verified expectations."""

    name: str
    algebra: SkewAlgebra
    is_lie: bool
    is_hom_lie: bool
    nullity: int | None = None


def _abelian(n: int) -> SkewAlgebra:
    return make_algebra(n, QQ, [])


def _heisenberg3() -> SkewAlgebra:
    return make_algebra(3, QQ, [(1, 2, [0, 0, 1])])


def _cross_product3() -> SkewAlgebra:
    return make_algebra(3, QQ, [
        (1, 2, [0, 0, 1]),
        (1, 3, [0, -1, 0]),
        (2, 3, [1, 0, 0]),
    ])


def _nonhomlie4() -> SkewAlgebra:
    # 4-dimensional algebra with full-rank Hom-Jacobi matrix: it admits no
    # nonzero twisting map at all
    return make_algebra(4, QQ, [
        (1, 2, [0, 1, 2, -1]),
        (1, 3, [1, 2, -1, 0]),
        (1, 4, [2, -1, 0, 1]),
        (2, 3, [-1, 0, 1, 2]),
        (2, 4, [1, 2, -1, 3]),
        (3, 4, [-2, -1, 1, 2]),
    ])


def _sl2_plus_abelian4() -> SkewAlgebra:
    # sl2 = span(e1, e2, e3) with a 1-dimensional abelian direct summand e4
    return make_algebra(4, QQ, [
        (1, 2, [0, 2, 0, 0]),
        (1, 3, [0, 0, -2, 0]),
        (2, 3, [1, 0, 0, 0]),
    ])


def catalog() -> list[NamedAlgebra]:
    """Built-in named algebras with their expected invariants."""
    return [
        NamedAlgebra("abelian3", _abelian(3), is_lie=True, is_hom_lie=True, nullity=9),
        NamedAlgebra("abelian4", _abelian(4), is_lie=True, is_hom_lie=True, nullity=16),
        NamedAlgebra("abelian5", _abelian(5), is_lie=True, is_hom_lie=True, nullity=25),
        NamedAlgebra("heisenberg3", _heisenberg3(), is_lie=True, is_hom_lie=True, nullity=9),
        NamedAlgebra("cross_product3", _cross_product3(), is_lie=True, is_hom_lie=True, nullity=6),
        NamedAlgebra("nonhomlie4", _nonhomlie4(), is_lie=False, is_hom_lie=False, nullity=0),
        NamedAlgebra("sl2_plus_abelian4", _sl2_plus_abelian4(), is_lie=True, is_hom_lie=True,
                     nullity=10),
    ]
