"""Concrete weak Hopf quasigroups: group, I.P. loop and groupoid algebras,
tensor composites, and the stock module fixtures."""

from __future__ import annotations

import itertools
import random
import re
from dataclasses import dataclass
from functools import cached_property

from .exactlin import QQ, Mor, identity, kron, solve
from .hopfmod import HopfModule, conjugate_module, regular_hopf_module
from .modcat import RightHLModule, conjugate_hl_module, free_hl_module, hl_module_on_h  # noqa: F401 (re-export)
from .report import Report
from .structures import Comonoid, UnitalMagma, tensor_comonoid, tensor_magma
from .whq import WeakHopfQuasigroup, check_axioms


class NotAssociative(ValueError):
    pass


class NoInverse(ValueError):
    pass


class NotIPLoop(ValueError):
    pass


class InvalidGroupoid(ValueError):
    pass


# --------------------------------------------------------------------------
# Cayley tables


@dataclass(frozen=True)
class CayleyTable:
    """``table[x][y]`` is the index of ``x * y``."""

    table: tuple
    identity: int
    names: tuple | None = None

    def __post_init__(self):
        k = len(self.table)
        rows = tuple(tuple(r) for r in self.table)
        object.__setattr__(self, "table", rows)
        full = set(range(k))
        for x, row in enumerate(rows):
            if len(row) != k or set(row) != full:
                raise ValueError(f"row {x} is not a permutation of 0..{k - 1}")
        for y in range(k):
            if {rows[x][y] for x in range(k)} != full:
                raise ValueError(f"column {y} is not a permutation of 0..{k - 1}")
        e = self.identity
        if any(rows[e][x] != x or rows[x][e] != x for x in range(k)):
            raise ValueError(f"{e} is not a two-sided identity")

    @property
    def order(self) -> int:
        return len(self.table)

    def mul(self, x, y) -> int:
        return self.table[x][y]

    @cached_property
    def inverse(self) -> tuple | None:
        """Two-sided inverses, or None if some element lacks one."""
        e, k = self.identity, self.order
        inv = []
        for x in range(k):
            y = self.table[x].index(e)
            if self.table[y][x] != e:
                return None
            inv.append(y)
        return tuple(inv)

    def associator_witness(self):
        t = self.table
        for x, y, z in itertools.product(range(self.order), repeat=3):
            if t[t[x][y]][z] != t[x][t[y][z]]:
                return (x, y, z)
        return None

    def is_associative(self) -> bool:
        return self.associator_witness() is None

    def inverse_property_witness(self):
        """First ``(x, y)`` violating ``x^-1(xy) = y = (yx)x^-1``; ``(x,)`` if x has no inverse."""
        t, inv = self.table, self.inverse
        if inv is None:
            for x in range(self.order):
                y = t[x].index(self.identity)
                if t[y][x] != self.identity:
                    return (x,)
        for x, y in itertools.product(range(self.order), repeat=2):
            xi = inv[x]
            if t[xi][t[x][y]] != y or t[t[y][x]][xi] != y:
                return (x, y)
        return None

    def has_inverse_property(self) -> bool:
        return self.inverse_property_witness() is None


def table_from_function(elements, op, identity) -> CayleyTable:
    elements = list(elements)
    index = {g: i for i, g in enumerate(elements)}
    table = [[index[op(a, b)] for b in elements] for a in elements]
    return CayleyTable(table, index[identity], tuple(map(str, elements)))


def cyclic_group(n: int) -> CayleyTable:
    return table_from_function(range(n), lambda a, b: (a + b) % n, 0)


def symmetric_group(n: int) -> CayleyTable:
    # (a*b)(i) = a(b(i))
    perms = list(itertools.permutations(range(n)))
    return table_from_function(perms, lambda a, b: tuple(a[b[i]] for i in range(n)),
                               tuple(range(n)))


def direct_product(G: CayleyTable, K: CayleyTable) -> CayleyTable:
    m = K.order
    table = [[G.table[a // m][b // m] * m + K.table[a % m][b % m]
              for b in range(G.order * m)] for a in range(G.order * m)]
    return CayleyTable(table, G.identity * m + K.identity)


def chein_double(G: CayleyTable) -> CayleyTable:
    """Chein's loop ``M(G, 2)`` on ``G u Gu``; element ``g`` is ``g``, ``gu`` is ``k + g``."""
    if not G.is_associative() or G.inverse is None:
        raise NotAssociative("chein_double needs a group")
    k, t, inv = G.order, G.table, G.inverse
    table = [[0] * (2 * k) for _ in range(2 * k)]
    for g in range(k):
        for h in range(k):
            table[g][h] = t[g][h]
            table[g][k + h] = k + t[h][g]
            table[k + g][h] = k + t[g][inv[h]]
            table[k + g][k + h] = t[inv[h]][g]
    names = None
    if G.names:
        names = tuple(G.names) + tuple(f"{s}u" for s in G.names)
    out = CayleyTable(table, G.identity, names)
    if not out.has_inverse_property():
        raise NotIPLoop("Chein double failed the inverse-property check")
    return out


# --------------------------------------------------------------------------
# groupoids


@dataclass(frozen=True)
class FiniteGroupoid:
    """Arrows are ``(source, target)`` object pairs plus a label.

    ``compose[(f, g)]`` is the index of ``f o g`` (``g`` first), defined
    iff ``source(f) == target(g)``.
    """

    objects: tuple
    arrows: tuple  # (src, tgt, label)
    compose: dict
    inverses: tuple
    identities: dict  # object -> arrow index

    def __post_init__(self):
        arrows = self.arrows
        for (f, g), h in self.compose.items():
            if arrows[f][0] != arrows[g][1]:
                raise InvalidGroupoid(f"{f} o {g} defined but not composable")
            if arrows[h][0] != arrows[g][0] or arrows[h][1] != arrows[f][1]:
                raise InvalidGroupoid(f"{f} o {g} has wrong endpoints")
        n = len(arrows)
        for f in range(n):
            for g in range(n):
                if arrows[f][0] == arrows[g][1] and (f, g) not in self.compose:
                    raise InvalidGroupoid(f"{f} o {g} missing")
        for f, g, h in itertools.product(range(n), repeat=3):
            if (f, g) in self.compose and (g, h) in self.compose:
                if self.compose[(self.compose[(f, g)], h)] != self.compose[(f, self.compose[(g, h)])]:
                    raise InvalidGroupoid(f"composition not associative at {(f, g, h)}")
        for x, ix in self.identities.items():
            if arrows[ix][:2] != (x, x):
                raise InvalidGroupoid(f"identity of {x} has wrong endpoints")
        for f in range(n):
            s, t = arrows[f][:2]
            if self.compose[(f, self.identities[s])] != f or self.compose[(self.identities[t], f)] != f:
                raise InvalidGroupoid(f"identity laws fail at arrow {f}")
            fi = self.inverses[f]
            if self.compose[(f, fi)] != self.identities[t] or self.compose[(fi, f)] != self.identities[s]:
                raise InvalidGroupoid(f"arrow {f} has no inverse")


def groupoid_from_group_bundle(objects, group: CayleyTable, connected: bool) -> FiniteGroupoid:
    """Arrows ``x -> y`` labelled by group elements.

    With ``connected`` every pair of objects is joined (the pair groupoid
    times ``group``); otherwise only loops ``x -> x`` exist.
    """
    objects = tuple(objects)
    arrows = []
    for x in objects:
        for y in objects:
            if connected or x == y:
                for g in range(group.order):
                    arrows.append((x, y, g))
    index = {a: i for i, a in enumerate(arrows)}
    compose = {}
    for f, (fs, ft, fg) in enumerate(arrows):
        for g, (gs, gt, gg) in enumerate(arrows):
            if fs == gt:
                compose[(f, g)] = index[(gs, ft, group.table[fg][gg])]
    inverses = tuple(index[(t, s, group.inverse[g])] for (s, t, g) in arrows)
    identities = {x: index[(x, x, group.identity)] for x in objects}
    return FiniteGroupoid(objects, tuple(arrows), compose, inverses, identities)


def discrete_groupoid(k: int) -> FiniteGroupoid:
    return groupoid_from_group_bundle(range(k), cyclic_group(1), connected=False)


def pair_groupoid(k: int) -> FiniteGroupoid:
    return groupoid_from_group_bundle(range(k), cyclic_group(1), connected=True)


def group_as_groupoid(G: CayleyTable) -> FiniteGroupoid:
    return groupoid_from_group_bundle([0], G, connected=False)


# --------------------------------------------------------------------------
# algebras


def _grouplike_comonoid(k: int, field) -> Comonoid:
    counit = Mor(1, k, {j: {0: 1} for j in range(k)}, field)
    comul = Mor(k * k, k, {j: {j * k + j: 1} for j in range(k)}, field)
    return Comonoid(k, counit, comul)


def _permutation(images, field) -> Mor:
    return Mor(len(images), len(images), {j: {images[j]: 1} for j in range(len(images))}, field)


def loop_algebra(table: CayleyTable, field=QQ) -> WeakHopfQuasigroup:
    """Quasigroup algebra of an I.P. loop: grouplike basis, ``lambda(x) = x^-1``."""
    w = table.inverse_property_witness()
    if w is not None:
        raise NotIPLoop(f"inverse property fails at {w}")
    k = table.order
    mul = Mor(k, k * k, {a * k + b: {table.table[a][b]: 1} for a in range(k) for b in range(k)},
              field)
    unit = Mor(k, 1, {0: {table.identity: 1}}, field)
    magma = UnitalMagma(k, unit, mul)
    return WeakHopfQuasigroup(magma, _grouplike_comonoid(k, field),
                              _permutation(table.inverse, field))


def group_algebra(table: CayleyTable, field=QQ) -> WeakHopfQuasigroup:
    w = table.associator_witness()
    if w is not None:
        raise NotAssociative(f"table not associative at {w}")
    if table.inverse is None:
        raise NoInverse("table has an element without a two-sided inverse")
    return loop_algebra(table, field)


def groupoid_algebra(G: FiniteGroupoid, field=QQ) -> WeakHopfQuasigroup:
    """Basis = arrows; ``f.g = f o g`` when composable, else 0; grouplike coproduct."""
    k = len(G.arrows)
    mul = Mor(k, k * k, {f * k + g: {h: 1} for (f, g), h in G.compose.items()}, field)
    unit = Mor(k, 1, {0: {G.identities[x]: 1 for x in G.objects}}, field)
    magma = UnitalMagma(k, unit, mul)
    return WeakHopfQuasigroup(magma, _grouplike_comonoid(k, field),
                              _permutation(G.inverses, field))


def trivial_whq(field=QQ) -> WeakHopfQuasigroup:
    I = identity(1, field)
    return WeakHopfQuasigroup(UnitalMagma(1, I, I), Comonoid(1, I, I), I)


@dataclass(frozen=True, eq=False)
class TensorCandidate:
    """Structure maps of ``H1 (x) H2`` together with the axiom verdicts."""

    structure: WeakHopfQuasigroup
    report: Report

    @property
    def ok(self) -> bool:
        return self.report.ok


def tensor_whq(H1: WeakHopfQuasigroup, H2: WeakHopfQuasigroup) -> TensorCandidate:
    H = WeakHopfQuasigroup.unchecked(tensor_magma(H1.magma, H2.magma),
                                     tensor_comonoid(H1.comonoid, H2.comonoid),
                                     kron(H1.antipode, H2.antipode))
    return TensorCandidate(H, check_axioms(H))


# --------------------------------------------------------------------------
# named fixtures


def group_table(name: str) -> CayleyTable:
    m = re.fullmatch(r"(C|S)(\d+)", name)
    if m:
        n = int(m.group(2))
        return cyclic_group(n) if m.group(1) == "C" else symmetric_group(n)
    m = re.fullmatch(r"chein-(.+)", name)
    if m:
        return chein_double(group_table(m.group(1)))
    if "x" in name:
        a, b = name.split("x", 1)
        return direct_product(group_table(a), group_table(b))
    raise ValueError(f"unknown table {name!r}")


def fixture(name: str, field=QQ) -> WeakHopfQuasigroup:
    """Build a named structure.

    Names: ``C<n>``, ``S<n>``, ``C2xC2`` (group algebras), ``chein-<group>``
    (loop algebra of the Chein double), ``discrete-<k>``, ``pair-<k>``
    (groupoid algebras), ``trivial``, and ``A*B`` for the tensor composite,
    which raises ``AxiomViolation`` if the composite fails the axioms.
    """
    name = name.strip()
    if "*" in name:
        a, b = name.split("*", 1)
        cand = tensor_whq(fixture(a, field), fixture(b, field))
        cand.report.raise_on_failure()
        return cand.structure
    if name == "trivial":
        return trivial_whq(field)
    m = re.fullmatch(r"discrete-(\d+)", name)
    if m:
        return groupoid_algebra(discrete_groupoid(int(m.group(1))), field)
    m = re.fullmatch(r"pair-(\d+)", name)
    if m:
        return groupoid_algebra(pair_groupoid(int(m.group(1))), field)
    table = group_table(name)
    if table.is_associative():
        return group_algebra(table, field)
    return loop_algebra(table, field)


# --------------------------------------------------------------------------
# module fixtures


def random_invertible(n: int, rng: random.Random, field=QQ, spread: int = 3) -> tuple[Mor, Mor]:
    """A random ``T = L U`` with unit diagonals and its exact inverse."""
    I = identity(n, field)
    lo = {j: {i: field(rng.randint(-spread, spread)) for i in range(j + 1, n)} for j in range(n)}
    up = {j: {i: field(rng.randint(-spread, spread)) for i in range(j)} for j in range(n)}
    for j in range(n):
        lo[j][j] = up[j][j] = field(1)
    T = Mor(n, n, lo, field) @ Mor(n, n, up, field)
    return T, solve(T, I)


def random_hopf_module(H: WeakHopfQuasigroup, seed: int = 0) -> HopfModule:
    """The regular Hopf module transported to a random basis."""
    rng = random.Random(seed)
    T, T_inv = random_invertible(H.dim, rng, H.field)
    return conjugate_module(regular_hopf_module(H), T, T_inv)


def random_hl_module(H: WeakHopfQuasigroup, k: int = 2, seed: int = 0) -> RightHLModule:
    """``H_L^k`` transported to a random basis."""
    rng = random.Random(seed)
    N = free_hl_module(H, k)
    T, T_inv = random_invertible(N.dim, rng, H.field)
    return conjugate_hl_module(N, T, T_inv)


def twisted_module(H: WeakHopfQuasigroup, perm=None) -> HopfModule:
    """``(H, mu o (sigma (x) H), delta)`` for a basis permutation ``sigma``.

    Left unvalidated on purpose: for a nontrivial ``sigma`` moving elements of
    H_L it breaks (c1), which is what the non-strong tests need.
    """
    if perm is None:
        perm = list(range(H.dim))
        if H.dim > 1:
            perm[0], perm[1] = perm[1], perm[0]
    sigma = _permutation(perm, H.field)
    return HopfModule(H, H.dim, H.mul @ kron(sigma, H.id), H.comul, check=False)
