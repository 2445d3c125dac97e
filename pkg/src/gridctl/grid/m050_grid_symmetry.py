# gridctl
# Released under the LGPLv3 License

import itertools
from dataclasses import dataclass
from functools import reduce

import numpy as np

from ..core import *
from .m010_grid_core import *
from .m020_grid_spectral import *


# ▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃ bricks ▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃

@dataclass(frozen=True)
class BrickPartition:
    '''the grid tiled by counts[l] copies of base along axis l. brick and within-brick
    coordinates are 1-based.'''
    grid: GridSpec
    base: GridSpec
    counts: tuple

    def brickOf(self, node):
        "(brick index, position within that brick)"
        node = normalizeNode(self.grid, node)
        brick = tuple((c - 1) // b + 1 for c, b in zip(node, self.base.dims))
        within = tuple((c - 1) % b + 1 for c, b in zip(node, self.base.dims))
        return brick, within

    def baseNodeOf(self, node):
        "node of the base brick whose component the node copies, up to sign"
        brick, within = self.brickOf(node)
        return tuple(w if i % 2 == 1 else b - w + 1 for i, w, b in zip(brick, within, self.base.dims))

    def bricks(self):
        return list(itertools.product(*(range(1, l + 1) for l in self.counts)))

    def brickNodes(self, brick):
        ranges = [range((i - 1) * b + 1, i * b + 1) for i, b in zip(brick, self.base.dims)]
        return list(itertools.product(*ranges))

def brickPartition(g, base):
    check(base.d == g.d, InvalidDimensionError, 'brick', base, 'and grid', g, 'differ in dimension')
    for n, b in zip(g.dims, base.dims):
        check(n % b == 0, InvalidDimensionError, 'brick', base, 'does not tile grid', g)
    return BrickPartition(grid=g, base=base, counts=tuple(n // b for n, b in zip(g.dims, base.dims)))

def divisorBricks(g):
    "every brick with axis lengths dividing the grid's, the grid itself excluded"
    divisors = [[b for b in range(1, n + 1) if n % b == 0] for n in g.dims]
    return [GridSpec(dims) for dims in itertools.product(*divisors) if dims != g.dims]

def rayleighQuotient(g, v):
    v = np.asarray(v, dtype=np.float64)
    return float(v @ applyGridLaplacian(g, v) / (v @ v))

def predictBrickSubvectors(bp, v0):
    '''the grid vector whose brick (i_1, ..., i_d) holds the base vector flipped i_l - 1
    times along each axis l; an eigenvector of the whole grid when v0 is one of the base.'''
    v0 = np.asarray(v0, dtype=np.float64)
    check(v0.shape == (bp.base.nodeCount,), NodeRangeError, 'vector length', v0.shape,
        'does not match brick', bp.base)
    check(np.max(np.abs(v0)) > 0, ResidualError, 'the zero vector is not an eigenvector')
    lam = rayleighQuotient(bp.base, v0)
    residual = eigenResidual(bp.base, v0, lam)
    check(residual <= getConfigs().residualTolerance * max(1.0, abs(lam)), ResidualError,
        'brick vector has eigen-residual', residual, 'on', bp.base)

    maps = []
    for n, b in zip(bp.grid.dims, bp.base.dims):
        x = np.arange(n)
        within = x % b
        maps.append(np.where((x // b) % 2 == 0, within, b - 1 - within))
    return v0.reshape(bp.base.dims)[np.ix_(*maps)].reshape(-1)

# ▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃ symmetry classes ▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃

@dataclass(frozen=True, order=True)
class SymmetryClass:
    "signs[l] is +1 if flipping axis l+1 keeps the vector, -1 if it negates it"
    signs: tuple

    @property
    def label(self):
        return 'S' + ''.join('+' if s > 0 else '-' for s in self.signs)

    def __str__(self):
        return self.label

    @staticmethod
    def fromLabel(label):
        body = label[1:] if label.startswith('S') else label
        check(body and set(body) <= set('+-'), GridCtlError, 'not a symmetry class label', repr(label))
        return SymmetryClass(tuple(1 if c == '+' else -1 for c in body))

def classifySymmetry(u):
    check(isinstance(u, BasisVector), GridCtlError, 'expected a tagged kronecker basis vector, got',
        type(u).__name__)
    return SymmetryClass(u.signs)

def measureSymmetry(g, v, tolerance=1e-10):
    "per axis +1, -1, or 0 when flipping that axis neither keeps nor negates v"
    v = np.asarray(v, dtype=np.float64)
    scale = max(np.max(np.abs(v)), 1e-300)
    signs = []
    for axis in range(1, g.d + 1):
        flipped = flipOperator(g, axis)(v)
        if np.max(np.abs(flipped - v)) <= tolerance * scale:
            signs.append(1)
        elif np.max(np.abs(flipped + v)) <= tolerance * scale:
            signs.append(-1)
        else:
            signs.append(0)
    return tuple(signs)

ProfileKind = SimpleEnum(['singleClass', 'twoClass', 'multiClass', 'noSymmetry'])

@dataclass(frozen=True)
class SymmetryProfile:
    '''invariantAxisSets lists every axis set A on which |v| is unchanged by the composite
    flip over A, for every v in the eigenspace. rule is 'a', 'b' or 'c' for two classes
    on a 2-D grid: shared first sign, shared second sign, or antipodal.'''
    kind: str
    classes: tuple
    invariantAxisSets: tuple
    rule: str = None

    def holdsFor(self, g, v, tolerance=1e-10):
        v = np.abs(np.asarray(v, dtype=np.float64))
        scale = max(np.max(v), 1e-300)
        for axes in self.invariantAxisSets:
            if np.max(np.abs(flipOperatorOverAxes(g, axes)(v) - v)) > tolerance * scale:
                return False
        return True

def _signProduct(cls, axes):
    return reduce(lambda a, b: a * b, (cls.signs[axis - 1] for axis in axes), 1)

def symmetryProfileOfClasses(classes):
    classes = tuple(sorted(set(classes), reverse=True))
    d = len(classes[0].signs)
    invariant = []
    for size in range(1, d + 1):
        for axes in itertools.combinations(range(1, d + 1), size):
            if len(set(_signProduct(cls, axes) for cls in classes)) == 1:
                invariant.append(axes)

    rule = None
    if len(classes) == 1:
        kind = ProfileKind.singleClass
    elif len(classes) == 2:
        kind = ProfileKind.twoClass
        if d == 2:
            rule = {(1,): 'a', (2,): 'b', (1, 2): 'c'}[invariant[0]]
    elif invariant:
        kind = ProfileKind.multiClass
    else:
        kind = ProfileKind.noSymmetry
    return SymmetryProfile(kind=kind, classes=classes, invariantAxisSets=tuple(invariant), rule=rule)

def eigenspaceSymmetryProfile(eb):
    return symmetryProfileOfClasses(classifySymmetry(b) for b in eb.basis)

def centralLineZeros(g, cls):
    '''(axis, coordinate) hyperplanes forced to zero: the middle coordinate of each odd
    axis whose sign is -1. even axes contribute nothing.'''
    check(len(cls.signs) == g.d, GridCtlError, 'class', cls, 'does not fit grid', g)
    return tuple((axis, (n + 1) // 2) for axis, (n, s) in enumerate(zip(g.dims, cls.signs), start=1)
        if n % 2 == 1 and s < 0)

def centralLineZeroNodes(g, cls):
    planes = centralLineZeros(g, cls)
    return [node for node in g.nodes() if any(node[axis - 1] == c for axis, c in planes)]

def reflectNode(g, node, axes):
    return tuple(n - c + 1 if axis in axes else c for axis, (c, n) in enumerate(zip(node, g.dims), start=1))

def magnitudeOrbit(g, node, profile):
    "nodes where every eigenvector of the eigenspace has the same |component| as at node"
    group = {frozenset()}
    changed = True
    while changed:
        changed = False
        for element in list(group):
            for axes in profile.invariantAxisSets:
                combined = element ^ frozenset(axes)
                if combined not in group:
                    group.add(combined)
                    changed = True
    return sorted(set(reflectNode(g, node, element) for element in group))
