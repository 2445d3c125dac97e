# gridctl
# Released under the LGPLv3 License

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from math import gcd

import numpy as np
from mpmath import mp

from ..core import *
from .m010_grid_core import *


# ▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃ path eigenpairs ▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃

# eigen-index k runs 1..n; the angle (k-1)/n is in units of pi.

def pathAngle(n, k):
    check(1 <= k <= n, NodeRangeError, 'eigen-index', k, 'out of range 1..%d' % n)
    return Fraction(k - 1, n)

def angleValueMp(angle):
    "2 - 2cos(angle * pi) at the configured precision"
    with mp.workdps(getConfigs().precisionDigits):
        return 2 - 2 * mp.cos(mp.mpf(angle.numerator) * mp.pi / angle.denominator)

def isPathComponentZero(n, k, j):
    '''exact test for (v_k)_j == 0. with a = k-1, g = gcd(a, n), the component
    cos((2j-1) a pi / 2n) vanishes iff q = n/g is odd and > 1, a/g is odd,
    and q divides 2j-1.'''
    a = k - 1
    if a == 0:
        return False
    g = gcd(a, n)
    q = n // g
    return q > 1 and q % 2 == 1 and (a // g) % 2 == 1 and (2 * j - 1) % q == 0

def pathEigenvector(n, k):
    "closed form cos((2j-1)(k-1)pi/2n), first component positive, unit inf-norm; exact zeros are exactly 0"
    j = np.arange(1, n + 1)
    v = np.cos((2 * j - 1) * (k - 1) * np.pi / (2 * n))
    for jj in range(1, n + 1):
        if isPathComponentZero(n, k, jj):
            v[jj - 1] = 0.0
    return v / np.max(np.abs(v))

def pathEigenvectorMp(n, k):
    "same normalization as pathEigenvector, as a list of mpf; exact zeros are mpf(0)"
    with mp.workdps(getConfigs().precisionDigits):
        raw = [mp.mpf(0) if isPathComponentZero(n, k, j) else
            mp.cos(mp.mpf((2 * j - 1) * (k - 1)) * mp.pi / (2 * n)) for j in range(1, n + 1)]
        scale = max(abs(x) for x in raw)
        return [x / scale for x in raw]

def pathSymmetrySign(k):
    "+1 when v_k = flip(v_k), -1 when v_k = -flip(v_k)"
    return 1 if k % 2 == 1 else -1

@dataclass(frozen=True, eq=False)
class PathEigenpair:
    n: int
    k: int
    angle: Fraction
    value: object
    vector: np.ndarray

    @property
    def sign(self):
        return pathSymmetrySign(self.k)

def pathEigensystem(n):
    check(isinstance(n, (int, np.integer)) and n >= 1, InvalidDimensionError,
        'path length must be a positive integer, got', n)
    result = []
    for k in range(1, n + 1):
        angle = pathAngle(n, k)
        result.append(PathEigenpair(n=n, k=k, angle=angle, value=angleValueMp(angle),
            vector=pathEigenvector(n, k)))
    return result

def embedPathEigenvector(v, k):
    "eigenvector of P_n -> eigenvector of P_kn at the same eigenvalue: (v, flip(v), v, ...)"
    v = np.asarray(v)
    check(k >= 1, InvalidDimensionError, 'repeat count must be positive, got', k)
    blocks = [v if b % 2 == 0 else v[::-1] for b in range(k)]
    return np.concatenate(blocks)

# ▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃ grid eigenvalues ▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃

def canonicalAngles(angles):
    "the multiset of angles, as a sorted tuple"
    return tuple(sorted(angles))

def formatAngle(angle):
    return '%d/%d' % (angle.numerator, angle.denominator)

@dataclass(frozen=True, eq=False)
class SpectralValue:
    '''grid eigenvalue sum over axes of 2 - 2cos(angle * pi). components are the per-axis
    angles of a representative eigen-index tuple; angleMultisets lists every distinct
    canonical multiset mapping to this value.'''
    components: tuple
    numeric: object
    multiplicity: int = 1
    angleMultisets: tuple = ()

    def canonical(self):
        return canonicalAngles(self.components)

    def __float__(self):
        return float(self.numeric)

    def decimal(self, digits=17):
        return mp.nstr(self.numeric, digits, strip_zeros=False)

    def describe(self):
        terms = ['(2-2cos(%s pi))' % formatAngle(a) for a in self.components if a != 0]
        return ' + '.join(terms) if terms else '0'

def sumOfAngleValues(angles):
    with mp.workdps(getConfigs().precisionDigits):
        return mp.fsum(angleValueMp(a) for a in angles)

def spectralValueFromTuple(g, ks):
    "SpectralValue of the eigen-index tuple ks (1-based per axis)"
    angles = tuple(pathAngle(n, k) for n, k in zip(g.dims, ks))
    return SpectralValue(components=angles, numeric=sumOfAngleValues(angles), multiplicity=1,
        angleMultisets=(canonicalAngles(angles),))

class BasisVector:
    "kronecker product v_{k_1} (x) ... (x) v_{k_d} of path eigenvectors, tagged with its indices"
    def __init__(self, g, ks):
        self.grid = g
        self.ks = tuple(ks)
        self.angles = tuple(pathAngle(n, k) for n, k in zip(g.dims, self.ks))
        self.signs = tuple(pathSymmetrySign(k) for k in self.ks)

    def vector(self):
        return reduce(np.kron, (pathEigenvector(n, k) for n, k in zip(self.grid.dims, self.ks)))

    def __repr__(self):
        return 'BasisVector(%s)' % (self.ks,)

@dataclass(frozen=True, eq=False)
class EigenBasis:
    grid: GridSpec
    value: SpectralValue
    basis: tuple = field(default_factory=tuple)

    @property
    def multiplicity(self):
        return len(self.basis)

    def matrix(self):
        "N x mu, one column per basis vector"
        return np.column_stack([b.vector() for b in self.basis])

def groupSortedValues(values, tolerance, gapFactor, context=''):
    '''values must be sorted ascending. returns lists of positions; neighbors within tolerance
    share a group, and neighboring groups must be more than gapFactor * tolerance apart.'''
    groups = []
    for pos, value in enumerate(values):
        if groups and abs(value - values[groups[-1][-1]]) <= tolerance:
            groups[-1].append(pos)
        else:
            if groups:
                gap = abs(value - values[groups[-1][-1]])
                if gap <= gapFactor * tolerance:
                    raise PrecisionError('ambiguous eigenvalue grouping', context, 'gap', '%.3g' % float(gap),
                        'between', '%.17g' % float(values[groups[-1][-1]]), 'and', '%.17g' % float(value),
                        'is within', gapFactor, 'x tolerance; raise GRIDCTL_PRECISION_DIGITS')
            groups.append([pos])
    return groups

def _gridSpectrumUncached(g, digits, tolerance, gapFactor):
    valueOfMultiset = {}
    entries = []
    for ks in itertools.product(*(range(1, n + 1) for n in g.dims)):
        angles = tuple(pathAngle(n, k) for n, k in zip(g.dims, ks))
        key = canonicalAngles(angles)
        if key not in valueOfMultiset:
            valueOfMultiset[key] = sumOfAngleValues(angles)
        entries.append((valueOfMultiset[key], key, ks, angles))

    entries.sort(key=lambda entry: (entry[0], entry[2]))
    groups = groupSortedValues([entry[0] for entry in entries], tolerance, gapFactor,
        context='for grid %s' % g)

    result = []
    for positions in groups:
        members = sorted((entries[pos] for pos in positions), key=lambda entry: entry[2])
        multisets = tuple(sorted(set(entry[1] for entry in members)))
        first = members[0]
        value = SpectralValue(components=first[3], numeric=first[0], multiplicity=len(members),
            angleMultisets=multisets)
        basis = tuple(BasisVector(g, entry[2]) for entry in members)
        result.append(EigenBasis(grid=g, value=value, basis=basis))

    traceDiagnostic('spectrum of', g, ':', len(result), 'distinct eigenvalues')
    return tuple(result)

_gridSpectrumCached = BoundedMemoize(_gridSpectrumUncached, limit=64)

def gridSpectrum(g):
    "every eigenvalue of the grid, ascending, with its kronecker basis sorted by eigen-index tuple"
    checkCapacity(g)
    configs = getConfigs()
    return _gridSpectrumCached(g, configs.precisionDigits, configs.groupingTolerance, configs.gapGuardFactor)

def isSimple(g):
    return all(eb.multiplicity == 1 for eb in gridSpectrum(g))

def minControlSetSize(g):
    "the largest multiplicity; no node set smaller than this can be controlling"
    return max(eb.multiplicity for eb in gridSpectrum(g))

def findEigenBasis(g, lam, tolerance=None):
    "the EigenBasis whose value is within tolerance of lam, or None"
    tolerance = getConfigs().groupingTolerance if tolerance is None else tolerance
    for eb in gridSpectrum(g):
        if abs(eb.value.numeric - lam) <= tolerance:
            return eb
    return None
