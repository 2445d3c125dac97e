# gridctl
# Released under the LGPLv3 License

from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce

import numpy as np
from sympy import factorint

from ..core import *
from .m010_grid_core import *
from .m020_grid_spectral import *


# ▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃ factorization ▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃

@dataclass(frozen=True)
class PrimePowerFactorization:
    "n = 2^twoExponent * prod(p^e) over the odd (p, e) in factors"
    n: int
    factors: tuple

    @property
    def twoExponent(self):
        return dict(self.factors).get(2, 0)

    @property
    def oddFactors(self):
        return tuple((p, e) for p, e in self.factors if p != 2)

    def oddPrimePowers(self):
        "every q = p^a with p odd, 1 <= a <= e; sorted"
        return sorted(p ** a for p, e in self.oddFactors for a in range(1, e + 1))

def factorize(n):
    check(isinstance(n, (int, np.integer)) and n >= 1, InvalidDimensionError,
        'can only factor positive integers, got', n)
    factors = tuple(sorted((int(p), int(e)) for p, e in factorint(int(n)).items()))
    return PrimePowerFactorization(n=int(n), factors=factors)

def oddPrimePowerDivisors(n):
    return factorize(n).oddPrimePowers()

def primeOf(q):
    "the prime p of a prime power q = p^a"
    (p, _), = factorint(q).items()
    return p

# ▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃ per-node and node-set tests ▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃

def _checkPathNode(n, i):
    check(isinstance(i, (int, np.integer)) and 1 <= i <= n, NodeRangeError,
        'node', i, 'out of range 1..%d' % n)

def pathNodeUncontrollable(n, i):
    '''odd prime powers q | n with (n - i) = (i - 1) mod q, i.e. q | 2i - 1. empty means
    the path is controllable from node i. the end nodes 1 and n never block.'''
    _checkPathNode(n, i)
    return [q for q in oddPrimePowerDivisors(n) if (n - i - (i - 1)) % q == 0]

def congruenceChain(n, nodes):
    "2(i_1 - 1) + 1, i_2 - i_1, ..., i_m - i_(m-1), 2(n - i_m) + 1"
    nodes = sorted(nodes)
    chain = [2 * (nodes[0] - 1) + 1]
    chain.extend(b - a for a, b in zip(nodes, nodes[1:]))
    chain.append(2 * (n - nodes[-1]) + 1)
    return chain

def _normalizePathNodes(n, nodes):
    if isinstance(nodes, (int, np.integer)):
        nodes = [nodes]
    nodes = sorted(set(int(i) for i in nodes))
    check(len(nodes) > 0, NodeRangeError, 'node set is empty')
    for i in nodes:
        _checkPathNode(n, i)
    return nodes

def pathNodesetUncontrollable(n, nodes):
    '''odd prime powers q | n for which every term of the congruence chain is 0 mod q.
    a common nonzero residue is not enough: with n=9 the set {4,5,6} has chain
    7, 1, 1, 7 (all 1 mod 3) yet is controlling.'''
    nodes = _normalizePathNodes(n, nodes)
    chain = congruenceChain(n, nodes)
    return [q for q in oddPrimePowerDivisors(n) if all(term % q == 0 for term in chain)]

def blockingModulus(blockingPowers):
    "product of the largest blocking power of each prime"
    best = {}
    for q in blockingPowers:
        p = primeOf(q)
        best[p] = max(best.get(p, 1), q)
    return reduce(lambda a, b: a * b, best.values(), 1)

def canonicalUncontrollableSet(n, q):
    "{ l*q - (q-1)/2 : l = 1..n/q }, the nodes i with q | 2i - 1"
    check(isinstance(q, (int, np.integer)) and q >= 3 and q % 2 == 1, GridCtlError,
        'modulus must be odd and at least 3, got', q)
    check(n % q == 0, GridCtlError, q, 'does not divide', n)
    return [l * q - (q - 1) // 2 for l in range(1, n // q + 1)]

def pathEigenvectorZeroSet(n, k):
    return [j for j in range(1, n + 1) if isPathComponentZero(n, k, j)]

# ▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃ uncontrollable eigenpairs ▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃

@dataclass(frozen=True, eq=False)
class PathVerdict:
    n: int
    nodes: tuple
    controllable: bool
    blockingPrimes: tuple = ()
    modulus: int = 1
    uncontrollableEigenvalues: tuple = ()
    witnessVectors: tuple = ()

def checkWitnessBlockPattern(w, Q, tolerance=1e-12):
    '''w must follow [v, 0, -flip(v), -v, 0, flip(v), ...] with blocks of (Q-1)/2:
    sign flips every Q entries, middle of each period is zero.'''
    w = np.asarray(w, dtype=np.float64)
    n = len(w)
    half = (Q - 1) // 2
    for start in range(0, n, Q):
        if abs(w[start + half]) > tolerance:
            return False
        for j in range(half):
            if abs(w[start + Q - 1 - j] + w[start + j]) > tolerance:
                return False
    for j in range(n - Q):
        if abs(w[j + Q] + w[j]) > tolerance:
            return False
    return True

def pathUncontrollableEigenpairs(n, nodes):
    '''for the combined blocking modulus Q, the eigenvalues 2 - 2cos((2v-1)pi/Q),
    v = 1..(Q-1)/2, with closed-form witnesses that vanish on every queried node.'''
    nodes = _normalizePathNodes(n, nodes)
    blocking = pathNodesetUncontrollable(n, nodes)
    Q = blockingModulus(blocking)
    configs = getConfigs()
    g = GridSpec((n,))
    eigenvalues = []
    witnesses = []
    for nu in range(1, (Q - 1) // 2 + 1):
        angle = Fraction(2 * nu - 1, Q)
        k = 1 + n * (2 * nu - 1) // Q
        assertEq(angle, pathAngle(n, k))
        w = pathEigenvector(n, k)
        lam = angleValueMp(angle)
        residual = eigenResidual(g, w, lam)
        check(residual <= configs.residualTolerance * max(1, float(lam)), ResidualError,
            'witness for', n, nodes, 'has residual', residual)
        check(all(w[i - 1] == 0.0 for i in nodes), PrecisionError, 'witness does not vanish on', nodes)
        assertTrue(checkWitnessBlockPattern(w, Q), 'witness breaks the block pattern, Q =', Q)
        eigenvalues.append(SpectralValue(components=(angle,), numeric=lam, multiplicity=1,
            angleMultisets=((angle,),)))
        witnesses.append(w)

    return PathVerdict(n=n, nodes=tuple(nodes), controllable=not blocking, blockingPrimes=tuple(blocking),
        modulus=Q, uncontrollableEigenvalues=tuple(eigenvalues), witnessVectors=tuple(witnesses))
