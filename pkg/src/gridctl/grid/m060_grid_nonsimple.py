# gridctl
# Released under the LGPLv3 License

from dataclasses import dataclass

import numpy as np
from mpmath import mp
from sympy import isprime

from ..core import *
from .m010_grid_core import *
from .m020_grid_spectral import *
from .m030_grid_path import *
from .m040_grid_simple import *
from .m050_grid_symmetry import *


# ▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃ component polynomials ▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃

@dataclass(frozen=True)
class ComponentPolynomial:
    "p_r(s), integer coefficients, highest degree first"
    r: int
    coefficients: tuple

    @property
    def degree(self):
        return self.r - 1

    def evaluate(self, s):
        with mp.workdps(getConfigs().precisionDigits):
            return mp.polyval(list(self.coefficients), mp.mpf(s))

def componentPolynomial(r):
    "p_1 = 1, p_2 = 1 - s, p_r = (2 - s) p_(r-1) - p_(r-2)"
    check(isinstance(r, (int, np.integer)) and r >= 1, GridCtlError, 'polynomial index must be positive, got', r)
    # lowest degree first while building
    prev, cur = None, [1]
    if r >= 2:
        prev, cur = cur, [1, -1]
    for _ in range(3, r + 1):
        nxt = [2 * c for c in cur] + [0]
        for i, c in enumerate(cur):
            nxt[i + 1] -= c
        for i, c in enumerate(prev):
            nxt[i] -= c
        prev, cur = cur, nxt
    return ComponentPolynomial(r=r, coefficients=tuple(reversed(cur)))

def evaluateComponentPolynomial(r, s):
    "p_r(s) by the recurrence; stays accurate for large r where expanded coefficients do not"
    check(r >= 1, GridCtlError, 'polynomial index must be positive, got', r)
    with mp.workdps(getConfigs().precisionDigits):
        s = mp.mpf(s)
        prev, cur = mp.mpf(1), mp.mpf(1)
        if r == 1:
            return cur
        cur = 1 - s
        for _ in range(3, r + 1):
            prev, cur = cur, (2 - s) * cur - prev
        return cur

def _pathComponentsByPolynomialUncached(n, k, digits):
    with mp.workdps(digits):
        lam = angleValueMp(pathAngle(n, k))
        first = pathEigenvectorMp(n, k)[0]
        result = []
        prev, cur = None, mp.mpf(1)
        for r in range(1, n + 1):
            if r == 2:
                prev, cur = cur, 1 - lam
            elif r > 2:
                prev, cur = cur, (2 - lam) * cur - prev
            result.append(mp.mpf(0) if isPathComponentZero(n, k, r) else cur * first)
        return result

_pathComponentsCached = BoundedMemoize(_pathComponentsByPolynomialUncached, limit=4096)

def pathComponentsByPolynomial(n, k):
    "(v_k)_r = p_r(lambda_k) * (v_k)_1 for r = 1..n"
    return _pathComponentsCached(n, k, getConfigs().precisionDigits)

def nonvanishingGuard(n, lam):
    '''for prime n, no component p_r(lam), r = 1..(n-1)/2, of an eigenvector of P_n may
    vanish; a failure here means precision was lost.'''
    check(isprime(n), GridCtlError, 'guard needs a prime path length, got', n)
    lam = mp.mpf(lam)
    check(any(abs(pe.value - lam) <= 1e-12 for pe in pathEigensystem(n)), GridCtlError,
        lam, 'is not an eigenvalue of the path of length', n)
    for r in range(1, (n - 1) // 2 + 1):
        value = evaluateComponentPolynomial(r, lam)
        if abs(value) <= 1e-10:
            raise PrecisionError('p_%d(%s) evaluated to %s on prime path %d' % (r, mp.nstr(lam, 17),
                mp.nstr(value, 5), n))
    return True

# ▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃ simultaneous zeros ▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃

def polynomialCoefficientMatrix(eb, nodes):
    "row = node, column = basis vector; entry = prod over axes of p_(i_l)(lambda_(j,l)) (v_(j,l))_1"
    g = eb.grid
    with mp.workdps(getConfigs().precisionDigits):
        M = mp.matrix(len(nodes), eb.multiplicity)
        for row, node in enumerate(nodes):
            for col, b in enumerate(eb.basis):
                entry = mp.mpf(1)
                for n, k, c in zip(g.dims, b.ks, node):
                    entry *= pathComponentsByPolynomial(n, k)[c - 1]
                M[row, col] = entry
        return M

def nullCoefficients(M, atLeastOne=False):
    '''coefficient vectors alpha (one list per null direction) with M alpha = 0. columns are
    scaled to unit length first; a direction is null when its normalized gram eigenvalue is at
    most determinantScale. atLeastOne returns the weakest direction even if it is not null.'''
    scale = getConfigs().determinantScale
    with mp.workdps(getConfigs().precisionDigits):
        rows, cols = M.rows, M.cols
        norms = [mp.sqrt(mp.fsum(M[i, j] ** 2 for i in range(rows))) for j in range(cols)]
        zeroCols = [j for j in range(cols) if norms[j] ** 2 <= scale]
        liveCols = [j for j in range(cols) if j not in zeroCols]

        result = []
        for j in zeroCols:
            result.append([mp.mpf(1) if jj == j else mp.mpf(0) for jj in range(cols)])
        if not liveCols:
            return result

        G = mp.matrix(len(liveCols), len(liveCols))
        for a, ja in enumerate(liveCols):
            for b, jb in enumerate(liveCols):
                G[a, b] = mp.fsum(M[i, ja] * M[i, jb] for i in range(rows)) / (norms[ja] * norms[jb])
        E, Q = mp.eigsy(G)
        order = sorted(range(len(liveCols)), key=lambda idx: E[idx])
        for idx in order:
            if E[idx] > scale and not (atLeastOne and not result):
                break
            alpha = [mp.mpf(0)] * cols
            for a, ja in enumerate(liveCols):
                alpha[ja] = Q[a, idx] / norms[ja]
            result.append(alpha)
        return result

def combineBasis(eb, alpha):
    "sum of alpha_j * basis_j, scaled to unit inf-norm with its largest entry positive"
    w = eb.matrix() @ np.array([float(a) for a in alpha])
    biggest = w[np.argmax(np.abs(w))]
    return w / biggest

@dataclass(frozen=True, eq=False)
class ZeroTestResult:
    isZero: bool
    determinant: object
    alpha: tuple = None
    witness: np.ndarray = None

def simultaneousZeroTest(eb, nodes):
    '''for an eigenvalue of multiplicity mu and exactly mu nodes: is there an eigenvector
    vanishing on all of them? decided by the mu x mu determinant. a node whose row vanishes
    for the whole basis leaves mu - 1 conditions on mu coefficients, so the answer is yes.'''
    g = eb.grid
    nodes = normalizeNodeSet(g, nodes)
    check(len(nodes) == eb.multiplicity, ArityError, 'need exactly', eb.multiplicity, 'nodes for an eigenvalue of',
        'multiplicity', eb.multiplicity, 'but got', len(nodes), '(fewer nodes than the multiplicity never control it)')
    configs = getConfigs()
    M = polynomialCoefficientMatrix(eb, nodes)
    with mp.workdps(configs.precisionDigits):
        det = mp.det(M)
        rowNorms = [max(abs(M[i, j]) for j in range(M.cols)) for i in range(M.rows)]
        if min(rowNorms) <= configs.zeroTolerance:
            traceDiagnostic('zero row in the coefficient matrix of', eb.value.decimal(), 'on', g, nodes)
            det = mp.mpf(0)
        bound = configs.determinantScale * mp.fprod(rowNorms)
        isZero = abs(det) <= bound

    if not isZero:
        return ZeroTestResult(isZero=False, determinant=det)

    alpha = nullCoefficients(M, atLeastOne=True)[0]
    witness = combineBasis(eb, alpha)
    verifyWitness(g, witness, eb.value.numeric, nodes)
    return ZeroTestResult(isZero=True, determinant=det, alpha=tuple(alpha), witness=witness)

# ▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃ verdicts ▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃

def _simpleEigenvalueBlocked(eb, nodes):
    ks = eb.basis[0].ks
    g = eb.grid
    return all(any(isPathComponentZero(n, k, c) for n, k, c in zip(g.dims, ks, node)) for node in nodes)

def nonsimpleGridControllable(g, nodes):
    '''per eigenvalue: simple ones by the exact zero pattern, repeated ones by a rank test on
    the polynomial coefficient matrix (uncontrollable iff rank < multiplicity).'''
    nodes = normalizeNodeSet(g, nodes)
    muStar = minControlSetSize(g)
    common = partitionIntersection(buildPartition(g, nodes))
    eigenvalues, witnesses, nullDimensions = [], [], []
    sawRepeated = False
    for eb in gridSpectrum(g):
        if eb.multiplicity == 1:
            if not _simpleEigenvalueBlocked(eb, nodes):
                continue
            w = eb.basis[0].vector()
            nullDim = 1
        else:
            nulls = nullCoefficients(polynomialCoefficientMatrix(eb, nodes))
            if not nulls:
                continue
            w = combineBasis(eb, nulls[0])
            nullDim = len(nulls)
            sawRepeated = True

        verifyWitness(g, w, eb.value.numeric, nodes)
        eigenvalues.append(eb.value)
        witnesses.append(w)
        nullDimensions.append(nullDim)

    controllable = not eigenvalues
    if len(nodes) < muStar:
        assertTrue(not controllable, 'multiplicity bound violated on', g, nodes)
        reason = Reason.multiplicityBound
        traceDiagnostic(len(nodes), 'nodes cannot control', g, 'whose largest multiplicity is', muStar)
    elif controllable:
        reason = None
    elif sawRepeated:
        reason = Reason.simultaneousZero
    else:
        reason = Reason.partitionIntersection

    return GridVerdict(grid=g, nodes=tuple(nodes), controllable=controllable, simpleGrid=(muStar == 1),
        commonPairs=common, uncontrollableEigenvalues=tuple(eigenvalues), witnesses=tuple(witnesses),
        nullDimensions=tuple(nullDimensions), reason=reason, minControlSetSize=muStar)

def gridControllable(g, nodes):
    if isSimple(g):
        return simpleGridControllable(g, nodes)
    return nonsimpleGridControllable(g, nodes)

def suggestControlNodesNonsimple(g):
    "greedy, corners first: keep adding the node that leaves the fewest uncontrollable directions"
    candidates = g.corners() + [node for node in g.nodes() if not isCornerNode(g, node)]
    chosen = []
    remaining = None
    while remaining != 0:
        best = None
        for node in candidates:
            if node in chosen:
                continue
            dim = nonsimpleGridControllable(g, chosen + [node]).uncontrollableDimension
            if best is None or dim < best[1]:
                best = (node, dim)
            if dim == 0:
                break
        chosen.append(best[0])
        remaining = best[1]
    return chosen

def suggestNodes(g):
    return suggestControlNodes(g) if isSimple(g) else suggestControlNodesNonsimple(g)

# ▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃ brick inheritance ▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃

def isElementaryGrid(g):
    return all(n == 1 or isprime(n) for n in g.dims)

@dataclass(frozen=True, eq=False)
class BrickScanEntry:
    '''permutationOnly: the multiplicity comes only from permuting one angle multiset
    across axes. attributedBrick is None when no brick explains the eigenvalue.'''
    value: SpectralValue
    containingBricks: tuple
    attributedBrick: GridSpec = None
    attributedBasis: EigenBasis = None
    permutationOnly: bool = False
    violation: bool = False

    @property
    def multiplicity(self):
        return self.value.multiplicity

    def brickProfile(self):
        return eigenspaceSymmetryProfile(self.attributedBasis) if self.attributedBasis else None

@dataclass(frozen=True, eq=False)
class BrickScanReport:
    grid: GridSpec
    entries: tuple

    @property
    def violations(self):
        return [entry for entry in self.entries if entry.violation]

def brickInheritanceScan(g):
    '''each repeated eigenvalue with the proper bricks whose spectrum contains it. the brick
    with the largest multiplicity (then fewest nodes, then smallest dims) is the attribution.
    a violation is a repeated eigenvalue, not a mere axis permutation, found in no proper
    brick of a grid that is not itself elementary (all lengths 1 or prime).'''
    entries = []
    elementary = isElementaryGrid(g)
    for eb in gridSpectrum(g):
        if eb.multiplicity < 2:
            continue
        containing = []
        for brick in divisorBricks(g):
            beb = findEigenBasis(brick, eb.value.numeric)
            if beb is not None:
                containing.append((brick, beb))

        permutationOnly = len(eb.value.angleMultisets) == 1
        if containing:
            brick, beb = min(containing, key=lambda item: (-item[1].multiplicity, item[0].nodeCount, item[0].dims))
        elif elementary:
            brick, beb = g, eb
        else:
            brick, beb = None, None

        violation = not containing and not permutationOnly and not elementary
        if violation:
            trace('repeated eigenvalue', eb.value.decimal(), 'of', g, 'is in no smaller brick:',
                eb.value.angleMultisets)
        entries.append(BrickScanEntry(value=eb.value,
            containingBricks=tuple((b, beb2.multiplicity) for b, beb2 in containing),
            attributedBrick=brick, attributedBasis=beb, permutationOnly=permutationOnly, violation=violation))
    return BrickScanReport(grid=g, entries=tuple(entries))

def nonsimpleSymbolMap(g):
    '''symbols for the repeated eigenvalues: within the attributed brick, nodes whose
    |component| agrees for the whole eigenspace share a symbol; other bricks repeat it
    by reflection.'''
    symbols = {node: [] for node in g.nodes()}
    legend = []
    for index, entry in enumerate(brickInheritanceScan(g).entries, start=1):
        if entry.attributedBrick is None:
            continue
        brick = entry.attributedBrick
        profile = entry.brickProfile()
        bp = brickPartition(g, brick)
        names = {}
        for node in g.nodes():
            rep = magnitudeOrbit(brick, bp.baseNodeOf(node), profile)[0]
            if rep not in names:
                names[rep] = 'L%d.%d' % (index, len(names) + 1)
                legend.append(Bucket(symbol=names[rep], kind='repeated', value=entry.value, brick=brick,
                    baseNode=rep))
            symbols[node].append(names[rep])
    return Bucket(symbols=symbols, legend=legend)
