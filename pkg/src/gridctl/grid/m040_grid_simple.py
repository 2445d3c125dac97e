# gridctl
# Released under the LGPLv3 License

import itertools
from dataclasses import dataclass
from functools import reduce

import numpy as np

from ..core import *
from .m010_grid_core import *
from .m020_grid_spectral import *
from .m030_grid_path import *


# placeholder symbol for an axis whose length has no odd prime-power divisor;
# it stands for "any eigenvalue of that path" in a partition pair
AnyAxisSymbol = 1

# ▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃ per-node tests ▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃

def gridNodeUncontrollableSimple(g, node):
    "per axis l, the odd prime powers of n_l that block coordinate i_l"
    node = normalizeNode(g, node)
    return [pathNodeUncontrollable(n, c) for n, c in zip(g.dims, node)]

def controllableNodeMap(g):
    '''every node with its per-axis blocking lists and whether the grid is controllable
    from that node alone'''
    singleNodeCanControl = minControlSetSize(g) == 1
    result = []
    for node in g.nodes():
        perAxis = gridNodeUncontrollableSimple(g, node)
        result.append(Bucket(node=node, perAxis=perAxis,
            controllable=singleNodeCanControl and not any(perAxis)))
    return result

# ▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃ controllability partition ▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃

@dataclass(frozen=True)
class PartitionEntry:
    "pairs are d-tuples (q_1, ..., q_d), axis 1 first"
    node: tuple
    pairs: frozenset

    def sortedPairs(self):
        return sorted(self.pairs)

def axisSymbols(n):
    return oddPrimePowerDivisors(n) or [AnyAxisSymbol]

def partitionPairs(g, node):
    perAxis = gridNodeUncontrollableSimple(g, node)
    pairs = set()
    for pair in itertools.product(*(axisSymbols(n) for n in g.dims)):
        if any(q != AnyAxisSymbol and q in blocking for q, blocking in zip(pair, perAxis)):
            pairs.add(pair)
    return frozenset(pairs)

def buildPartition(g, nodes):
    nodes = normalizeNodeSet(g, nodes)
    return [PartitionEntry(node=node, pairs=partitionPairs(g, node)) for node in nodes]

def partitionIntersection(entries):
    return reduce(lambda a, b: a & b, (entry.pairs for entry in entries))

# ▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃ verdicts ▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃

Reason = SimpleEnum(['partitionIntersection', 'multiplicityBound', 'simultaneousZero'])

@dataclass(frozen=True, eq=False)
class GridVerdict:
    '''uncontrollableEigenvalues[i] has witnesses[i], an eigenvector vanishing on every
    node; nullDimensions[i] is the dimension of such eigenvectors for that eigenvalue.'''
    grid: GridSpec
    nodes: tuple
    controllable: bool
    simpleGrid: bool
    commonPairs: frozenset = frozenset()
    uncontrollableEigenvalues: tuple = ()
    witnesses: tuple = ()
    nullDimensions: tuple = ()
    reason: str = None
    minControlSetSize: int = 1

    @property
    def uncontrollableDimension(self):
        return sum(self.nullDimensions)

def _axisBlockMasks(g, nodes):
    "masks[axis][k-1]: bit m set when path eigenvector k of that axis vanishes at node m"
    masks = []
    for axis, n in enumerate(g.dims):
        axisMasks = []
        for k in range(1, n + 1):
            mask = 0
            for m, node in enumerate(nodes):
                if isPathComponentZero(n, k, node[axis]):
                    mask |= 1 << m
            axisMasks.append(mask)
        masks.append(axisMasks)
    return masks

def uncontrollableTuples(g, nodes):
    "eigen-index tuples whose kronecker eigenvector vanishes on every node"
    nodes = normalizeNodeSet(g, nodes)
    masks = _axisBlockMasks(g, nodes)
    full = (1 << len(nodes)) - 1
    result = []
    for ks in itertools.product(*(range(1, n + 1) for n in g.dims)):
        covered = 0
        for axis, k in enumerate(ks):
            covered |= masks[axis][k - 1]
        if covered == full:
            result.append(ks)
    return result

def verifyWitness(g, w, lam, nodes):
    configs = getConfigs()
    residual = eigenResidual(g, w, lam)
    check(residual <= configs.residualTolerance * max(1.0, float(lam)), ResidualError,
        'witness on', g, 'at', float(lam), 'has residual', residual)
    scale = np.max(np.abs(w))
    for node in nodes:
        value = abs(w[flattenIndex(g, node)]) / scale
        check(value <= configs.zeroTolerance, PrecisionError,
            'witness on', g, 'is', value, 'at node', list(node))

def simpleGridControllable(g, nodes):
    "intersection test of the controllability partition; exact for simple grids"
    check(isSimple(g), NotSimpleError, 'grid', g,
        'has repeated eigenvalues; use nonsimpleGridControllable or gridControllable')
    nodes = normalizeNodeSet(g, nodes)
    common = partitionIntersection(buildPartition(g, nodes))
    eigenvalues = []
    witnesses = []
    for ks in uncontrollableTuples(g, nodes):
        value = spectralValueFromTuple(g, ks)
        w = BasisVector(g, ks).vector()
        verifyWitness(g, w, value.numeric, nodes)
        eigenvalues.append(value)
        witnesses.append(w)

    order = sorted(range(len(eigenvalues)), key=lambda i: eigenvalues[i].numeric)
    controllable = not eigenvalues
    assertEq(controllable, not common, 'partition intersection disagrees with eigen-tuple scan on', g, nodes)
    return GridVerdict(grid=g, nodes=tuple(nodes), controllable=controllable, simpleGrid=True,
        commonPairs=common, uncontrollableEigenvalues=tuple(eigenvalues[i] for i in order),
        witnesses=tuple(witnesses[i] for i in order), nullDimensions=tuple(1 for _ in order),
        reason=None if controllable else Reason.partitionIntersection, minControlSetSize=1)

def suggestControlNodes(g):
    '''smallest node set found by a corner-first greedy pass over partition symbols.
    for a simple grid a single corner already has no symbols.'''
    check(isSimple(g), NotSimpleError, 'grid', g, 'has repeated eigenvalues; use suggestControlNodesNonsimple')
    chosen = []
    common = None
    candidates = g.corners() + [node for node in g.nodes() if not isCornerNode(g, node)]
    while common is None or common:
        best = None
        for node in candidates:
            if node in chosen:
                continue
            pairs = partitionPairs(g, node)
            remaining = pairs if common is None else common & pairs
            if best is None or len(remaining) < len(best[1]):
                best = (node, remaining)
            if not remaining:
                break
        chosen.append(best[0])
        common = best[1]
    return chosen
