# gridctl
# Released under the LGPLv3 License

import itertools
from dataclasses import dataclass
from functools import reduce

import numpy as np

from ..core import *


# ▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃ grid shape ▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃

@dataclass(frozen=True)
class GridSpec:
    "cartesian product of d paths with lengths dims[0], ..., dims[d-1]"
    dims: tuple

    def __post_init__(self):
        dims = self.dims
        if isinstance(dims, int):
            dims = (dims,)
        dims = tuple(dims)
        check(len(dims) >= 1, InvalidDimensionError, 'a grid needs at least one axis')
        for n in dims:
            check(isinstance(n, (int, np.integer)) and not isinstance(n, bool), InvalidDimensionError,
                'axis length must be an integer, got', repr(n))
            check(n >= 1, InvalidDimensionError, 'axis length must be at least 1, got', n)
        object.__setattr__(self, 'dims', tuple(int(n) for n in dims))

    @property
    def d(self):
        return len(self.dims)

    @property
    def nodeCount(self):
        return reduce(lambda a, b: a * b, self.dims, 1)

    @staticmethod
    def fromText(s):
        "parses '7x15' or '4x6x2'"
        parts = s.strip().lower().replace('*', 'x').split('x')
        try:
            dims = tuple(int(part) for part in parts)
        except ValueError:
            raise InvalidDimensionError('could not parse dims', repr(s), '(expected e.g. 7x15)')
        return GridSpec(dims)

    def __str__(self):
        return 'x'.join(str(n) for n in self.dims)

    def nodes(self):
        "every node in flat (row-major) order"
        return itertools.product(*(range(1, n + 1) for n in self.dims))

    def corners(self):
        return sorted(set(itertools.product(*((1, n) for n in self.dims))))

def checkCapacity(g):
    maxNodes = getConfigs().maxNodes
    check(g.nodeCount <= maxNodes, CapacityError, 'grid', g, 'has', g.nodeCount,
        'nodes, above the configured cap of', maxNodes, '(GRIDCTL_MAX_NODES)')

# ▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃ node indices ▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃

# a node is a tuple of d 1-based coordinates, e.g. (4, 1) is node [4,1]

def normalizeNode(g, node):
    if isinstance(node, (int, np.integer)):
        node = (node,)
    node = tuple(int(c) for c in node)
    check(len(node) == g.d, NodeRangeError, 'node', list(node), 'has', len(node),
        'coordinates but grid', g, 'has', g.d, 'axes')
    for axis, (c, n) in enumerate(zip(node, g.dims)):
        check(1 <= c <= n, NodeRangeError, 'node', list(node), 'coordinate', c,
            'out of range 1..%d on axis %d' % (n, axis + 1))
    return node

def normalizeNodeSet(g, nodes):
    "validated, deduplicated, sorted; raises on an empty set"
    result = sorted(set(normalizeNode(g, node) for node in nodes))
    check(len(result) > 0, NodeRangeError, 'node set is empty')
    return result

def flattenIndex(g, node):
    "0-based row-major: sum of (i_l - 1) * prod(n_m for m > l)"
    node = normalizeNode(g, node)
    return int(np.ravel_multi_index(tuple(c - 1 for c in node), g.dims, order='C'))

def unflattenIndex(g, flat):
    check(0 <= flat < g.nodeCount, NodeRangeError, 'flat index', flat, 'out of range for', g)
    coords = np.unravel_index(int(flat), g.dims, order='C')
    return tuple(int(c) + 1 for c in coords)

def parseNodes(s):
    "'1,2;4,1' -> [(1, 2), (4, 1)]"
    nodes = []
    for part in s.split(';'):
        part = part.strip()
        if not part:
            continue
        try:
            nodes.append(tuple(int(c) for c in part.split(',')))
        except ValueError:
            raise NodeRangeError('could not parse node', repr(part), '(expected e.g. "1,2;4,1")')
    check(len(nodes) > 0, NodeRangeError, 'no nodes given in', repr(s))
    return nodes

def isCornerNode(g, node):
    node = normalizeNode(g, node)
    return all(c in (1, n) for c, n in zip(node, g.dims))

def gridEdges(g):
    "pairs of flat indices (a, b), a < b, joined by an edge of the product graph"
    edges = []
    for node in g.nodes():
        a = flattenIndex(g, node)
        for axis in range(g.d):
            if node[axis] < g.dims[axis]:
                neighbor = node[:axis] + (node[axis] + 1,) + node[axis + 1:]
                edges.append((a, flattenIndex(g, neighbor)))
    return sorted(edges)

# ▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃ laplacians ▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃

def buildPathLaplacian(n):
    check(isinstance(n, (int, np.integer)) and n >= 1, InvalidDimensionError,
        'path length must be a positive integer, got', n)
    L = np.zeros((n, n), dtype=np.int64)
    for i in range(n - 1):
        L[i, i + 1] = -1
        L[i + 1, i] = -1
        L[i, i] += 1
        L[i + 1, i + 1] += 1
    return L

def buildGridLaplacian(g):
    "L_1 (+) ... (+) L_d, the kronecker sum, in row-major node order"
    checkCapacity(g)
    N = g.nodeCount
    L = np.zeros((N, N), dtype=np.int64)
    for axis, n in enumerate(g.dims):
        before = reduce(lambda a, b: a * b, g.dims[:axis], 1)
        after = reduce(lambda a, b: a * b, g.dims[axis + 1:], 1)
        term = np.kron(np.eye(before, dtype=np.int64), buildPathLaplacian(n))
        L += np.kron(term, np.eye(after, dtype=np.int64))
    return L

def applyGridLaplacian(g, v):
    "L v without forming L; v may be real or complex, length N"
    v = np.asarray(v)
    tensor = v.reshape(g.dims)
    result = np.zeros_like(tensor, dtype=np.result_type(tensor, np.float64))
    for axis, n in enumerate(g.dims):
        Ln = buildPathLaplacian(n).astype(np.float64)
        result += np.moveaxis(np.tensordot(Ln, tensor, axes=([1], [axis])), 0, axis)
    return result.reshape(-1)

def eigenResidual(g, v, lam):
    "inf-norm of L v - lam v relative to the inf-norm of v"
    v = np.asarray(v, dtype=np.float64)
    scale = np.max(np.abs(v))
    if scale == 0:
        return float('inf')
    return float(np.max(np.abs(applyGridLaplacian(g, v) - float(lam) * v)) / scale)

# ▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃ flip operators ▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃

class FlipOperator:
    '''reverses coordinate i_l -> n_l - i_l + 1 on each listed axis. stored as an index
    permutation: (F v)[x] = v[perm[x]].'''
    def __init__(self, g, axes):
        self.grid = g
        self.axes = tuple(sorted(set(axes)))
        for axis in self.axes:
            check(isinstance(axis, (int, np.integer)) and 1 <= axis <= g.d, NodeRangeError,
                'axis', axis, 'out of range 1..%d' % g.d)

        index = np.arange(g.nodeCount).reshape(g.dims)
        for axis in self.axes:
            index = np.flip(index, axis=axis - 1)
        self.permutation = index.reshape(-1).copy()

    def __call__(self, v):
        v = np.asarray(v)
        check(v.shape[0] == self.grid.nodeCount, NodeRangeError,
            'vector length', v.shape[0], 'does not match grid', self.grid)
        return v[self.permutation]

def flipOperator(g, axis):
    return FlipOperator(g, (axis,))

def flipOperatorOverAxes(g, axes):
    return FlipOperator(g, axes)
