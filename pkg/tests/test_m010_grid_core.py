# gridctl
# Released under the LGPLv3 License

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, strategies as st

from gridctl.core import *
from gridctl.grid import *


smallDims = st.lists(st.integers(min_value=1, max_value=5), min_size=1, max_size=3).map(tuple)

class TestGridSpec:
    def test_basics(self):
        g = GridSpec((7, 15))
        assertEq(2, g.d)
        assertEq(105, g.nodeCount)
        assertEq('7x15', str(g))
        assertEq(g, GridSpec([7, 15]))
        assertEq(GridSpec((4,)), GridSpec(4))

    def test_fromText(self):
        assertEq((7, 15), GridSpec.fromText('7x15').dims)
        assertEq((4, 6, 2), GridSpec.fromText(' 4X6x2 ').dims)
        assertEq((9,), GridSpec.fromText('9').dims)
        assertException(lambda: GridSpec.fromText('7by15'), InvalidDimensionError, 'could not parse dims')

    def test_invalidDims(self):
        assertException(lambda: GridSpec((0, 3)), InvalidDimensionError, 'at least 1')
        assertException(lambda: GridSpec(()), InvalidDimensionError, 'at least one axis')
        assertException(lambda: GridSpec((2.5,)), InvalidDimensionError, 'integer')
        assertException(lambda: GridSpec((True, 2)), InvalidDimensionError)

    def test_nodesAreRowMajor(self):
        assertEq([(1, 1), (1, 2), (1, 3), (2, 1), (2, 2), (2, 3)], list(GridSpec((2, 3)).nodes()))

    def test_corners(self):
        assertEq([(1, 1), (1, 3), (2, 1), (2, 3)], GridSpec((2, 3)).corners())
        assertEq([(1,)], GridSpec((1,)).corners())

    def test_capacity(self):
        setConfigs(maxNodes=100)
        checkCapacity(GridSpec((10, 10)))
        assertException(lambda: checkCapacity(GridSpec((10, 11))), CapacityError, 'GRIDCTL_MAX_NODES')
        assertException(lambda: buildGridLaplacian(GridSpec((10, 11))), CapacityError)

class TestNodes:
    def test_normalizeNode(self):
        g = GridSpec((7, 15))
        assertEq((4, 1), normalizeNode(g, [4, 1]))
        assertEq((3,), normalizeNode(GridSpec((5,)), 3))
        assertException(lambda: normalizeNode(g, (8, 1)), NodeRangeError, 'out of range 1..7 on axis 1')
        assertException(lambda: normalizeNode(g, (0, 1)), NodeRangeError)
        assertException(lambda: normalizeNode(g, (1, 2, 3)), NodeRangeError, 'has 3 coordinates')

    def test_normalizeNodeSet(self):
        g = GridSpec((3, 3))
        assertEq([(1, 2), (3, 1)], normalizeNodeSet(g, [(3, 1), (1, 2), (3, 1)]))
        assertException(lambda: normalizeNodeSet(g, []), NodeRangeError, 'empty')

    def test_flattenIndex(self):
        g = GridSpec((7, 15))
        assertEq(0, flattenIndex(g, (1, 1)))
        assertEq(1, flattenIndex(g, (1, 2)))
        assertEq(45, flattenIndex(g, (4, 1)))
        assertEq(104, flattenIndex(g, (7, 15)))
        assertEq(5, flattenIndex(GridSpec((2, 3)), (2, 3)))

    @given(smallDims, st.data())
    def test_unflattenInvertsFlatten(self, dims, data):
        g = GridSpec(dims)
        flat = data.draw(st.integers(min_value=0, max_value=g.nodeCount - 1))
        assertEq(flat, flattenIndex(g, unflattenIndex(g, flat)))

    def test_unflattenOutOfRange(self):
        assertException(lambda: unflattenIndex(GridSpec((2, 2)), 4), NodeRangeError)

    def test_parseNodes(self):
        assertEq([(1, 2), (4, 1)], parseNodes('1,2;4,1'))
        assertEq([(3,)], parseNodes(' 3 ; '))
        assertException(lambda: parseNodes('1,a'), NodeRangeError, 'could not parse node')
        assertException(lambda: parseNodes(';'), NodeRangeError, 'no nodes')

    def test_isCornerNode(self):
        g = GridSpec((4, 6))
        assertTrue(isCornerNode(g, (4, 1)))
        assertTrue(not isCornerNode(g, (4, 2)))

    def test_gridEdges(self):
        assertEq([(0, 1), (0, 2), (1, 3), (2, 3)], gridEdges(GridSpec((2, 2))))
        assertEq([(0, 1), (1, 2)], gridEdges(GridSpec((3,))))

class TestLaplacians:
    def test_pathLaplacian(self):
        assertEq([[0]], buildPathLaplacian(1).tolist())
        assertEq([[1, -1], [-1, 1]], buildPathLaplacian(2).tolist())
        assertEq([[1, -1, 0], [-1, 2, -1], [0, -1, 1]], buildPathLaplacian(3).tolist())
        assertException(lambda: buildPathLaplacian(0), InvalidDimensionError)

    def test_gridLaplacianOfSquare(self):
        L = buildGridLaplacian(GridSpec((2, 2)))
        assertEq([2, 2, 2, 2], list(np.diag(L)))
        assertEq([0, 0, 0, 0], list(L.sum(axis=1)))
        edges = set(gridEdges(GridSpec((2, 2))))
        for a in range(4):
            for b in range(4):
                if a != b:
                    expected = -1 if (min(a, b), max(a, b)) in edges else 0
                    assertEq(expected, L[a, b])

    def test_singleAxisGridIsThePath(self):
        assertTrue(np.array_equal(buildPathLaplacian(6), buildGridLaplacian(GridSpec((6,)))))

    @pytest.mark.parametrize('dims', [(2, 2), (2, 3), (7, 15), (4, 6)])
    def test_matchesNetworkx(self, dims):
        g = GridSpec(dims)
        G = nx.grid_2d_graph(*dims)
        nodelist = [(i - 1, j - 1) for i, j in g.nodes()]
        expected = nx.laplacian_matrix(G, nodelist=nodelist).toarray()
        assertTrue(np.array_equal(expected, buildGridLaplacian(g)))

    def test_matchesEdgeSetIn3d(self):
        g = GridSpec((2, 3, 2))
        A = np.zeros((g.nodeCount, g.nodeCount), dtype=np.int64)
        for a, b in gridEdges(g):
            A[a, b] = A[b, a] = 1
        expected = np.diag(A.sum(axis=1)) - A
        assertTrue(np.array_equal(expected, buildGridLaplacian(g)))

    def test_eigenvaluesOf2x3(self):
        values = np.linalg.eigvalsh(buildGridLaplacian(GridSpec((2, 3))).astype(float))
        assertTrue(np.allclose(sorted([0, 1, 3, 2, 3, 5]), values, atol=1e-10))

    @given(smallDims, st.integers(min_value=0, max_value=2 ** 31))
    def test_applyMatchesMatrix(self, dims, seed):
        g = GridSpec(dims)
        v = np.random.default_rng(seed).standard_normal(g.nodeCount)
        assertTrue(np.allclose(buildGridLaplacian(g) @ v, applyGridLaplacian(g, v), atol=1e-12))

    def test_eigenResidual(self):
        g = GridSpec((3,))
        assertFloatEq(0.0, eigenResidual(g, [1, 0, -1], 1))
        assertTrue(eigenResidual(g, [1, 0, 1], 1) > 0.5)
        assertEq(float('inf'), eigenResidual(g, [0, 0, 0], 1))

class TestFlips:
    def test_flipAxis1(self):
        g = GridSpec((2, 2))
        assertEq(['c', 'd', 'a', 'b'], list(flipOperator(g, 1)(np.array(['a', 'b', 'c', 'd']))))

    def test_flipAxis2(self):
        g = GridSpec((2, 2))
        assertEq(['b', 'a', 'd', 'c'], list(flipOperator(g, 2)(np.array(['a', 'b', 'c', 'd']))))

    def test_flipsCommuteWithLaplacian(self):
        g = GridSpec((3, 4))
        L = buildGridLaplacian(g)
        for axis in (1, 2):
            F = flipOperator(g, axis)
            # F L and L F, using F = F^T
            assertTrue(np.array_equal(F(L), L[:, F.permutation]))
            assertTrue(np.array_equal(F(F(np.arange(g.nodeCount))), np.arange(g.nodeCount)))

    def test_composition(self):
        g = GridSpec((3, 4))
        v = np.arange(g.nodeCount)
        both = flipOperatorOverAxes(g, (2, 1, 2))
        assertEq((1, 2), both.axes)
        assertTrue(np.array_equal(flipOperator(g, 2)(flipOperator(g, 1)(v)), both(v)))
        assertTrue(np.array_equal(v[::-1], both(v)))

    def test_badAxis(self):
        assertException(lambda: flipOperator(GridSpec((3, 4)), 3), NodeRangeError, 'out of range 1..2')
        assertException(lambda: flipOperator(GridSpec((3, 4)), 1)(np.zeros(5)), NodeRangeError)
