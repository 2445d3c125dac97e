# gridctl
# Released under the LGPLv3 License

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st
from mpmath import mp

from gridctl.core import *
from gridctl.grid import *


class TestPathEigenpairs:
    def test_pathAngle(self):
        assertEq(Fraction(0), pathAngle(5, 1))
        assertEq(Fraction(1, 3), pathAngle(6, 3))
        assertException(lambda: pathAngle(5, 6), NodeRangeError)

    def test_twoNodePath(self):
        pairs = pathEigensystem(2)
        assertEq([0.0, 2.0], [round(float(p.value), 12) for p in pairs])
        assertTrue(np.allclose([1, -1], pairs[1].vector))

    def test_threeNodePath(self):
        pairs = pathEigensystem(3)
        assertTrue(np.allclose([0, 1, 3], [float(p.value) for p in pairs], atol=1e-15))
        assertTrue(np.allclose([1, 0, -1], pairs[1].vector))
        assertEq(0.0, pairs[1].vector[1])

    def test_sevenNodePathSecondEigenvalue(self):
        with mp.workdps(30):
            expected = 2 - 2 * mp.cos(mp.pi / 7)
            assertTrue(abs(pathEigensystem(7)[1].value - expected) < mp.mpf('1e-28'))

    @pytest.mark.parametrize('n', [1, 2, 5, 6, 9, 15])
    def test_matchesDenseSolver(self, n):
        L = buildPathLaplacian(n).astype(float)
        for pair in pathEigensystem(n):
            v = pair.vector
            assertTrue(np.allclose(L @ v, float(pair.value) * v, atol=1e-12))
            assertFloatEq(1.0, np.max(np.abs(v)))
            assertTrue(v[0] > 0)

    def test_pathEigenvectorMpAgrees(self):
        for k in range(1, 10):
            assertTrue(np.allclose(pathEigenvector(9, k), [float(x) for x in pathEigenvectorMp(9, k)], atol=1e-14))

    def test_pathEigenvectorMpExactZeros(self):
        # the center of P_3 and every third node of P_9 at k = 4
        assertEq(0, pathEigenvectorMp(3, 2)[1])
        assertEq([2, 5, 8], [j for j, x in enumerate(pathEigenvectorMp(9, 4), start=1) if x == 0])

    @given(st.integers(min_value=1, max_value=40), st.data())
    def test_exactZerosAreTheNumericalZeros(self, n, data):
        k = data.draw(st.integers(min_value=1, max_value=n))
        raw = np.cos((2 * np.arange(1, n + 1) - 1) * (k - 1) * np.pi / (2 * n))
        for j in range(1, n + 1):
            assertEq(abs(raw[j - 1]) < 1e-9, isPathComponentZero(n, k, j), n, k, j)

    def test_symmetrySign(self):
        for n in (4, 5):
            for pair in pathEigensystem(n):
                assertTrue(np.allclose(pair.vector[::-1], pair.sign * pair.vector))
        assertEq([1, -1, 1], [pathSymmetrySign(k) for k in (1, 2, 3)])

    def test_embedPathEigenvector(self):
        v = pathEigenvector(3, 2)
        w = embedPathEigenvector(v, 3)
        assertTrue(np.allclose([1, 0, -1, -1, 0, 1, 1, 0, -1], w))
        assertFloatEq(0.0, eigenResidual(GridSpec((9,)), w, 1.0))
        assertException(lambda: embedPathEigenvector(v, 0), InvalidDimensionError)

class TestGridSpectrum:
    def test_square(self):
        spectrum = gridSpectrum(GridSpec((2, 2)))
        assertEq([0.0, 2.0, 4.0], [round(float(eb.value), 12) for eb in spectrum])
        assertEq([1, 2, 1], [eb.multiplicity for eb in spectrum])
        middle = spectrum[1]
        assertEq([(1, 2), (2, 1)], [b.ks for b in middle.basis])
        assertTrue(np.allclose([1, -1, 1, -1], middle.basis[0].vector()))
        assertTrue(np.allclose([1, 1, -1, -1], middle.basis[1].vector()))

    def test_twoByThreeHasDoubleThree(self):
        spectrum = gridSpectrum(GridSpec((2, 3)))
        three = findEigenBasis(GridSpec((2, 3)), 3)
        assertEq(2, three.multiplicity)
        assertEq(5, len(spectrum))

    def test_sevenByFifteenIsSimple(self):
        g = GridSpec((7, 15))
        assertEq(105, len(gridSpectrum(g)))
        assertTrue(isSimple(g))
        assertEq(1, minControlSetSize(g))

    def test_isSimple(self):
        assertTrue(not isSimple(GridSpec((2, 2))))
        for n in (1, 2, 9, 30):
            assertTrue(isSimple(GridSpec((n,))))

    def test_minControlSetSize(self):
        assertEq(2, minControlSetSize(GridSpec((2, 2))))
        assertEq(2, minControlSetSize(GridSpec((4, 6))))
        assertEq(2, minControlSetSize(GridSpec((3, 3))))

    def test_fourBySixRepeatedValues(self):
        repeated = [eb for eb in gridSpectrum(GridSpec((4, 6))) if eb.multiplicity > 1]
        assertEq(['2.0000000000000000', '3.0000000000000000'], [eb.value.decimal(17) for eb in repeated])

    def test_basisVectorsAreEigenvectors(self):
        g = GridSpec((3, 4, 2))
        for eb in gridSpectrum(g):
            for b in eb.basis:
                assertTrue(eigenResidual(g, b.vector(), eb.value.numeric) < 1e-12)

    def test_matchesDenseSolver(self):
        g = GridSpec((4, 6))
        numeric = np.linalg.eigvalsh(buildGridLaplacian(g).astype(float))
        analytic = [float(eb.value) for eb in gridSpectrum(g) for _ in range(eb.multiplicity)]
        assertTrue(np.allclose(numeric, analytic, atol=1e-10))

    def test_spectralValue(self):
        value = spectralValueFromTuple(GridSpec((7, 15)), (2, 6))
        assertEq((Fraction(1, 7), Fraction(1, 3)), value.components)
        assertEq('(2-2cos(1/7 pi)) + (2-2cos(1/3 pi))', value.describe())
        with mp.workdps(30):
            assertTrue(abs(value.numeric - (3 - 2 * mp.cos(mp.pi / 7))) < mp.mpf('1e-28'))
        assertEq('0', spectralValueFromTuple(GridSpec((3, 3)), (1, 1)).describe())
        assertEq('1/3', formatAngle(Fraction(1, 3)))

    def test_angleMultisetsRecordPermutations(self):
        eb = findEigenBasis(GridSpec((2, 2)), 2)
        assertEq(((Fraction(0), Fraction(1, 2)),), eb.value.angleMultisets)
        three = findEigenBasis(GridSpec((2, 3)), 3)
        assertEq(2, len(three.value.angleMultisets))

    def test_findEigenBasisMiss(self):
        assertTrue(findEigenBasis(GridSpec((2, 2)), 1.0) is None)

    def test_cacheFollowsPrecision(self):
        g = GridSpec((3, 3))
        first = gridSpectrum(g)
        assertTrue(gridSpectrum(g) is first)
        setConfigs(precisionDigits=40)
        assertTrue(gridSpectrum(g) is not first)
        second = gridSpectrum(g)
        setConfigs(groupingTolerance=1e-10)
        assertTrue(gridSpectrum(g) is not second)

    def test_capacityIsCheckedOnCachedGrids(self):
        g = GridSpec((7, 15))
        gridSpectrum(g)
        setConfigs(maxNodes=10)
        assertException(lambda: gridSpectrum(g), CapacityError)
        assertException(lambda: isSimple(g), CapacityError)

class TestGrouping:
    def test_groups(self):
        assertEq([[0], [1, 2], [3]], groupSortedValues([0.0, 1.0, 1.0 + 1e-12, 2.0], 1e-9, 10))

    def test_ambiguousGap(self):
        assertException(lambda: groupSortedValues([0.0, 5e-9], 1e-9, 10), PrecisionError,
            'GRIDCTL_PRECISION_DIGITS')
