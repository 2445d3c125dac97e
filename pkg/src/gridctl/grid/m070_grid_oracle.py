# gridctl
# Released under the LGPLv3 License

'''independent numerical checks. nothing here uses the closed forms: eigenvectors come
from a dense symmetric eigensolver, and controllability from PBH zero patterns or the
rank of the krylov matrix.'''

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from ..core import *
from .m010_grid_core import *
from .m020_grid_spectral import groupSortedValues


@dataclass(frozen=True, eq=False)
class NumericSpectrum:
    "eigenvalues ascending; groups[i] lists the eigenvector columns of the i-th distinct eigenvalue"
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    groups: tuple

    def groupValue(self, index):
        return float(np.mean(self.eigenvalues[list(self.groups[index])]))

    def groupBasis(self, index):
        return self.eigenvectors[:, list(self.groups[index])]

def numericEigensystem(L):
    configs = getConfigs()
    L = np.asarray(L, dtype=np.float64)
    N = L.shape[0]
    check(L.shape == (N, N), OracleError, 'expected a square matrix, got', L.shape)
    check(N <= configs.maxNodes, CapacityError, 'matrix order', N, 'above the configured cap of', configs.maxNodes)
    try:
        values, vectors = np.linalg.eigh(L)
    except np.linalg.LinAlgError as e:
        raise OracleError('symmetric eigensolver failed:', e)

    normL = max(np.max(np.abs(L).sum(axis=1)), 1.0)
    residual = np.max(np.abs(L @ vectors - vectors * values))
    check(residual <= 1e-9 * normL, OracleError, 'eigen-residual', residual, 'too large')
    orthogonality = np.max(np.abs(vectors.T @ vectors - np.eye(N)))
    check(orthogonality <= 1e-9, OracleError, 'eigenvectors not orthonormal, deviation', orthogonality)

    groups = groupSortedValues(list(values), configs.groupingTolerance, configs.gapGuardFactor,
        context='in the numeric spectrum')
    return NumericSpectrum(eigenvalues=values, eigenvectors=vectors, groups=tuple(tuple(g) for g in groups))

def pbhUncontrollable(L, flatNodes, spectrum=None):
    '''(eigenvalue, witness) for every eigenvalue with an eigenvector vanishing on all the
    rows in flatNodes: the null space of the eigenspace basis restricted to those rows.'''
    flatNodes = sorted(set(int(i) for i in flatNodes))
    check(len(flatNodes) > 0, NodeRangeError, 'node set is empty')
    spectrum = spectrum if spectrum is not None else numericEigensystem(L)
    N = spectrum.eigenvectors.shape[0]
    for i in flatNodes:
        check(0 <= i < N, NodeRangeError, 'row', i, 'out of range for order', N)

    tau = getConfigs().oracleZeroTolerance
    result = []
    for index in range(len(spectrum.groups)):
        V = spectrum.groupBasis(index)
        S = V[flatNodes, :]
        _, sv, Vh = scipy.linalg.svd(S, full_matrices=True)
        # orthonormal V: |w_i| <= sigma <= tau/sqrt(N) <= tau * ||w||_inf for a unit w
        rank = int(np.sum(sv > tau / np.sqrt(N)))
        if rank == V.shape[1]:
            continue
        w = V @ Vh[rank:].T[:, 0]
        scale = np.max(np.abs(w))
        assertTrue(np.max(np.abs(w[flatNodes])) <= tau * scale, 'pbh witness does not vanish')
        result.append((spectrum.groupValue(index), w))
    return result

def pbhNullDimension(L, flatNodes, spectrum=None):
    "sum over eigenvalues of the dimension of eigenvectors vanishing on flatNodes"
    flatNodes = sorted(set(int(i) for i in flatNodes))
    spectrum = spectrum if spectrum is not None else numericEigensystem(L)
    N = spectrum.eigenvectors.shape[0]
    tau = getConfigs().oracleZeroTolerance
    total = 0
    for index in range(len(spectrum.groups)):
        V = spectrum.groupBasis(index)
        sv = scipy.linalg.svd(V[flatNodes, :], compute_uv=False)
        total += V.shape[1] - int(np.sum(sv > tau / np.sqrt(N)))
    return total

def selectionMatrix(N, flatNodes):
    "B with one unit column per node; C = B^T for the observation version"
    B = np.zeros((N, len(flatNodes)))
    for col, i in enumerate(flatNodes):
        B[i, col] = 1.0
    return B

def kalmanRank(L, flatNodes):
    '''rank of [B, LB, ..., L^(N-1) B]. computed on T_r(A) B, with A = (L - hI)/h scaled to
    spectrum [-1, 1] and T_r the chebyshev polynomials; same column span, bounded entries.'''
    L = np.asarray(L, dtype=np.float64)
    N = L.shape[0]
    flatNodes = sorted(set(int(i) for i in flatNodes))
    check(len(flatNodes) > 0, NodeRangeError, 'node set is empty')
    check(N <= getConfigs().kalmanMaxNodes, OracleError, 'kalman rank with', N,
        'states is too poorly conditioned; use the pbh oracle')
    if N > getConfigs().kalmanAutoNodes:
        traceDiagnostic('kalman rank with', N, 'states may be poorly conditioned')

    h = max(np.max(np.abs(L).sum(axis=1)) / 2.0, 1.0)
    A = (L - h * np.eye(N)) / h
    B = selectionMatrix(N, flatNodes)
    blocks = [B]
    if N > 1:
        blocks.append(A @ B)
    while len(blocks) < N:
        blocks.append(2 * (A @ blocks[-1]) - blocks[-2])
    K = np.hstack(blocks)
    norms = np.linalg.norm(K, axis=0)
    K = K[:, norms > 0] / norms[norms > 0]
    sv = scipy.linalg.svd(K, compute_uv=False)
    return int(np.sum(sv > 1e-8 * sv[0]))

def oracleVerdict(g, nodes, withKalman=None):
    "PBH (and, for small grids, kalman) verdict for a node set of a grid"
    L = buildGridLaplacian(g)
    flatNodes = [flattenIndex(g, node) for node in normalizeNodeSet(g, nodes)]
    spectrum = numericEigensystem(L)
    lost = pbhUncontrollable(L, flatNodes, spectrum=spectrum)
    nullDimension = pbhNullDimension(L, flatNodes, spectrum=spectrum)
    if withKalman is None:
        withKalman = g.nodeCount <= getConfigs().kalmanAutoNodes
    rank = kalmanRank(L, flatNodes) if withKalman else None
    if rank is not None:
        check((rank == g.nodeCount) == (not lost), OracleError, 'pbh and kalman disagree on', g,
            'kalman rank', rank, 'pbh lost', len(lost))
    return Bucket(controllable=not lost, uncontrollable=lost, nullDimension=nullDimension, kalmanRank=rank)
