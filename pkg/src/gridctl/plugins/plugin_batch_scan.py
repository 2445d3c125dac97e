# gridctl
# Released under the LGPLv3 License

import itertools
import random

from ..core import *
from ..grid import *


class BatchJobDisplayer:
    "percentage progress through trace(), shown only when the whole percent changes"
    def __init__(self, totalCount, label='grids'):
        self.totalCount = max(totalCount, 1)
        self.label = label
        self.done = 0
        self.prevShown = None

    def updateAuto(self, showProgressString=''):
        self.done += 1
        self.update(self.done, showProgressString=showProgressString)

    def update(self, currentCount, showProgressString=''):
        percentage = (100 * currentCount) // self.totalCount
        if percentage == self.prevShown:
            return
        self.prevShown = percentage
        trace('%d%% (%d of %d %s)' % (percentage, currentCount, self.totalCount, self.label), showProgressString)

def dimsUpTo(maxDims, minLength=1):
    "every GridSpec with minLength <= n_l <= maxDims[l]"
    return [GridSpec(dims) for dims in itertools.product(*(range(minLength, m + 1) for m in maxDims))]

def runConjectureScan(maxDims, displayer=None):
    grids = dimsUpTo(maxDims)
    displayer = displayer or BatchJobDisplayer(len(grids))
    violations = []
    repeatedCount = 0
    for g in grids:
        report = brickInheritanceScan(g)
        repeatedCount += len(report.entries)
        violations.extend((g, entry) for entry in report.violations)
        displayer.updateAuto(str(g))
    return Bucket(gridsScanned=len(grids), repeatedCount=repeatedCount, violations=violations)

def randomNodeSets(g, size, count, seed=0):
    "count distinct-node sets of the given size, reproducible through seed"
    nodes = list(g.nodes())
    size = min(size, len(nodes))
    with IndependentRNG(seed):
        return [sorted(random.sample(nodes, size)) for _ in range(count)]

def oracleSweep(g, nodeSets, displayer=None, withKalman=False):
    "analytic verdicts against the pbh oracle; returns the disagreeing node sets"
    displayer = displayer or BatchJobDisplayer(len(nodeSets), label='node sets')
    L = buildGridLaplacian(g)
    spectrum = numericEigensystem(L)
    disagreements = []
    for nodes in nodeSets:
        verdict = gridControllable(g, nodes)
        flatNodes = [flattenIndex(g, node) for node in nodes]
        lost = pbhUncontrollable(L, flatNodes, spectrum=spectrum)
        agree = verdict.controllable == (not lost)
        if agree and withKalman:
            agree = (kalmanRank(L, flatNodes) == g.nodeCount) == verdict.controllable
        if not agree:
            traceDiagnostic('disagreement on', g, nodes)
            disagreements.append(nodes)
        displayer.updateAuto()
    return disagreements
