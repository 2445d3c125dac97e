# gridctl
# Released under the LGPLv3 License

import json
import os

import jsonschema
import numpy as np

from ..core import *
from ..grid import *


SchemaVersion = '1.0'

Mode = SimpleEnum(['controllability', 'observability'])

# observability is the same computation on (L, C^T); only the words change
_vocabulary = {
    Mode.controllability: Bucket(holds='controllable', fails='not controllable', lost='uncontrollable',
        nodeRole='control'),
    Mode.observability: Bucket(holds='observable', fails='not observable', lost='unobservable',
        nodeRole='observation'),
}

def getVocabulary(mode):
    check(mode in _vocabulary, GridCtlError, 'unknown mode', repr(mode))
    return _vocabulary[mode]

# ▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃ pieces ▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃

def gridToJson(g):
    return dict(dims=list(g.dims), nodeCount=g.nodeCount)

def nodeToJson(node):
    return [int(c) for c in node]

def spectralValueToJson(value):
    return dict(
        components=[formatAngle(a) for a in value.components],
        angleMultisets=[[formatAngle(a) for a in multiset] for multiset in value.angleMultisets],
        decimal=value.decimal(17),
        multiplicity=int(value.multiplicity),
        expression=value.describe())

def vectorToJson(v):
    return [float(x) for x in np.asarray(v, dtype=np.float64)]

def profileToJson(profile):
    return dict(kind=profile.kind, classes=[cls.label for cls in profile.classes],
        invariantAxisSets=[list(axes) for axes in profile.invariantAxisSets], rule=profile.rule)

def verdictToJson(verdict, mode, includeWitnesses=False):
    words = getVocabulary(mode)
    lost = []
    for value, w, nullDim in zip(verdict.uncontrollableEigenvalues, verdict.witnesses, verdict.nullDimensions):
        item = spectralValueToJson(value)
        item['nullDimension'] = int(nullDim)
        if includeWitnesses:
            item['witness'] = vectorToJson(w)
        lost.append(item)

    return dict(
        holds=bool(verdict.controllable),
        label=words.holds if verdict.controllable else words.fails,
        reason=verdict.reason,
        commonPairs=[list(pair) for pair in sorted(verdict.commonPairs)],
        lostEigenvalues=lost,
        lostDimension=int(verdict.uncontrollableDimension),
        minNodeCount=int(verdict.minControlSetSize))

def compareWithOracle(verdict, oracle):
    '''agree when both say the same thing, lose the same eigenvalues (to 1e-8), and lose
    subspaces of the same dimension'''
    analytic = sorted(float(v) for v in verdict.uncontrollableEigenvalues)
    numeric = sorted(value for value, _ in oracle.uncontrollable)
    agree = (verdict.controllable == oracle.controllable and len(analytic) == len(numeric) and
        all(abs(a - b) <= 1e-8 for a, b in zip(analytic, numeric)) and
        verdict.uncontrollableDimension == oracle.nullDimension)
    return dict(status='agree' if agree else 'disagree', lostCount=len(numeric),
        nullDimension=int(oracle.nullDimension), kalmanRank=oracle.kalmanRank)

# ▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃ reports ▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃

def _header(command, mode=Mode.controllability):
    words = getVocabulary(mode)
    return dict(schemaVersion=SchemaVersion, command=command, mode=mode,
        vocabulary=dict(holds=words.holds, lost=words.lost, nodeRole=words.nodeRole))

def buildAnalyzeReport(verdict, mode, includeWitnesses=False, oracle=None, seconds=0.0, command='analyze'):
    g = verdict.grid
    report = _header(command, mode)
    report['grid'] = dict(gridToJson(g), simple=bool(verdict.simpleGrid))
    report['nodes'] = [nodeToJson(node) for node in verdict.nodes]
    report['verdict'] = verdictToJson(verdict, mode, includeWitnesses=includeWitnesses)
    report['partition'] = [dict(node=nodeToJson(entry.node), pairs=[list(p) for p in entry.sortedPairs()])
        for entry in buildPartition(g, verdict.nodes)]
    report['oracle'] = compareWithOracle(verdict, oracle) if oracle is not None else dict(status='skipped')
    report['timing'] = dict(seconds=float(seconds))
    return report

def buildSpectrumReport(g, seconds=0.0):
    report = _header('spectrum')
    spectrum = gridSpectrum(g)
    scan = {entry.value.decimal(17): entry for entry in brickInheritanceScan(g).entries}
    items = []
    for eb in spectrum:
        item = spectralValueToJson(eb.value)
        item['profile'] = profileToJson(eigenspaceSymmetryProfile(eb))
        entry = scan.get(eb.value.decimal(17))
        if entry is not None and entry.attributedBrick is not None:
            item['brick'] = dict(dims=list(entry.attributedBrick.dims), profile=profileToJson(entry.brickProfile()))
        items.append(item)
    report['grid'] = dict(gridToJson(g), simple=all(eb.multiplicity == 1 for eb in spectrum))
    report['minNodeCount'] = int(minControlSetSize(g))
    report['eigenvalues'] = items
    report['repeatedCount'] = sum(1 for eb in spectrum if eb.multiplicity > 1)
    report['timing'] = dict(seconds=float(seconds))
    return report

def buildPartitionReport(g, symbolData, seconds=0.0):
    report = _header('partition')
    report['grid'] = dict(gridToJson(g), simple=bool(isSimple(g)))
    report['symbols'] = [dict(node=nodeToJson(node), symbols=list(names))
        for node, names in sorted(symbolData.symbols.items())]
    legend = []
    for item in symbolData.legend:
        if item.kind == 'simple':
            legend.append(dict(symbol=item.symbol, kind='simple', axis=item.axis, modulus=item.modulus))
        else:
            legend.append(dict(symbol=item.symbol, kind='repeated', decimal=item.value.decimal(17),
                brick=list(item.brick.dims)))
    report['legend'] = legend
    report['timing'] = dict(seconds=float(seconds))
    return report

def buildSuggestReport(g, nodes, verdict, seconds=0.0):
    report = _header('suggest')
    report['grid'] = dict(gridToJson(g), simple=bool(verdict.simpleGrid))
    report['nodes'] = [nodeToJson(node) for node in nodes]
    if verdict.simpleGrid:
        justification = 'corner nodes are blocked by no prime power on any axis'
    else:
        justification = ('repeated eigenvalues need at least %d nodes; chosen greedily, corners first' %
            verdict.minControlSetSize)
    report['justification'] = justification
    report['verdict'] = verdictToJson(verdict, Mode.controllability)
    report['timing'] = dict(seconds=float(seconds))
    return report

def buildScanReport(maxDims, scanResult, seconds=0.0):
    report = _header('scan-conjecture')
    report['maxDims'] = list(maxDims)
    report['gridsScanned'] = int(scanResult.gridsScanned)
    report['repeatedCount'] = int(scanResult.repeatedCount)
    report['violations'] = [dict(dims=list(g.dims), value=spectralValueToJson(entry.value))
        for g, entry in scanResult.violations]
    report['timing'] = dict(seconds=float(seconds))
    return report

# ▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃ schema ▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃

def getSchemaPath():
    return os.path.join(os.path.dirname(os.path.abspath(__file__)), '..', 'schema', 'report.schema.json')

gSchema = None
def loadSchema():
    global gSchema
    if gSchema is None:
        with open(getSchemaPath(), 'r', encoding='utf-8') as f:
            gSchema = json.load(f)
    return gSchema

def validateReport(report):
    "raises jsonschema.ValidationError when the report does not match the shipped schema"
    jsonschema.validate(instance=report, schema=loadSchema())
    return report

def reportToText(report):
    return json.dumps(report, indent=2, sort_keys=True)
