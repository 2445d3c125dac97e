# gridctl
# Released under the LGPLv3 License

import json

import jsonschema
import pytest

from gridctl.core import *
from gridctl.grid import *
from gridctl.plugins import plugin_batch_scan, plugin_diagram, plugin_report
from gridctl.plugins.plugin_report import Mode


g715 = GridSpec((7, 15))

class TestReports:
    def test_vocabulary(self):
        assertEq('observable', plugin_report.getVocabulary(Mode.observability).holds)
        assertEq('uncontrollable', plugin_report.getVocabulary(Mode.controllability).lost)
        assertException(lambda: plugin_report.getVocabulary('reachability'), GridCtlError, 'unknown mode')

    def test_analyzeReport(self):
        verdict = gridControllable(g715, [(1, 2), (4, 1)])
        report = plugin_report.buildAnalyzeReport(verdict, Mode.controllability, includeWitnesses=True)
        plugin_report.validateReport(report)
        assertEq(False, report['verdict']['holds'])
        assertEq('not controllable', report['verdict']['label'])
        assertEq('partitionIntersection', report['verdict']['reason'])
        assertEq([[7, 3]], report['verdict']['commonPairs'])
        assertEq(3, len(report['verdict']['lostEigenvalues']))
        assertEq(105, len(report['verdict']['lostEigenvalues'][0]['witness']))
        assertEq('skipped', report['oracle']['status'])
        assertEq([[1, 2], [4, 1]], report['nodes'])

    def test_observabilityOnlyChangesTheWords(self):
        verdict = gridControllable(GridSpec((2, 2)), [(1, 1)])
        report = plugin_report.buildAnalyzeReport(verdict, Mode.observability)
        plugin_report.validateReport(report)
        assertEq('not observable', report['verdict']['label'])
        assertEq('unobservable', report['vocabulary']['lost'])
        assertEq('observation', report['vocabulary']['nodeRole'])
        assertEq('multiplicityBound', report['verdict']['reason'])

    def test_oracleComparison(self):
        g = GridSpec((2, 2))
        verdict = gridControllable(g, [(1, 1), (2, 2)])
        report = plugin_report.buildAnalyzeReport(verdict, Mode.controllability, oracle=oracleVerdict(g, verdict.nodes),
            command='verify')
        plugin_report.validateReport(report)
        assertEq('agree', report['oracle']['status'])
        assertEq(1, report['oracle']['nullDimension'])
        assertEq(3, report['oracle']['kalmanRank'])

    def test_spectrumReport(self):
        report = plugin_report.buildSpectrumReport(GridSpec((4, 6)))
        plugin_report.validateReport(report)
        assertEq(2, report['repeatedCount'])
        assertEq(2, report['minNodeCount'])
        assertEq(False, report['grid']['simple'])
        bricks = {item['decimal']: item['brick'] for item in report['eigenvalues'] if 'brick' in item}
        assertEq([2, 2], bricks['2.0000000000000000']['dims'])
        assertEq(['S+-', 'S-+'], bricks['2.0000000000000000']['profile']['classes'])
        assertEq([2, 3], bricks['3.0000000000000000']['dims'])

    def test_suggestAndScanReports(self):
        nodes = suggestNodes(g715)
        report = plugin_report.buildSuggestReport(g715, nodes, gridControllable(g715, nodes))
        plugin_report.validateReport(report)
        assertEq([[1, 1]], report['nodes'])
        assertTrue('corner' in report['justification'])

        result = plugin_batch_scan.runConjectureScan((2, 3))
        report = plugin_report.buildScanReport((2, 3), result)
        plugin_report.validateReport(report)
        assertEq(6, report['gridsScanned'])
        assertEq([], report['violations'])

    def test_schemaRejectsMissingFields(self):
        verdict = gridControllable(g715, [(1, 1)])
        report = plugin_report.buildAnalyzeReport(verdict, Mode.controllability)
        del report['partition']
        with pytest.raises(jsonschema.ValidationError):
            plugin_report.validateReport(report)

    def test_reportToText(self):
        report = plugin_report.buildSpectrumReport(GridSpec((3,)))
        assertEq(report, json.loads(plugin_report.reportToText(report)))

class TestDiagrams:
    def test_simpleSymbols(self):
        data = plugin_diagram.partitionSymbols(g715)
        legend = {item.symbol: item for item in data.legend}
        assertEq(['a1q7', 'a2q3', 'a2q5'], sorted(legend))
        assertEq([4], legend['a1q7'].coordinates)
        assertEq([2, 5, 8, 11, 14], legend['a2q3'].coordinates)
        assertEq([3, 8, 13], legend['a2q5'].coordinates)
        assertEq(['a1q7', 'a2q3', 'a2q5'], data.symbols[(4, 8)])
        assertEq([], data.symbols[(1, 1)])

    def test_pathOfThree(self):
        data = plugin_diagram.partitionSymbols(GridSpec((3,)))
        assertEq({(1,): [], (2,): ['a1q3'], (3,): []}, data.symbols)

    def test_repeatedSymbolsAreAdded(self):
        data = plugin_diagram.partitionSymbols(GridSpec((2, 2)))
        assertEq(['repeated'], [item.kind for item in data.legend])
        report = plugin_report.buildPartitionReport(GridSpec((2, 2)), data)
        plugin_report.validateReport(report)
        assertEq([1, 2], report['legend'][0]['brick'])

    def test_partitionReport(self):
        report = plugin_report.buildPartitionReport(g715, plugin_diagram.partitionSymbols(g715))
        plugin_report.validateReport(report)
        assertEq(105, len(report['symbols']))
        assertEq(dict(node=[4, 3], symbols=['a1q7', 'a2q5']),
            [item for item in report['symbols'] if item['node'] == [4, 3]][0])

    def test_renderSvg(self):
        svg = plugin_diagram.renderSvg(g715, plugin_diagram.partitionSymbols(g715))
        assertTrue(svg.startswith('<svg') and svg.endswith('</svg>'))
        assertEq(105, svg.count('r="2" fill="#555"'))
        assertTrue('a2q5: axis 2, modulus 5, coordinates 3,8,13' in svg)

    def test_svgDrawsAtMostTwoAxes(self):
        g = GridSpec((3, 3, 3))
        assertException(lambda: plugin_diagram.renderSvg(g, plugin_diagram.partitionSymbols(g)), GridCtlError, 'svg')

    def test_renderDot(self):
        dot = plugin_diagram.renderDot(g715, plugin_diagram.partitionSymbols(g715))
        assertTrue(dot.startswith('graph '))
        assertEq(6 * 15 + 7 * 14, dot.count(' -- '))
        assertTrue('[4,8]\\na1q7 a2q3 a2q5' in dot)

    def test_renderText(self):
        text = plugin_diagram.renderText(g715, plugin_diagram.partitionSymbols(g715))
        lines = text.split('\n')
        assertTrue('[4,3] a1q7 a2q5' in lines)
        assertTrue('[1,1]' not in text)

class TestBatchScan:
    def test_dimsUpTo(self):
        assertEq([(1, 1), (1, 2), (1, 3), (2, 1), (2, 2), (2, 3)], [g.dims for g in plugin_batch_scan.dimsUpTo((2, 3))])
        assertEq([(2,), (3,)], [g.dims for g in plugin_batch_scan.dimsUpTo((3,), minLength=2)])

    def test_progress(self, traced):
        displayer = plugin_batch_scan.BatchJobDisplayer(4)
        for _ in range(4):
            displayer.updateAuto()
        assertEq(['25%', '50%', '75%', '100%'], [line.split()[0] for line in traced])
        assertTrue(traced[0].startswith('25% (1 of 4 grids)'))

    def test_conjectureScan(self, traced):
        result = plugin_batch_scan.runConjectureScan((2, 3))
        assertEq(6, result.gridsScanned)
        # eigenvalue 2 of the 2x2 grid and eigenvalue 3 of the 2x3 grid
        assertEq(2, result.repeatedCount)
        assertEq([], result.violations)

    def test_randomNodeSetsAreReproducible(self):
        a = plugin_batch_scan.randomNodeSets(g715, 3, 5, seed=4)
        b = plugin_batch_scan.randomNodeSets(g715, 3, 5, seed=4)
        assertEq(a, b)
        assertEq(5, len(a))
        for nodes in a:
            assertEq(3, len(set(nodes)))
        assertEq(4, len(plugin_batch_scan.randomNodeSets(GridSpec((2, 2)), 9, 1)[0]))

    @pytest.mark.parametrize('dims', [(4, 6), (7, 15), (3, 5)])
    def test_oracleSweepAgrees(self, dims, traced):
        g = GridSpec(dims)
        nodeSets = plugin_batch_scan.randomNodeSets(g, 2, 8, seed=1)
        assertEq([], plugin_batch_scan.oracleSweep(g, nodeSets))
