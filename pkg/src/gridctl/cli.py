# gridctl
# Released under the LGPLv3 License

import argparse
import sys
import time

from .core import *
from .grid import *
from .plugins import plugin_report, plugin_diagram, plugin_batch_scan
from .plugins.plugin_report import Mode


ExitCode = Bucket(ok=0, controllable=0, usage=1, internal=2, notControllable=3)

class UsageError(GridCtlError):
    pass

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(self.prog + ':', message)

def buildParser():
    parser = _Parser(prog='gridctl', description='controllability and observability of laplacian '
        'dynamics on grid graphs, with numerical cross-checks')
    parser.add_argument('--diagnostics', action='store_true', help='print grouping and oracle details to stderr')
    sub = parser.add_subparsers(dest='command', required=True)

    def addDims(p):
        p.add_argument('--dims', required=True, help='axis lengths, e.g. 7x15')

    def addNodes(p):
        p.add_argument('--nodes', required=True, help='1-based nodes, e.g. "1,2;4,1"')
        p.add_argument('--mode', choices=[Mode.controllability, Mode.observability], default=Mode.controllability)

    p = sub.add_parser('analyze', help='decide controllability (observability) from a node set')
    addDims(p)
    addNodes(p)
    p.add_argument('--format', choices=['json', 'text'], default='json')
    p.add_argument('--verify', action='store_true', help='also run the numerical oracle')
    p.add_argument('--witnesses', action='store_true', help='include witness eigenvectors')

    p = sub.add_parser('partition', help='symbols per node for the partition diagram')
    addDims(p)
    p.add_argument('--format', choices=['json', 'svg', 'dot', 'text'], default='json')

    p = sub.add_parser('suggest', help='a small node set the grid is controllable from')
    addDims(p)
    p.add_argument('--format', choices=['json', 'text'], default='json')

    p = sub.add_parser('spectrum', help='eigenvalues, multiplicities and symmetry profiles')
    addDims(p)
    p.add_argument('--format', choices=['json', 'text'], default='json')

    p = sub.add_parser('verify', help='compare the analytic verdict with the oracle')
    addDims(p)
    addNodes(p)
    p.add_argument('--sweep', type=int, default=0, help='also check this many random node sets')
    p.add_argument('--set-size', type=int, default=2)
    p.add_argument('--seed', type=int, default=0)
    p.add_argument('--format', choices=['json', 'text'], default='json')

    p = sub.add_parser('scan-conjecture', help='look for repeated eigenvalues no smaller brick explains')
    p.add_argument('--max-dims', required=True, help='largest axis lengths, e.g. 10x10')
    p.add_argument('--format', choices=['json', 'text'], default='json')
    return parser

# ▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃ commands ▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃

def _emit(report, fmt, textLines=None):
    plugin_report.validateReport(report)
    if fmt == 'text' and textLines is not None:
        print('\n'.join(textLines))
    else:
        print(plugin_report.reportToText(report))

def _verdictLines(report):
    v = report['verdict']
    lines = ['grid %s: %s' % ('x'.join(map(str, report['grid']['dims'])), v['label'])]
    if v['reason']:
        lines.append('reason: %s' % v['reason'])
    for item in v['lostEigenvalues']:
        lines.append('  %s %s = %s (multiplicity %d)' % (report['vocabulary']['lost'], item['expression'],
            item['decimal'], item['multiplicity']))
    if report.get('oracle', {}).get('status') not in (None, 'skipped'):
        lines.append('oracle: %s' % report['oracle']['status'])
    return lines

def _dumpDisagreement(verdict, oracle):
    trace('analytic and oracle verdicts disagree on grid', verdict.grid, 'nodes', list(verdict.nodes))
    trace('  analytic:', [v.decimal(17) for v in verdict.uncontrollableEigenvalues],
        'dimension', verdict.uncontrollableDimension)
    trace('  oracle:', ['%.17g' % value for value, _ in oracle.uncontrollable],
        'dimension', oracle.nullDimension, 'kalman rank', oracle.kalmanRank)

def cmdAnalyze(args, command='analyze'):
    start = time.perf_counter()
    g = GridSpec.fromText(args.dims)
    nodes = normalizeNodeSet(g, parseNodes(args.nodes))
    verdict = gridControllable(g, nodes)
    oracle = None
    if getattr(args, 'verify', False) or command == 'verify':
        oracle = oracleVerdict(g, nodes)
    report = plugin_report.buildAnalyzeReport(verdict, args.mode, includeWitnesses=getattr(args, 'witnesses', False),
        oracle=oracle, seconds=time.perf_counter() - start, command=command)

    disagreements = []
    if command == 'verify' and args.sweep > 0:
        nodeSets = plugin_batch_scan.randomNodeSets(g, args.set_size, args.sweep, seed=args.seed)
        disagreements = plugin_batch_scan.oracleSweep(g, nodeSets)
        report['sweep'] = dict(count=len(nodeSets), setSize=args.set_size, seed=args.seed,
            disagreements=[[plugin_report.nodeToJson(node) for node in s] for s in disagreements])

    _emit(report, args.format, _verdictLines(report))
    if oracle is not None and report['oracle']['status'] != 'agree':
        _dumpDisagreement(verdict, oracle)
        return ExitCode.internal
    if disagreements:
        trace(len(disagreements), 'random node sets disagree with the oracle')
        return ExitCode.internal
    return ExitCode.controllable if verdict.controllable else ExitCode.notControllable

def cmdVerify(args):
    return cmdAnalyze(args, command='verify')

def cmdPartition(args):
    start = time.perf_counter()
    g = GridSpec.fromText(args.dims)
    data = plugin_diagram.partitionSymbols(g)
    if args.format == 'svg':
        print(plugin_diagram.renderSvg(g, data))
    elif args.format == 'dot':
        print(plugin_diagram.renderDot(g, data))
    elif args.format == 'text':
        print(plugin_diagram.renderText(g, data))
    else:
        _emit(plugin_report.buildPartitionReport(g, data, seconds=time.perf_counter() - start), 'json')
    return ExitCode.ok

def cmdSuggest(args):
    start = time.perf_counter()
    g = GridSpec.fromText(args.dims)
    nodes = suggestNodes(g)
    verdict = gridControllable(g, nodes)
    assertTrue(verdict.controllable, 'suggested nodes do not control', g)
    report = plugin_report.buildSuggestReport(g, nodes, verdict, seconds=time.perf_counter() - start)
    lines = [';'.join(','.join(str(c) for c in node) for node in nodes), report['justification']]
    _emit(report, args.format, lines)
    return ExitCode.ok

def cmdSpectrum(args):
    start = time.perf_counter()
    g = GridSpec.fromText(args.dims)
    report = plugin_report.buildSpectrumReport(g, seconds=time.perf_counter() - start)
    lines = ['grid %s: %d distinct eigenvalues, %d repeated' % (g, len(report['eigenvalues']),
        report['repeatedCount'])]
    for item in report['eigenvalues']:
        line = '  %s  x%d  %s' % (item['decimal'], item['multiplicity'], ' '.join(item['profile']['classes']))
        if 'brick' in item:
            brickProfile = item['brick']['profile']
            line += '  brick %s {%s}' % ('x'.join(map(str, item['brick']['dims'])), ','.join(brickProfile['classes']))
            if brickProfile['rule']:
                line += ' rule %s' % brickProfile['rule']
        lines.append(line)
    _emit(report, args.format, lines)
    return ExitCode.ok

def cmdScanConjecture(args):
    start = time.perf_counter()
    maxDims = GridSpec.fromText(args.max_dims).dims
    result = plugin_batch_scan.runConjectureScan(maxDims)
    report = plugin_report.buildScanReport(maxDims, result, seconds=time.perf_counter() - start)
    lines = ['scanned %d grids up to %s, %d repeated eigenvalues, %d violations' % (result.gridsScanned,
        args.max_dims, result.repeatedCount, len(result.violations))]
    _emit(report, args.format, lines)
    return ExitCode.internal if result.violations else ExitCode.ok

_commands = {
    'analyze': cmdAnalyze,
    'partition': cmdPartition,
    'suggest': cmdSuggest,
    'spectrum': cmdSpectrum,
    'verify': cmdVerify,
    'scan-conjecture': cmdScanConjecture,
}

def main(argv=None):
    prevHook = setTraceHook(traceToStderr)
    try:
        try:
            args = buildParser().parse_args(argv)
        except SystemExit as e:
            # --help
            return e.code if isinstance(e.code, int) else ExitCode.usage
        if args.diagnostics:
            setConfigs(diagnostics=True)
        return _commands[args.command](args)
    except (UsageError, InvalidDimensionError, NodeRangeError) as e:
        trace('error:', e)
        return ExitCode.usage
    except GridCtlError as e:
        trace('error:', type(e).__name__, e)
        return ExitCode.internal
    except Exception as e:
        trace('internal error:', getTraceback(e))
        return ExitCode.internal
    finally:
        setTraceHook(prevHook)

if __name__ == '__main__':
    sys.exit(main())
