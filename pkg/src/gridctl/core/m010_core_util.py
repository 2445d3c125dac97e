# gridctl
# Released under the LGPLv3 License

import os
import pprint
import re
import sys
import traceback
import unicodedata


# ▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃ assertions ▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃

def _joinParts(parts):
    return ' '.join(getPrintable(part) for part in parts)

def assertTrue(condition, *messageArgs):
    if not condition:
        raise AssertionError(_joinParts(messageArgs))

def assertEq(expected, received, *messageArgs):
    if expected == received:
        return
    raise AssertionError('%s\nassertion failed, expected:\n%s\nbut got:\n%s' % (
        _joinParts(messageArgs), getPrintable(pprint.pformat(expected)), getPrintable(pprint.pformat(received))))

def assertFloatEq(expected, received, *messageArgs, precision=1e-10):
    difference = abs(float(expected) - float(received))
    assertTrue(difference <= precision, *messageArgs,
        'expected %.17g, got %.17g, difference of %g' % (float(expected), float(received), difference))

def assertException(fn, excType, excTypeExpectedString=None, msg='', regexp=False):
    "fn() must raise excType (any exception if None) whose text contains excTypeExpectedString"
    try:
        fn()
    except Exception as e:
        caught = e
    else:
        raise AssertionError('did not throw ' + msg)

    if excType is not None and not isinstance(caught, excType):
        raise AssertionError('exception type check failed %s\ngot %r, expected %r' % (msg, caught, excType))
    if excTypeExpectedString:
        text = str(caught)
        found = re.search(excTypeExpectedString, text) if regexp else excTypeExpectedString in text
        assertTrue(found, 'exception string check failed', msg, '\ngot exception string:\n' + text)

def check(condition, excType, *messageArgs):
    "like assertTrue, but raises one of the GridCtlError types for caller mistakes"
    if not condition:
        raise excType(*messageArgs)

def getTraceback(e):
    return ''.join(traceback.format_exception(type(e), e, e.__traceback__))

# ▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃ errors ▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃

class GridCtlError(RuntimeError):
    "you can pass in many parts like GridCtlError('axis', 3, 'out of range')"
    def __init__(self, *args):
        super().__init__(' '.join(str(arg) for arg in args))

class InvalidDimensionError(GridCtlError):
    pass

class NodeRangeError(GridCtlError):
    pass

class CapacityError(GridCtlError):
    pass

class PrecisionError(GridCtlError):
    pass

class ResidualError(PrecisionError):
    "a vector claimed to be an eigenvector failed its residual check"
    pass

class OracleError(GridCtlError):
    pass

class ArityError(GridCtlError):
    pass

class NotSimpleError(GridCtlError):
    pass

# ▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃ trace helpers ▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃

def getPrintable(s):
    "ascii-only text; decimals and angle strings pass through, symbols like the arrow become '?'"
    if isinstance(s, bytes):
        s = s.decode('ascii', 'replace')
    elif not isinstance(s, str):
        s = str(s)
    return unicodedata.normalize('NFKD', s).encode('ascii', 'replace').decode('ascii')

gTraceHook = None
def trace(*args, always=False):
    "progress and diagnostics; the CLI sends these to stderr so stdout stays machine-readable"
    if gTraceHook is not None and not always:
        gTraceHook(*args)
    else:
        print(_joinParts(args))

def setTraceHook(fn):
    "install fn(*args) as the destination of trace(); pass None to restore printing"
    global gTraceHook
    prev, gTraceHook = gTraceHook, fn
    return prev

def traceToStderr(*args):
    sys.stderr.write(_joinParts(args) + os.linesep)

def traceDiagnostic(*args):
    "only shown when diagnostics are turned on"
    from .m030_core_prefs import getConfigs
    if getConfigs().diagnostics:
        trace('[diag]', *args)
