# gridctl
# Released under the LGPLv3 License

import os

from .m010_core_util import *
from .m020_core_data_structures import *


# ▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃ configuration ▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃

def getDefaultConfigs():
    configs = Bucket()

    # significant digits for every mpmath evaluation
    configs.precisionDigits = 30

    # absolute tolerance when grouping eigenvalues, and the factor the gap between
    # neighboring groups must exceed
    configs.groupingTolerance = 1e-9
    configs.gapGuardFactor = 10

    configs.maxNodes = 4096
    # kalman rank is refused above kalmanMaxNodes and only run unasked up to kalmanAutoNodes
    configs.kalmanMaxNodes = 200
    configs.kalmanAutoNodes = 40

    configs.residualTolerance = 1e-10
    configs.zeroTolerance = 1e-10
    configs.oracleZeroTolerance = 1e-8

    # |det| <= determinantScale * (product of row inf-norms) counts as zero
    configs.determinantScale = 1e-20
    configs.diagnostics = False
    return configs

_envOverrides = [
    ('GRIDCTL_PRECISION_DIGITS', 'precisionDigits', int),
    ('GRIDCTL_MAX_NODES', 'maxNodes', int),
    ('GRIDCTL_DIAGNOSTICS', 'diagnostics', lambda s: s.strip().lower() in ('1', 'true', 'yes', 'on')),
]

def getConfigsFromEnvironment(environ=None):
    environ = os.environ if environ is None else environ
    configs = getDefaultConfigs()
    for envName, field, convert in _envOverrides:
        s = environ.get(envName)
        if s is None or not s.strip():
            continue
        try:
            setattr(configs, field, convert(s))
        except ValueError:
            raise GridCtlError('could not parse', envName, '=', repr(s))

    check(configs.precisionDigits >= 20, GridCtlError,
        'GRIDCTL_PRECISION_DIGITS must be at least 20, got', configs.precisionDigits)
    check(configs.maxNodes >= 1, GridCtlError, 'GRIDCTL_MAX_NODES must be positive')
    return configs

gConfigs = None
def getConfigs():
    global gConfigs
    if gConfigs is None:
        gConfigs = getConfigsFromEnvironment()
    return gConfigs

def setConfigs(**params):
    "override named fields of the active configuration; unknown names are rejected"
    return mergeParamsIntoBucket(getConfigs(), params)

def resetConfigs():
    global gConfigs
    gConfigs = None
