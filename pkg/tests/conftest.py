# gridctl
# Released under the LGPLv3 License

import os

import hypothesis
import numpy as np
import pytest

from gridctl.core import resetConfigs, setTraceHook

np.seterr(all="warn")

hypothesis.settings.register_profile("fast", max_examples=10, deadline=None)
hypothesis.settings.register_profile("thorough", max_examples=200, deadline=None)
hypothesis.settings.load_profile(os.environ.get("GRIDCTL_HYPOTHESIS_PROFILE", "fast"))

@pytest.fixture(autouse=True)
def freshConfigs():
    "every test starts from the default (environment) configuration and plain trace output"
    resetConfigs()
    prevHook = setTraceHook(None)
    yield
    setTraceHook(prevHook)
    resetConfigs()

@pytest.fixture
def traced():
    "collects trace() output instead of printing it"
    lines = []
    prevHook = setTraceHook(lambda *args: lines.append(' '.join(str(a) for a in args)))
    yield lines
    setTraceHook(prevHook)
