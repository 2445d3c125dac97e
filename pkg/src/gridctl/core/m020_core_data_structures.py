# gridctl
# Released under the LGPLv3 License

import functools
import random
from collections import OrderedDict

from .m010_core_util import *


# ▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃ records and enums ▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃

class Bucket:
    "named fields without declaring a class; used for configs and small result records"
    def __init__(self, **kwargs):
        self.__dict__.update(kwargs)

    def __repr__(self):
        return '\n'.join('%s=%s' % (key, value) for key, value in sorted(self.__dict__.items()))

class SimpleEnum:
    "a closed set of names; e.g. Reason.multiplicityBound is the string 'multiplicityBound'"
    def __init__(self, names):
        assertTrue(not isinstance(names, str), 'pass a list of names, not one string')
        object.__setattr__(self, '_names', tuple(names))

    def __getattr__(self, name):
        if name in self._names:
            return name
        raise AttributeError(name)

    def __setattr__(self, name, value):
        raise RuntimeError('enum values are fixed')

    def __delattr__(self, name):
        raise RuntimeError('enum values are fixed')

    def __contains__(self, name):
        return name in self._names

    def __iter__(self):
        return iter(self._names)

def mergeParamsIntoBucket(bucketConfigs, dictParams):
    known = vars(bucketConfigs)
    for key, value in dictParams.items():
        check(key in known and not key.startswith('_'), GridCtlError, 'not a supported config:', key)
        setattr(bucketConfigs, key, value)
    return bucketConfigs

# ▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃ reproducible random streams ▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃

class IndependentRNG:
    '''within the block, the module-level random functions draw from this seed's stream;
    the caller's stream is restored on exit and ours resumes where it stopped next time'''
    def __init__(self, seed=None):
        self._stream = random.Random(seed)
        self._outside = None

    def __enter__(self):
        if self._outside is None:
            self._outside = random.getstate()
            random.setstate(self._stream.getstate())
        return self

    def __exit__(self, excType, excValue, tb):
        if self._outside is not None:
            self._stream.setstate(random.getstate())
            random.setstate(self._outside)
            self._outside = None

# ▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃ memoization ▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃▃

def BoundedMemoize(fn, limit=20):
    '''first-in first-out cache of at most limit results. arguments must be hashable;
    callers pass every config value the result depends on, so changing one is a new key'''
    cache = OrderedDict()

    @functools.wraps(fn)
    def memoizeWrapper(*args, **kwargs):
        key = (args, tuple(sorted(kwargs.items())))
        if key in cache:
            return cache[key]
        result = fn(*args, **kwargs)
        cache[key] = result
        while len(cache) > limit:
            cache.popitem(last=False)
        return result

    memoizeWrapper.cache = cache
    return memoizeWrapper
