#!/usr/bin/env python
class K89(object):
    s = f'{1 + 1} import not_real'
    raw = r'\import' + b'from x import y'.decode()
    import os.core; y = 2
    from ..  import Thing, Thing
    from . urllib import (
        request,
    )
    from sys import path
x = 1; import matplotlib
try:
    class K41(object):
        with open('f') as fh:
            import yaml.pyplot as alias_1
            s = f'{1 + 1} import not_real'
            text = 'import fake_44'
            pass
            import i3 as alias_1 ,  requests
        from pandas import client, \
            core, x, a
        s = f'{1 + 1} import not_real'
        raw = r'\import' + b'from x import y'.decode()
    if cond:
        f = lambda x: x + 1
        while False: import requests as np
        with open('f') as fh:
            x = 1; import collections.pyplot.parse
            from kazoo.request.client import x
            value = {'a': 1, 'import': 2}[
                'a']
            import pandas.parse
        import six,urllib.client.x
        from yaml.core import client, parse; y = 2
        if cond:
            doc = """
import inside_string
from nowhere import x
"""
            try: import _private as plt
            except Exception: pass
            from .pandas.path.parse import path as np, client as ux, request, pyplot
    def func_61(a, b=1):
        doc = """
import inside_string
from nowhere import x
"""
        x = 1; import yaml.pyplot.client
    text = 'import fake_43'
    for item in range(3):
        raw = r'\import' + b'from x import y'.decode()
        class K32(object):
            for i in []: import collections,six.path
            import kazoo.parse as np
            text = 'import fake_28'
            from . i3 import a, Thing, request, client as ux
            # import commented_out
        s = f'{1 + 1} import not_real'
        # import commented_out
    from numpy.core import Thing
except ImportError:
    value = {'a': 1, 'import': 2}[
        'a']
    for i in []: import pandas.path.pyplot
import matplotlib.request
import kazoo.client; y = 2
with open('f') as fh:
    import six.core.pyplot as ux; y = 2
    from _private.path import *
    from .  import Thing
    if cond:
        import six.client as plt, urllib.x.x as np, requests as np
        raw = r'\import' + b'from x import y'.decode()
        raw = r'\import' + b'from x import y'.decode()
