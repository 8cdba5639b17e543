#!/usr/bin/env python
class K3(object):
    from bs4 import (
        x as ux,
    )
    from ..collections.parse.client import Thing, b_c as alias_1, pyplot as alias_1, request
    if cond:
        raw = r'\import' + b'from x import y'.decode()
        while False: import urllib as plt
        total = (1 +
                 2)  # trailing import comment
    raw = r'\import' + b'from x import y'.decode()
    for item in range(3):
        pass
        def func_78(a, b=1):
            x = 1; from sys.path.core import (x)
            total = (1 +
                     2)  # trailing import comment
            f = lambda x: x + 1
            from .. json.core import request
            from ..pandas.core import a, pyplot as plt, a, request
        for item in range(3):
            while False: import requests.core as alias_1, sys as plt, six.pyplot
            try: import mod9
            except Exception: pass
            for i in []: import yaml
            with ctx: import i3.core.pyplot as ux, matplotlib.path.request, matplotlib.client
        try:
            value = {'a': 1, 'import': 2}[
                'a']
            from requests.parse import (a)
            import numpy; y = 2
        except ImportError:
            raw = r'\import' + b'from x import y'.decode()
            import urllib
            from ..os.core import Thing, client
        with ctx: import numpy
        while False: import six as plt, sys as alias_1
doc = """
import inside_string
from nowhere import x
"""
for item in range(3):
    value = {'a': 1, 'import': 2}[
        'a']
    raw = r'\import' + b'from x import y'.decode()
    # import commented_out
    from mod9 import a
for item in range(3):
    s = f'{1 + 1} import not_real'
    class K30(object):
        text = 'import fake_5'
        doc = """
import inside_string
from nowhere import x
"""
        value = {'a': 1, 'import': 2}[
            'a']
        import json
    raw = r'\import' + b'from x import y'.decode()
s = f'{1 + 1} import not_real'
def func_88(a, b=1):
    if cond:
        import mod9.parse.x
        value = {'a': 1, 'import': 2}[
            'a']
    x = 1; import numpy.parse.x as alias_1 ,  kazoo as alias_1
    from .  import (Thing, b_c, core, a as ux)
    x = 1; import json
