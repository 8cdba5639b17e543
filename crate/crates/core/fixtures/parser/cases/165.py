#!/usr/bin/env python
# import commented_out
class K31(object):
    import i3
    from pandas.core.request import (
        client,
    )
    try:
        import json.core as pd ,  json as alias_1 ,  urllib.path
        value = {'a': 1, 'import': 2}[
            'a']
        raw = r'\import' + b'from x import y'.decode()
        def func_51(a, b=1):
            if flag: import mod9
            text = 'import fake_20'
    except ImportError:
        x = 1; import sys ,  sys.parse.path as ux ,  six.pyplot as pd
        import _private ,  _private ,  sys
    import requests.request, collections.x.path as ux; y = 2
    for item in range(3):
        try:
            try: import mod9 ,  six.request ,  kazoo as np
            except Exception: pass
            while False: import numpy as alias_1, matplotlib
            for i in []: import i3.path, i3.path
        except ImportError:
            if flag: import _private
            import matplotlib as np ,  i3.request as ux ,  yaml
            f = lambda x: x + 1
            text = 'import fake_47'
            from sys import Thing as np, path as alias_1, core, b_c
            from _private import Thing
        from six.core.pyplot import x
        # import commented_out
        for item in range(3):
            if flag: import bs4 as alias_1
            while False: import numpy.request.request as plt
            # import commented_out
            import urllib.x as ux
            f = lambda x: x + 1
            s = f'{1 + 1} import not_real'
        f = lambda x: x + 1
        import requests.path.x
    from os import pyplot
raw = r'\import' + b'from x import y'.decode()
x = 1; from kazoo.x.parse import pyplot as alias_1
doc = """
import inside_string
from nowhere import x
"""
import kazoo.client.pyplot
