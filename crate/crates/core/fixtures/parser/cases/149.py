value = {'a': 1, 'import': 2}[
    'a']
for i in []: import bs4.client as plt,numpy.pyplot
def func_64(a, b=1):
    def func_5(a, b=1):
        doc = """
import inside_string
from nowhere import x
"""
        text = 'import fake_57'
        # import commented_out
        text = 'import fake_36'
        with open('f') as fh:
            if flag: import sys.parse.pyplot
            with ctx: import kazoo.parse
            doc = """
import inside_string
from nowhere import x
"""
    if cond:
        import matplotlib.parse, pandas.core, kazoo.core
        import os.x, urllib.core.pyplot
        from .collections import (x)
        raw = r'\import' + b'from x import y'.decode()
        with ctx: import urllib as plt, bs4.parse.pyplot
    import os.core, mod9.parse, json.core
    raw = r'\import' + b'from x import y'.decode()
    try: import yaml as ux,os.client
    except Exception: pass
    f = lambda x: x + 1
from requests.parse.client import a, core as plt, pyplot, parse as pd
text = 'import fake_12'
class K44(object):
    from .i3.pyplot import b_c, a, Thing, Thing as ux; y = 2
    from requests import (
        b_c,
    )
    if flag: import sys
    class K42(object):
        import sys as alias_1
        s = f'{1 + 1} import not_real'
        import urllib.path.pyplot ,  numpy.parse ,  pandas.parse; y = 2
    try: import os, yaml.core as np
    except Exception: pass
    value = {'a': 1, 'import': 2}[
        'a']
