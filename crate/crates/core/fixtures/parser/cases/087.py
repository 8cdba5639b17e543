#!/usr/bin/env python
pass
pass
s = f'{1 + 1} import not_real'
class K73(object):
    import _private; y = 2
    from .. json import (client)
    import numpy,yaml.x.path,pandas
    if flag: import urllib
text = 'import fake_67'
class K71(object):
    with ctx: import yaml.pyplot.client
    with open('f') as fh:
        with open('f') as fh:
            from .. import (
                pyplot,
            )
            x = 1; from bs4.core.path import b_c, path as pd, pyplot as plt, b_c as pd
            import requests as plt
        import json.x,_private.path as np
        def func_30(a, b=1):
            from mod9.path import *
            while False: import yaml as plt
            for i in []: import sys.x.pyplot ,  os as ux
            try: import _private.request.parse ,  kazoo as alias_1 ,  requests.x.path
            except Exception: pass
        try:
            total = (1 +
                     2)  # trailing import comment
            import numpy.request,_private.request.pyplot,pandas.core
        except ImportError:
            doc = """
import inside_string
from nowhere import x
"""
            f = lambda x: x + 1
            from mod9.pyplot import Thing
            x = 1; import requests.request as ux
            for i in []: import _private
        value = {'a': 1, 'import': 2}[
            'a']
    total = (1 +
             2)  # trailing import comment
    raw = r'\import' + b'from x import y'.decode()
