#!/usr/bin/env python
for item in range(3):
    text = 'import fake_78'
    import requests.core as pd
    x = 1; from . import path, pyplot
pass
try:
    while False: import sys.client
    from ..i3 import (
        pyplot as np,
    )
    from bs4 import Thing, b_c as np
    if cond:
        try:
            text = 'import fake_58'
            import urllib.parse.pyplot as plt ,  os ,  os as plt
            text = 'import fake_63'
            if flag: import requests.parse.client
        except ImportError:
            import i3 as alias_1, os.parse.core
            try: import pandas.client ,  json.parse.request
            except Exception: pass
            pass
        import urllib.core.client as pd; y = 2
        # import commented_out
        x = 1; import i3 as alias_1
        import pandas.pyplot
    from matplotlib.path import (
        a,
    )
    def func_76(a, b=1):
        s = f'{1 + 1} import not_real'
        pass
        from . matplotlib.parse import (
            Thing as alias_1,
        )
        try:
            if flag: import mod9.core
            if flag: import collections
        except ImportError:
            import i3.parse as np,pandas.parse
            s = f'{1 + 1} import not_real'
            raw = r'\import' + b'from x import y'.decode()
            x = 1; from .bs4.path import pyplot, \
                core, b_c, Thing
except ImportError:
    import six.core
    from numpy import b_c as ux
    with open('f') as fh:
        s = f'{1 + 1} import not_real'
        # import commented_out
        import _private.path, _private, i3.request as plt
        doc = """
import inside_string
from nowhere import x
"""
import i3
try:
    if cond:
        pass
        # import commented_out
        pass
        doc = """
import inside_string
from nowhere import x
"""
        try: import numpy,matplotlib.parse as alias_1,yaml.core as np
        except Exception: pass
    with ctx: import urllib.core.pyplot
    def func_81(a, b=1):
        x = 1; import six.parse, sys.client
        import bs4.parse
        from i3 import x
    import six.path
except ImportError:
    import yaml as pd,bs4.request as pd
    raw = r'\import' + b'from x import y'.decode()
    value = {'a': 1, 'import': 2}[
        'a']
    x = 1; import urllib
pass
