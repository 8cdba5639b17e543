#!/usr/bin/env python
text = 'import fake_68'
try:
    with ctx: import json.path, yaml
    doc = """
import inside_string
from nowhere import x
"""
    text = 'import fake_32'
    def func_35(a, b=1):
        x = 1; import numpy
        pass
    import i3 as ux, kazoo.path
    class K21(object):
        try: import sys.pyplot.x as plt, numpy as plt
        except Exception: pass
        try: import kazoo as ux
        except Exception: pass
except ImportError:
    pass
    if flag: import urllib.core as plt,json.x,i3.client
    text = 'import fake_38'
    for item in range(3):
        while False: import mod9.core.path
        if cond:
            import _private.pyplot as np
            from . _private.core import (
                parse,
            )
            while False: import sys.x.request as pd,json.client,sys
            f = lambda x: x + 1
            for i in []: import kazoo.parse ,  mod9.parse.parse ,  yaml
            if flag: import numpy.core.x,_private.core
        from .. six import (
            request,
        )
        from matplotlib.pyplot import (
            pyplot as pd,
            path,
            parse,
            a as ux,
        )
# import commented_out
from . matplotlib.x.core import a
pass
# import commented_out
