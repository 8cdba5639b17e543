total = (1 +
         2)  # trailing import comment
with open('f') as fh:
    from numpy import *
    class K14(object):
        for i in []: import matplotlib.request as np
        from json.path import pyplot, Thing, pyplot, x
        for i in []: import i3,matplotlib.pyplot
        with open('f') as fh:
            from ._private import a, \
                x, path, client
            from _private.x import (
                path,
            )
            raw = r'\import' + b'from x import y'.decode()
            while False: import matplotlib.request.path,pandas as np
            import os.path.request
        if cond:
            doc = """
import inside_string
from nowhere import x
"""
            try: import requests.request
            except Exception: pass
            doc = """
import inside_string
from nowhere import x
"""
            doc = """
import inside_string
from nowhere import x
"""
    x = 1; import _private.parse
    pass
