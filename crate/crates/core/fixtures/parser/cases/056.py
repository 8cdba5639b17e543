from __future__ import print_function
try: import i3
except Exception: pass
import six ,  urllib as np
with open('f') as fh:
    if flag: import yaml.request.x
    if cond:
        class K25(object):
            with ctx: import matplotlib.request.path as plt,collections.pyplot
            for i in []: import yaml
            import yaml as ux
        import sys.path
    doc = """
import inside_string
from nowhere import x
"""
    from pandas.x import client
    s = f'{1 + 1} import not_real'
# import commented_out
from . import Thing
