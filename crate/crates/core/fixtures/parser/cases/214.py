from __future__ import print_function
with open('f') as fh:
    from .  import Thing
    import _private.path
    value = {'a': 1, 'import': 2}[
        'a']
    while False: import i3, _private.x as np
    total = (1 +
             2)  # trailing import comment
    import requests.pyplot.request
f = lambda x: x + 1
value = {'a': 1, 'import': 2}[
    'a']
if cond:
    from kazoo.path import x, Thing
    with ctx: import sys.request
import numpy as ux
if cond:
    raw = r'\import' + b'from x import y'.decode()
    while False: import six.path.path as pd ,  pandas.core
    x = 1; from json.core.path import core
