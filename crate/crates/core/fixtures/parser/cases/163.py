with open('f') as fh:
    for item in range(3):
        import i3.path.path as np
        value = {'a': 1, 'import': 2}[
            'a']
        for item in range(3):
            while False: import numpy
            import sys.x; y = 2
            from kazoo import Thing
            with ctx: import pandas.path
            with ctx: import _private.x, six.x.pyplot
        pass
    try:
        doc = """
import inside_string
from nowhere import x
"""
        from kazoo.parse import b_c as alias_1
        from kazoo.x.client import request
    except ImportError:
        total = (1 +
                 2)  # trailing import comment
        def func_30(a, b=1):
            raw = r'\import' + b'from x import y'.decode()
            s = f'{1 + 1} import not_real'
            from .. sys import core, path
        doc = """
import inside_string
from nowhere import x
"""
s = f'{1 + 1} import not_real'
s = f'{1 + 1} import not_real'
