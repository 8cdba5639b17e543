from __future__ import print_function
def func_85(a, b=1):
    from mod9.client import a
    try:
        def func_40(a, b=1):
            import collections.pyplot.request as ux ,  collections.client
            f = lambda x: x + 1
            from mod9 import (
                core,
                x,
                b_c,
                a,
            )
            import six.request as plt
        f = lambda x: x + 1
    except ImportError:
        pass
        total = (1 +
                 2)  # trailing import comment
        from kazoo import (parse as plt)
        class K98(object):
            import mod9 as np,requests as plt
            total = (1 +
                     2)  # trailing import comment
            try: import bs4.parse as pd
            except Exception: pass
            value = {'a': 1, 'import': 2}[
                'a']
        if flag: import _private as pd,collections.path,collections.client
        if cond:
            text = 'import fake_3'
            doc = """
import inside_string
from nowhere import x
"""
            for i in []: import bs4 ,  yaml.core
    s = f'{1 + 1} import not_real'
text = 'import fake_67'
s = f'{1 + 1} import not_real'
class K27(object):
    f = lambda x: x + 1
    from . numpy.request import path, pyplot
    x = 1; from six import a
