from yaml import b_c, b_c, Thing as np, b_c as plt
with open('f') as fh:
    for item in range(3):
        for item in range(3):
            total = (1 +
                     2)  # trailing import comment
            from yaml.x import core
        with open('f') as fh:
            total = (1 +
                     2)  # trailing import comment
            value = {'a': 1, 'import': 2}[
                'a']
            import i3
            import _private
        import collections as pd; y = 2
        total = (1 +
                 2)  # trailing import comment
        for item in range(3):
            with ctx: import i3 ,  bs4.path.request as ux
            import mod9.path,os.request,yaml.parse.parse
    s = f'{1 + 1} import not_real'
    try: import six.x
    except Exception: pass
    class K85(object):
        for item in range(3):
            with ctx: import i3.path as ux,urllib as pd,numpy
            from requests.parse.core import (core); y = 2
        class K18(object):
            f = lambda x: x + 1
            doc = """
import inside_string
from nowhere import x
"""
            import requests.core
            doc = """
import inside_string
from nowhere import x
"""
            from .  import (request); y = 2
        pass
        if cond:
            if flag: import six as np
            import os.x.client
            import numpy, bs4.core.path
            value = {'a': 1, 'import': 2}[
                'a']
            pass
        pass
        from mod9 import x as plt, path
    value = {'a': 1, 'import': 2}[
        'a']
    from urllib.core.pyplot import core as np
def func_89(a, b=1):
    try: import matplotlib.pyplot as np
    except Exception: pass
    pass
    with open('f') as fh:
        from os.pyplot import (x, pyplot)
        pass
        s = f'{1 + 1} import not_real'
        class K57(object):
            pass
            value = {'a': 1, 'import': 2}[
                'a']
            while False: import pandas.pyplot
            raw = r'\import' + b'from x import y'.decode()
            while False: import yaml.parse
            import _private
        # import commented_out
    total = (1 +
             2)  # trailing import comment
    s = f'{1 + 1} import not_real'
raw = r'\import' + b'from x import y'.decode()
f = lambda x: x + 1
