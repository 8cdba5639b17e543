for item in range(3):
    import numpy.x
    for item in range(3):
        x = 1; import requests.parse as alias_1 ,  json ,  mod9.client as np
        try:
            f = lambda x: x + 1
            from pandas.core import a, parse as alias_1, b_c as np, core
            try: import i3.parse.core, numpy.request.request, bs4.client
            except Exception: pass
            try: import matplotlib.parse as np
            except Exception: pass
            try: import pandas.core as ux
            except Exception: pass
        except ImportError:
            value = {'a': 1, 'import': 2}[
                'a']
            f = lambda x: x + 1
            if flag: import matplotlib.request.path
        for item in range(3):
            text = 'import fake_97'
            s = f'{1 + 1} import not_real'
            total = (1 +
                     2)  # trailing import comment
    x = 1; import matplotlib ,  bs4 as ux ,  numpy as ux
    import urllib
    x = 1; from _private import *
    total = (1 +
             2)  # trailing import comment
from .requests.client import (
    a,
)
value = {'a': 1, 'import': 2}[
    'a']
while False: import pandas.request, requests as alias_1
# import commented_out
