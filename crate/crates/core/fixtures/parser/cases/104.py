while False: import os.request,i3.x,yaml.x.x as pd
x = 1; from i3 import Thing as pd
from numpy.parse.path import *
if cond:
    def func_43(a, b=1):
        from matplotlib import (path)
        text = 'import fake_48'
        text = 'import fake_88'
        pass
        def func_62(a, b=1):
            import yaml.x as ux; y = 2
            s = f'{1 + 1} import not_real'
            value = {'a': 1, 'import': 2}[
                'a']
            from pandas import b_c, request
            import json.parse, bs4 as ux
    f = lambda x: x + 1
from . bs4 import request, b_c
x = 1; from urllib import client as ux
