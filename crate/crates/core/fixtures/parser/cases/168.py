def func_25(a, b=1):
    from requests.client.parse import *
    value = {'a': 1, 'import': 2}[
        'a']
    from requests import (pyplot)
try:
    value = {'a': 1, 'import': 2}[
        'a']
    import yaml.core
    raw = r'\import' + b'from x import y'.decode()
    import pandas ,  kazoo; y = 2
    try: import json,os.x as ux,collections.client
    except Exception: pass
    value = {'a': 1, 'import': 2}[
        'a']
except ImportError:
    # import commented_out
    class K32(object):
        doc = """
import inside_string
from nowhere import x
"""
        with open('f') as fh:
            x = 1; from numpy.request import (
                Thing,
                x,
            )
            from bs4 import a, pyplot as alias_1
            x = 1; from . import parse
            while False: import yaml.x
        from yaml.core import *
        with ctx: import matplotlib.path
        x = 1; from .requests.parse import core, core as plt
    s = f'{1 + 1} import not_real'
    from yaml.pyplot import path as plt
    for i in []: import six.core
    # import commented_out
f = lambda x: x + 1
from bs4 import request, core
import collections,json
