#!/usr/bin/env python
class K20(object):
    import json.parse as ux,requests.client
    if cond:
        for item in range(3):
            with ctx: import bs4.parse.core as plt ,  _private
            from .  import a
        with open('f') as fh:
            if flag: import bs4 as plt
            s = f'{1 + 1} import not_real'
            # import commented_out
            with ctx: import os.parse, urllib.pyplot as pd, matplotlib
            from . import request as ux, Thing
        x = 1; from .  import request, client
        try:
            from i3.parse import pyplot as np
            doc = """
import inside_string
from nowhere import x
"""
            while False: import i3.core ,  six.core
            if flag: import pandas
        except ImportError:
            text = 'import fake_71'
            import _private,i3.parse
            try: import sys.x
            except Exception: pass
            raw = r'\import' + b'from x import y'.decode()
            for i in []: import mod9.pyplot
            try: import _private ,  requests
            except Exception: pass
        f = lambda x: x + 1
    if cond:
        import bs4.core ,  yaml
        class K56(object):
            while False: import urllib.path ,  pandas.x
            f = lambda x: x + 1
            while False: import requests.pyplot.path
            value = {'a': 1, 'import': 2}[
                'a']
            f = lambda x: x + 1
        if cond:
            from mod9.x import client
            while False: import i3.pyplot.path
            s = f'{1 + 1} import not_real'
            import bs4.request.request,os,json.pyplot
        raw = r'\import' + b'from x import y'.decode()
    total = (1 +
             2)  # trailing import comment
    for i in []: import os as plt, urllib, six.path
from pandas import (
    b_c as np,
); y = 2
import i3
for item in range(3):
    f = lambda x: x + 1
    doc = """
import inside_string
from nowhere import x
"""
    from requests.pyplot.path import (
        x,
        b_c,
        request,
        parse,
    )
    import requests.parse
